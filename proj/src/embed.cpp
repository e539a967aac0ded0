#include "chromalab/embed.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <stdexcept>

#include "chromalab/hyperbolic.hpp"
#include "chromalab/nelder_mead.hpp"
#include "chromalab/parallel.hpp"
#include "chromalab/rng.hpp"

namespace chromalab {

void EmbedProblem::validate() const
{
    if (vertex_count < 2)
        throw std::invalid_argument("embedding needs at least two vertices");
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::invalid_argument("embedding distance must be positive");
    if (!(tol > 0.0))
        throw std::invalid_argument("embedding tolerance must be positive");
    if (restarts < 1)
        throw std::invalid_argument("need at least one restart");
    std::set<Edge> seen;
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= vertex_count ||
            static_cast<std::size_t>(j) >= vertex_count)
            throw std::invalid_argument("edge endpoint out of range");
        if (i == j)
            throw std::invalid_argument("self-loop in target graph");
        if (!seen.insert({std::min(i, j), std::max(i, j)}).second)
            throw std::invalid_argument("repeated edge in target graph");
    }
}

namespace {

// Vertex 0 is pinned at the origin (plane) or at (0, 1) (hyperbolic); the
// others contribute two free coordinates each. Hyperbolic vertices are
// stored as (x, ln y).
class Layout {
public:
    explicit Layout(const EmbedProblem& p) : p_(p) {}

    std::size_t dim() const { return 2 * (p_.vertex_count - 1); }

    std::vector<Point2> positions(std::span<const double> v) const
    {
        std::vector<Point2> out(p_.vertex_count);
        out[0] = p_.metric ? Point2{0.0, 0.0} : Point2{0.0, 1.0};
        for (std::size_t i = 1; i < p_.vertex_count; ++i) {
            const double a = v[2 * (i - 1)];
            const double b = v[2 * (i - 1) + 1];
            out[i] = p_.metric ? Point2{a, b} : Point2{a, std::exp(b)};
        }
        return out;
    }

    double length(Point2 a, Point2 b) const
    {
        if (p_.metric)
            return (*p_.metric)(a, b);
        return hyperbolic::distance(hyperbolic::from_point2(a), hyperbolic::from_point2(b));
    }

    double penalty(std::span<const double> v) const
    {
        const auto pos = positions(v);
        double sum = 0.0;
        for (auto [i, j] : p_.edges) {
            const double r = length(pos[i], pos[j]) - p_.d;
            sum += r * r;
        }
        return sum;
    }

    std::vector<double> random_start(RandomStream& rng) const
    {
        std::vector<double> v(dim());
        for (std::size_t k = 0; k < v.size(); k += 2) {
            if (p_.metric) {
                v[k] = rng.uniform(-2.0 * p_.d, 2.0 * p_.d);
                v[k + 1] = rng.uniform(-2.0 * p_.d, 2.0 * p_.d);
            } else {
                const double span = 4.0 * std::sinh(p_.d / 2.0) + 1.0;
                v[k] = rng.uniform(-span, span);
                v[k + 1] = rng.uniform(-1.5 * p_.d, 1.5 * p_.d);
            }
        }
        return v;
    }

    double start_step() const { return p_.metric ? 0.25 * p_.d : 0.25; }

    bool distinct(const std::vector<Point2>& pos) const
    {
        for (std::size_t i = 0; i < pos.size(); ++i)
            for (std::size_t j = i + 1; j < pos.size(); ++j) {
                const double sep = p_.metric ? (pos[i] - pos[j]).norm()
                                             : hyperbolic::distance(hyperbolic::from_point2(pos[i]),
                                                                    hyperbolic::from_point2(pos[j]));
                if (!(sep > 1e-9))
                    return false;
            }
        return true;
    }

private:
    const EmbedProblem& p_;
};

struct Attempt {
    std::vector<Point2> positions;
    double residual = std::numeric_limits<double>::infinity();
    bool converged = false;
};

Attempt run_restart(const EmbedProblem& problem, const Layout& layout, std::uint64_t seed, std::size_t index)
{
    RandomStream rng(seed, index);
    std::vector<double> x = layout.random_start(rng);
    const auto f = [&](std::span<const double> v) { return layout.penalty(v); };

    NelderMeadOptions opts;
    opts.initial_step = layout.start_step();
    opts.f_target = 0.01 * problem.tol * problem.tol;
    opts.x_tol = 1e-15;
    opts.max_evaluations = 4000 * static_cast<int>(layout.dim());

    // Restarting the simplex around the incumbent with a step matched to the
    // remaining error keeps the search from stalling on a degenerate simplex.
    double previous = std::numeric_limits<double>::infinity();
    int stalls = 0;
    for (int round = 0; round < 40; ++round) {
        const auto r = nelder_mead(f, x, opts);
        x = r.x;
        if (r.f <= opts.f_target)
            break;
        stalls = r.f > 0.999 * previous ? stalls + 1 : 0;
        if (stalls >= 3)
            break;
        previous = r.f;
        opts.initial_step = std::clamp(std::sqrt(r.f), 1e-10, layout.start_step());
    }

    Attempt out;
    out.positions = layout.positions(x);
    out.residual = embedding_residual(problem, out.positions);
    out.converged = out.residual <= problem.tol && layout.distinct(out.positions);
    return out;
}

} // namespace

double embedding_residual(const EmbedProblem& problem, const std::vector<Point2>& positions)
{
    const Layout layout(problem);
    double worst = 0.0;
    for (auto [i, j] : problem.edges)
        worst = std::max(worst, std::abs(layout.length(positions[i], positions[j]) - problem.d));
    return worst;
}

EmbedResult embed_graph(const EmbedProblem& problem, std::uint64_t seed, unsigned threads)
{
    problem.validate();
    const Layout layout(problem);
    const std::size_t total = static_cast<std::size_t>(problem.restarts);
    const std::size_t batch = threads == 0 ? worker_count() : threads;

    std::vector<Attempt> attempts(total);
    std::size_t done = 0;
    std::optional<std::size_t> winner;
    while (done < total && !winner) {
        const std::size_t count = std::min(batch, total - done);
        parallel_for(count, threads, [&](std::size_t k) {
            attempts[done + k] = run_restart(problem, layout, seed, done + k);
        });
        for (std::size_t k = done; k < done + count && !winner; ++k)
            if (attempts[k].converged)
                winner = k;
        done += count;
    }

    EmbedResult out;
    if (winner) {
        const Attempt& a = attempts[*winner];
        out.positions = a.positions;
        out.max_residual = a.residual;
        out.converged = true;
        out.restarts_used = static_cast<int>(*winner + 1);
        return out;
    }
    std::size_t best = 0;
    for (std::size_t k = 1; k < total; ++k)
        if (attempts[k].residual < attempts[best].residual)
            best = k;
    out.positions = attempts[best].positions;
    out.max_residual = attempts[best].residual;
    out.converged = false;
    out.restarts_used = static_cast<int>(total);
    return out;
}

EmbedResult triangle_witness(const AnnotatedMetric& metric, std::uint64_t seed, unsigned threads)
{
    if (!metric.is_proper)
        throw std::invalid_argument("triangle witness requires a proper metric; '" + metric.name + "' is not");
    EmbedProblem problem;
    problem.vertex_count = 3;
    problem.edges = {{0, 1}, {0, 2}, {1, 2}};
    problem.metric = metric.expr;
    problem.d = 1.0;
    return embed_graph(problem, seed, threads);
}

} // namespace chromalab
