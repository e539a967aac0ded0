#include "chromalab/verification.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <tuple>

#include "chromalab/graph_io.hpp"
#include "chromalab/parallel.hpp"

namespace chromalab {

Window default_plane_window() { return {-50.0, 50.0, -50.0, 50.0}; }

Window default_hyperbolic_window() { return {-50.0, 50.0, std::exp(-5.0), std::exp(5.0)}; }

SampleSpec SampleSpec::plane(MetricExpr metric, DistanceSet distances, std::uint64_t samples, std::uint64_t seed)
{
    return {SampleSpace::Plane, std::move(metric), distances, default_plane_window(), samples, seed};
}

SampleSpec SampleSpec::hyperbolic(DistanceSet distances, std::uint64_t samples, std::uint64_t seed)
{
    return {SampleSpace::Hyperbolic, std::nullopt, distances, default_hyperbolic_window(), samples, seed};
}

void SampleSpec::validate() const
{
    if (samples < 1)
        throw std::invalid_argument("need at least one sample");
    if (streams < 1)
        throw std::invalid_argument("need at least one stream");
    if (!(window.x_min < window.x_max) || !(window.y_min < window.y_max))
        throw std::invalid_argument("sampling window is degenerate");
    if (space == SampleSpace::Plane && !metric)
        throw std::invalid_argument("plane sampling needs a metric");
    if (space == SampleSpace::Hyperbolic && !(window.y_min > 0.0))
        throw std::invalid_argument("hyperbolic window must lie in y > 0");
}

std::optional<SampledPair> sample_pair(const SampleSpec& spec, RandomStream& rng)
{
    const Window& w = spec.window;
    const DistanceSet& D = spec.distances;

    if (spec.space == SampleSpace::Hyperbolic) {
        const hyperbolic::HPoint c{rng.uniform(w.x_min, w.x_max),
                                   std::exp(rng.uniform(std::log(w.y_min), std::log(w.y_max)))};
        const double target = D.kind() == DistanceSet::Kind::Singleton ? D.lower()
                                                                        : rng.uniform(D.lower(), D.upper());
        const auto q = hyperbolic::circle_point(c, target, rng.uniform(0.0, 2.0 * std::numbers::pi));
        const double measured = hyperbolic::distance(c, q);
        if (!D.contains(measured))
            throw std::logic_error("hyperbolic sampler produced distance " + format_double(measured) +
                                   " outside " + D.to_string());
        return SampledPair{hyperbolic::to_point2(c), hyperbolic::to_point2(q), measured};
    }

    const Point2 x{rng.uniform(w.x_min, w.x_max), rng.uniform(w.y_min, w.y_max)};
    const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
    const Point2 dir{std::cos(angle), std::sin(angle)};
    const double position = rng.uniform01();
    const double t_max = std::hypot(w.x_max - w.x_min, w.y_max - w.y_min);
    const auto sol = ray_solve_distance(*spec.metric, x, dir, D, position, t_max);
    if (!sol.t)
        return std::nullopt;
    const Point2 q = x + *sol.t * dir;
    const double measured = (*spec.metric)(x, q);
    if (!D.contains(measured))
        throw std::logic_error("planar sampler produced distance " + format_double(measured) + " outside " +
                               D.to_string());
    return SampledPair{x, q, measured};
}

namespace {

bool violation_less(const Violation& a, const Violation& b)
{
    return std::tie(a.p.x1, a.p.x2, a.q.x1, a.q.x2) < std::tie(b.p.x1, b.p.x2, b.q.x1, b.q.x2);
}

} // namespace

VerificationReport verify_statistical(const Coloring& coloring, const SampleSpec& spec, unsigned threads)
{
    spec.validate();
    const std::size_t streams = static_cast<std::size_t>(std::min<std::uint64_t>(spec.streams, spec.samples));
    std::vector<VerificationReport> partial(streams);

    parallel_for(streams, threads, [&](std::size_t s) {
        const std::uint64_t quota = spec.samples / streams + (s < spec.samples % streams ? 1 : 0);
        RandomStream rng(spec.master_seed, s);
        VerificationReport& r = partial[s];
        for (std::uint64_t i = 0; i < quota; ++i) {
            ++r.samples_attempted;
            const auto pair = sample_pair(spec, rng);
            if (!pair)
                continue;
            ++r.samples_realized;
            const ColorLabel a = coloring(pair->p);
            if (a != coloring(pair->q))
                continue;
            ++r.violation_count;
            if (r.violations.size() < spec.max_recorded)
                r.violations.push_back({pair->p, pair->q, pair->distance, a});
        }
    });

    VerificationReport out;
    out.rng_streams_used = streams;
    for (auto& r : partial) {
        out.samples_attempted += r.samples_attempted;
        out.samples_realized += r.samples_realized;
        out.violation_count += r.violation_count;
        out.violations.insert(out.violations.end(), r.violations.begin(), r.violations.end());
    }
    std::sort(out.violations.begin(), out.violations.end(), violation_less);
    if (out.violations.size() > spec.max_recorded)
        out.violations.resize(spec.max_recorded);
    return out;
}

void write_report_csv(std::ostream& out, const VerificationReport& report)
{
    out << "p_x,p_y,q_x,q_y,distance,label\n";
    for (const auto& v : report.violations)
        out << format_double(v.p.x1) << ',' << format_double(v.p.x2) << ',' << format_double(v.q.x1) << ','
            << format_double(v.q.x2) << ',' << format_double(v.distance) << ",\"" << v.label.to_string()
            << "\"\n";
    out << "# summary: attempted=" << report.samples_attempted << " realized=" << report.samples_realized
        << " violations=" << report.violation_count << " streams=" << report.rng_streams_used << '\n';
}

namespace {

// Pushes mass towards 0 and 1 so that tile corners are well covered.
double edge_biased(RandomStream& rng)
{
    const double u = rng.uniform01();
    if (rng.uniform01() < 0.5)
        return u;
    return u < 0.5 ? 0.5 * std::pow(2.0 * u, 4.0) : 1.0 - 0.5 * std::pow(2.0 * (1.0 - u), 4.0);
}

} // namespace

TileDiameterReport verify_tile_diameter(const hyperbolic::Checkerboard& board, std::uint64_t samples,
                                        std::uint64_t seed)
{
    TileDiameterReport out;
    out.bound = board.diameter_bound();
    RandomStream rng(seed, 0);
    while (out.samples < samples) {
        const auto n = static_cast<std::int64_t>(std::floor(rng.uniform(-5.0, 6.0)));
        const auto k = static_cast<std::int64_t>(std::floor(rng.uniform(-20.0, 21.0)));
        const double bottom = board.strip_bottom(n);
        const double top = board.strip_bottom(n + 1);
        const double width = board.tile_width(n);
        const double left = static_cast<double>(k) * width;
        auto draw = [&] {
            return hyperbolic::HPoint{left + edge_biased(rng) * width, bottom + edge_biased(rng) * (top - bottom)};
        };
        const auto p = draw();
        const auto q = draw();
        const hyperbolic::TileIndex tile{n, k};
        if (!(board.tile_of(p) == tile) || !(board.tile_of(q) == tile))
            continue;
        ++out.samples;
        const double dist = hyperbolic::distance(p, q);
        out.max_distance = std::max(out.max_distance, dist);
        if (dist >= out.bound)
            ++out.violations;
    }
    return out;
}

} // namespace chromalab
