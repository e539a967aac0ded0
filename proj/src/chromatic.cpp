#include <algorithm>
#include <stdexcept>

#include "chromalab/solvers.hpp"

namespace chromalab {

namespace {

class DsaturSearch {
public:
    DsaturSearch(const GeoGraph& g, SearchBudget budget)
        : g_(g), n_(g.size()), budget_(budget), color_(n_, -1), sat_(n_, 0), count_(n_ * n_, 0), degree_(n_)
    {
        for (std::size_t v = 0; v < n_; ++v)
            degree_[v] = static_cast<int>(g.degree(v));
    }

    // Plain DSATUR without backtracking.
    std::vector<int> greedy()
    {
        for (std::size_t step = 0; step < n_; ++step) {
            const int v = select();
            int c = 0;
            while (count_[idx(v, c)] > 0)
                ++c;
            assign(v, c);
        }
        auto out = color_;
        for (std::size_t v = 0; v < n_; ++v)
            unassign(static_cast<int>(v));
        return out;
    }

    void solve(const std::vector<int>& clique, int lower, int upper, std::vector<int> upper_coloring)
    {
        lower_ = lower;
        best_ = upper;
        best_coloring_ = std::move(upper_coloring);
        if (lower_ >= best_)
            return;
        for (std::size_t i = 0; i < clique.size(); ++i)
            assign(clique[i], static_cast<int>(i));
        dfs(clique.size(), static_cast<int>(clique.size()));
    }

    int best() const { return best_; }
    const std::vector<int>& best_coloring() const { return best_coloring_; }
    bool aborted() const { return aborted_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    std::size_t idx(int v, int c) const { return static_cast<std::size_t>(v) * n_ + static_cast<std::size_t>(c); }

    void assign(int v, int c)
    {
        color_[v] = c;
        g_.neighbors(v).for_each([&](std::size_t u) {
            if (count_[idx(static_cast<int>(u), c)]++ == 0)
                ++sat_[u];
        });
    }

    void unassign(int v)
    {
        const int c = color_[v];
        color_[v] = -1;
        g_.neighbors(v).for_each([&](std::size_t u) {
            if (--count_[idx(static_cast<int>(u), c)] == 0)
                --sat_[u];
        });
    }

    int select() const
    {
        int best = -1;
        for (std::size_t i = 0; i < n_; ++i) {
            if (color_[i] >= 0)
                continue;
            const int v = static_cast<int>(i);
            if (best < 0 || sat_[v] > sat_[best] || (sat_[v] == sat_[best] && degree_[v] > degree_[best]))
                best = v;
        }
        return best;
    }

    void dfs(std::size_t colored, int used)
    {
        if (aborted_ || used >= best_)
            return;
        if (++nodes_ > budget_.max_nodes) {
            aborted_ = true;
            return;
        }
        if (colored == n_) {
            best_ = used;
            best_coloring_ = color_;
            return;
        }
        const int v = select();
        for (int c = 0; c < used; ++c) {
            if (count_[idx(v, c)] > 0)
                continue;
            assign(v, c);
            dfs(colored + 1, used);
            unassign(v);
            if (aborted_ || best_ <= lower_ || used >= best_)
                return;
        }
        if (used + 1 < best_) {
            assign(v, used);
            dfs(colored + 1, used + 1);
            unassign(v);
        }
    }

    const GeoGraph& g_;
    std::size_t n_;
    SearchBudget budget_;
    std::vector<int> color_;
    std::vector<int> sat_;
    std::vector<int> count_;
    std::vector<int> degree_;

    int lower_ = 0;
    int best_ = 0;
    std::vector<int> best_coloring_;
    bool aborted_ = false;
    std::uint64_t nodes_ = 0;
};

int colors_used(const std::vector<int>& coloring)
{
    return coloring.empty() ? 0 : *std::max_element(coloring.begin(), coloring.end()) + 1;
}

} // namespace

ChromaticCertificate chromatic_number_exact(const GeoGraph& g, SearchBudget budget, std::size_t vertex_cap)
{
    if (g.size() > vertex_cap)
        throw std::invalid_argument("graph exceeds the vertex cap of " + std::to_string(vertex_cap));

    ChromaticCertificate cert;
    if (g.size() == 0) {
        cert.exact = true;
        return cert;
    }

    const CliqueResult clique = max_clique(g, budget, vertex_cap);

    DsaturSearch search(g, budget);
    std::vector<int> upper = search.greedy();
    auto degen = greedy_degeneracy_bound(g);
    if (degen.greedy_colors < colors_used(upper))
        upper = degen.coloring;

    const int lower = static_cast<int>(clique.vertices.size());
    search.solve(clique.vertices, lower, colors_used(upper), upper);

    cert.chi = search.best();
    cert.coloring = search.best_coloring();
    cert.clique = clique.vertices;
    cert.exact = !search.aborted();
    cert.lower_bound = cert.exact ? cert.chi : lower;
    cert.nodes = clique.nodes + search.nodes();
    return cert;
}

} // namespace chromalab
