#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "chromalab/solvers.hpp"

namespace chromalab {

namespace {

class CliqueSearch {
public:
    CliqueSearch(const GeoGraph& g, SearchBudget budget) : g_(g), budget_(budget) {}

    CliqueResult run()
    {
        std::vector<int> order(g_.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return g_.degree(a) > g_.degree(b); });
        // greedy seed so an aborted search still reports a real clique
        for (int v : order)
            if (std::all_of(best_.begin(), best_.end(), [&](int u) { return g_.adjacent(u, v); }))
                best_.push_back(v);
        std::vector<int> current;
        if (!order.empty())
            expand(current, order);

        CliqueResult out;
        out.vertices = best_;
        std::sort(out.vertices.begin(), out.vertices.end());
        out.exact = !aborted_;
        out.nodes = nodes_;
        return out;
    }

private:
    // Greedy coloring of `p` in its given order; returns vertices regrouped by
    // color class with the (1-based) class number of each.
    void number_sort(const std::vector<int>& p, std::vector<int>& sorted, std::vector<int>& bound) const
    {
        std::vector<std::vector<int>> classes;
        for (int v : p) {
            std::size_t c = 0;
            for (; c < classes.size(); ++c) {
                const auto& cls = classes[c];
                if (std::none_of(cls.begin(), cls.end(), [&](int u) { return g_.adjacent(u, v); }))
                    break;
            }
            if (c == classes.size())
                classes.emplace_back();
            classes[c].push_back(v);
        }
        sorted.clear();
        bound.clear();
        for (std::size_t c = 0; c < classes.size(); ++c)
            for (int v : classes[c]) {
                sorted.push_back(v);
                bound.push_back(static_cast<int>(c) + 1);
            }
    }

    void expand(std::vector<int>& current, const std::vector<int>& p)
    {
        if (aborted_)
            return;
        if (++nodes_ > budget_.max_nodes) {
            aborted_ = true;
            return;
        }
        std::vector<int> sorted;
        std::vector<int> bound;
        number_sort(p, sorted, bound);

        for (std::size_t idx = sorted.size(); idx-- > 0;) {
            if (current.size() + static_cast<std::size_t>(bound[idx]) <= best_.size())
                return;
            const int v = sorted[idx];
            current.push_back(v);
            std::vector<int> next;
            for (std::size_t j = 0; j < idx; ++j)
                if (g_.adjacent(v, sorted[j]))
                    next.push_back(sorted[j]);
            if (next.empty()) {
                if (current.size() > best_.size())
                    best_ = current;
            } else {
                expand(current, next);
            }
            current.pop_back();
            if (aborted_)
                return;
        }
    }

    const GeoGraph& g_;
    SearchBudget budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<int> best_;
};

} // namespace

CliqueResult max_clique(const GeoGraph& g, SearchBudget budget, std::size_t vertex_cap)
{
    if (g.size() > vertex_cap)
        throw std::invalid_argument("graph exceeds the vertex cap of " + std::to_string(vertex_cap));
    return CliqueSearch(g, budget).run();
}

DegeneracyBound greedy_degeneracy_bound(const GeoGraph& g)
{
    const std::size_t n = g.size();
    std::vector<int> deg(n);
    for (std::size_t i = 0; i < n; ++i)
        deg[i] = static_cast<int>(g.degree(i));
    std::vector<bool> removed(n, false);

    DegeneracyBound out;
    out.order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        int v = -1;
        for (std::size_t i = 0; i < n; ++i)
            if (!removed[i] && (v < 0 || deg[i] < deg[v]))
                v = static_cast<int>(i);
        out.degeneracy = std::max(out.degeneracy, deg[v]);
        removed[v] = true;
        out.order.push_back(v);
        g.neighbors(v).for_each([&](std::size_t u) {
            if (!removed[u])
                --deg[u];
        });
    }

    out.coloring.assign(n, -1);
    std::vector<bool> taken;
    for (auto it = out.order.rbegin(); it != out.order.rend(); ++it) {
        const int v = *it;
        taken.assign(n + 1, false);
        g.neighbors(v).for_each([&](std::size_t u) {
            if (out.coloring[u] >= 0)
                taken[out.coloring[u]] = true;
        });
        int c = 0;
        while (taken[c])
            ++c;
        out.coloring[v] = c;
        out.greedy_colors = std::max(out.greedy_colors, c + 1);
    }
    return out;
}

std::vector<Edge> verify_coloring(const GeoGraph& g, std::span<const int> coloring)
{
    if (coloring.size() != g.size())
        throw std::invalid_argument("coloring must assign every vertex");
    std::vector<Edge> bad;
    for (auto [i, j] : g.edges())
        if (coloring[i] == coloring[j])
            bad.emplace_back(i, j);
    return bad;
}

} // namespace chromalab
