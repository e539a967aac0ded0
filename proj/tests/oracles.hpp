#pragma once

// Slow, obviously-correct reference computations used to check the library.
// Nothing here calls into the code under test.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

// Number of proper k-colorings, by enumerating all k^n assignments.
inline std::uint64_t count_proper_colorings(int n, const EdgeList& edges, int k)
{
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    std::uint64_t total = 0;
    for (;;) {
        bool ok = true;
        for (auto [i, j] : edges)
            if (c[i] == c[j]) {
                ok = false;
                break;
            }
        if (ok)
            ++total;
        int pos = 0;
        while (pos < n && ++c[pos] == k)
            c[pos++] = 0;
        if (pos == n)
            break;
    }
    return total;
}

// Plain backtracking k-colorability, vertices in index order.
inline bool colorable(int n, const EdgeList& edges, int k)
{
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [i, j] : edges) {
        adj[i].push_back(j);
        adj[j].push_back(i);
    }
    std::vector<int> c(static_cast<std::size_t>(n), -1);
    std::function<bool(int)> go = [&](int v) {
        if (v == n)
            return true;
        for (int col = 0; col < k; ++col) {
            bool free = true;
            for (int u : adj[v])
                if (c[u] == col)
                    free = false;
            if (!free)
                continue;
            c[v] = col;
            if (go(v + 1))
                return true;
            c[v] = -1;
        }
        return false;
    };
    return go(0);
}

inline int chromatic_number(int n, const EdgeList& edges)
{
    int k = 0;
    while (!colorable(n, edges, k))
        ++k;
    return k;
}

// Largest clique by checking every subset.
inline int clique_number(int n, const EdgeList& edges)
{
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
    for (auto [i, j] : edges) {
        adj[i] |= 1u << j;
        adj[j] |= 1u << i;
    }
    int best = 0;
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        bool ok = true;
        for (int v = 0; v < n && ok; ++v)
            if ((s >> v) & 1u)
                ok = ((adj[v] | (1u << v)) & s) == s;
        if (ok)
            best = std::max(best, __builtin_popcount(s));
    }
    return best;
}

// Degeneracy: repeatedly delete a minimum-degree vertex.
inline int degeneracy(int n, const EdgeList& edges)
{
    std::vector<std::vector<bool>> a(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (auto [i, j] : edges)
        a[i][j] = a[j][i] = true;
    std::vector<bool> alive(static_cast<std::size_t>(n), true);
    int best = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_deg = 0;
        for (int v = 0; v < n; ++v) {
            if (!alive[v])
                continue;
            int deg = 0;
            for (int u = 0; u < n; ++u)
                deg += alive[u] && a[v][u];
            if (pick < 0 || deg < pick_deg) {
                pick = v;
                pick_deg = deg;
            }
        }
        best = std::max(best, pick_deg);
        alive[pick] = false;
    }
    return best;
}

// Hyperbolic length of the geodesic between two half-plane points, by
// integrating |dz| / y along it with composite Simpson.
inline double geodesic_length(double x1, double y1, double x2, double y2, int steps = 20000)
{
    auto simpson = [steps](auto f, double a, double b) {
        const double h = (b - a) / steps;
        double s = f(a) + f(b);
        for (int i = 1; i < steps; ++i)
            s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
        return s * h / 3.0;
    };
    if (x1 == x2) {
        // ds = dy / y; integrate in t = ln y to stay well conditioned
        return std::abs(simpson([](double) { return 1.0; }, std::log(y1), std::log(y2)));
    }
    const double c = ((x2 * x2 + y2 * y2) - (x1 * x1 + y1 * y1)) / (2.0 * (x2 - x1));
    const double t1 = std::atan2(y1, x1 - c);
    const double t2 = std::atan2(y2, x2 - c);
    // On the arc (c + R cos t, R sin t), |dz| / y = dt / sin t.
    return std::abs(simpson([](double t) { return 1.0 / std::sin(t); }, t1, t2));
}

// Apexes of the two equilateral triangles of side d on the segment from
// (0, 1) to (0, e^d), found by intersecting the image circles of the two
// hyperbolic circles of radius d. Returns their hyperbolic distance.
inline double apex_distance_by_construction(double d)
{
    // Hyperbolic circle about (0, y0) of radius r: Euclidean center
    // (0, y0 cosh r), Euclidean radius y0 sinh r.
    const double ca = std::cosh(d), ra = std::sinh(d);
    const double cb = std::exp(d) * std::cosh(d), rb = std::exp(d) * std::sinh(d);
    // Intersections of x^2 + (y - ca)^2 = ra^2 and x^2 + (y - cb)^2 = rb^2.
    const double y = (rb * rb - ra * ra - cb * cb + ca * ca) / (2.0 * (ca - cb));
    const double x = std::sqrt(ra * ra - (y - ca) * (y - ca));
    // Distance between (-x, y) and (x, y).
    return std::acosh(1.0 + (2.0 * x) * (2.0 * x) / (2.0 * y * y));
}

inline double hyperbolic_distance(double x1, double y1, double x2, double y2)
{
    const double dx = x1 - x2, dy = y1 - y2;
    return std::acosh(1.0 + (dx * dx + dy * dy) / (2.0 * y1 * y2));
}

// Points of the unit hexagonal lattice a (1, 0) + b (1/2, sqrt3/2) within
// Euclidean distance r of c, counted by scanning a generous box.
inline int hex_points_in_disc(double cx, double cy, double r)
{
    const int m = static_cast<int>(std::ceil(2.0 * r)) + 3;
    int count = 0;
    for (int a = -m - static_cast<int>(std::abs(cx)) - 2; a <= m + static_cast<int>(std::abs(cx)) + 2; ++a)
        for (int b = -m; b <= m; ++b) {
            const double x = a + 0.5 * b;
            const double y = b * std::sqrt(3.0) / 2.0;
            if (std::hypot(x - cx, y - cy) <= r)
                ++count;
        }
    return count;
}

} // namespace oracle
