#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chromalab/hyperbolic.hpp"
#include "chromalab/metric.hpp"

namespace chromalab {

/// Fixed-size bitset over vertex indices.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t n) : n_(n), words_((n + 63) / 64, 0) {}

    std::size_t universe() const { return n_; }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    std::size_t count() const;
    bool empty() const;

    VertexSet& operator&=(const VertexSet& o);
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Calls f(i) for each member in increasing order.
    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits) {
                const int b = __builtin_ctzll(bits);
                f(w * 64 + static_cast<std::size_t>(b));
                bits &= bits - 1;
            }
        }
    }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

using Edge = std::pair<int, int>;

/// Finite graph whose vertices are points of a plane (Euclidean coordinates,
/// half-plane coordinates, or none for abstract graphs). Immutable once built.
class GeoGraph {
public:
    enum class Space { Plane, Hyperbolic, Abstract };

    /// Abstract or embedded graph from an explicit edge list. `points` may be
    /// empty; otherwise it must have n entries. Self-loops are rejected and
    /// duplicate edges merged.
    static GeoGraph from_edges(std::size_t n, std::span<const Edge> edges,
                               std::vector<Point2> points = {}, Space space = Space::Abstract,
                               std::string provenance = "edges");

    std::size_t size() const { return rows_.size(); }
    std::size_t edge_count() const { return edge_count_; }
    bool adjacent(std::size_t i, std::size_t j) const { return rows_[i].test(j); }
    const VertexSet& neighbors(std::size_t i) const { return rows_[i]; }
    std::size_t degree(std::size_t i) const { return rows_[i].count(); }

    /// Edges (i, j) with i < j in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<Point2>& points() const { return points_; }
    Space space() const { return space_; }
    const std::string& provenance() const { return provenance_; }

    /// Subgraph induced by removing vertex v (indices above v shift down).
    GeoGraph without_vertex(std::size_t v) const;

private:
    GeoGraph(std::size_t n, std::vector<Point2> points, Space space, std::string provenance);
    void add_edge(std::size_t i, std::size_t j);

    std::vector<VertexSet> rows_;
    std::size_t edge_count_ = 0;
    std::vector<Point2> points_;
    Space space_ = Space::Abstract;
    std::string provenance_;

    friend GeoGraph build_graph(std::span<const Point2>, const MetricExpr&, const DistanceSet&);
    friend GeoGraph build_graph(std::span<const hyperbolic::HPoint>, const DistanceSet&);
    friend class FiniteKBuilder;
};

/// Edge iff metric(p_i, p_j) lies in D (widened by D's tolerance).
/// Throws std::invalid_argument on duplicate points.
GeoGraph build_graph(std::span<const Point2> points, const MetricExpr& metric, const DistanceSet& distances);

/// Same with hyperbolic distance; points are stored as (x, y).
GeoGraph build_graph(std::span<const hyperbolic::HPoint> points, const DistanceSet& distances);

/// A finite symmetric set of nonzero difference vectors.
class FiniteK {
public:
    /// Throws std::invalid_argument if some v has no exact -v partner, if
    /// 0 is present, or if the set is empty.
    explicit FiniteK(std::vector<Point2> vectors);

    const std::vector<Point2>& vectors() const { return vectors_; }
    std::size_t size() const { return vectors_.size(); }

private:
    std::vector<Point2> vectors_;
};

/// Edge iff p_j - p_i is within `tol` (Euclidean) of some vector of K.
GeoGraph build_graph_finite_k(std::span<const Point2> points, const FiniteK& k, double tol = kDefaultTolerance);

} // namespace chromalab
