#include "chromalab/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

namespace chromalab {

std::size_t VertexSet::count() const
{
    std::size_t c = 0;
    for (auto w : words_)
        c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool VertexSet::empty() const
{
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

VertexSet& VertexSet::operator&=(const VertexSet& o)
{
    for (std::size_t i = 0; i < words_.size(); ++i)
        words_[i] &= o.words_[i];
    return *this;
}

GeoGraph::GeoGraph(std::size_t n, std::vector<Point2> points, Space space, std::string provenance)
    : rows_(n, VertexSet(n)), points_(std::move(points)), space_(space), provenance_(std::move(provenance))
{
}

void GeoGraph::add_edge(std::size_t i, std::size_t j)
{
    if (i == j)
        throw std::invalid_argument("self-loop at vertex " + std::to_string(i));
    if (rows_[i].test(j))
        return;
    rows_[i].set(j);
    rows_[j].set(i);
    ++edge_count_;
}

GeoGraph GeoGraph::from_edges(std::size_t n, std::span<const Edge> edges, std::vector<Point2> points,
                              Space space, std::string provenance)
{
    if (!points.empty() && points.size() != n)
        throw std::invalid_argument("point count does not match vertex count");
    GeoGraph g(n, std::move(points), space, std::move(provenance));
    for (auto [i, j] : edges) {
        if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
            throw std::invalid_argument("edge endpoint out of range");
        g.add_edge(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
    }
    return g;
}

std::vector<Edge> GeoGraph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (std::size_t i = 0; i < size(); ++i)
        rows_[i].for_each([&](std::size_t j) {
            if (j > i)
                out.emplace_back(static_cast<int>(i), static_cast<int>(j));
        });
    return out;
}

GeoGraph GeoGraph::without_vertex(std::size_t v) const
{
    const std::size_t n = size();
    std::vector<Point2> pts;
    if (!points_.empty()) {
        pts = points_;
        pts.erase(pts.begin() + static_cast<std::ptrdiff_t>(v));
    }
    GeoGraph g(n - 1, std::move(pts), space_, provenance_);
    auto shift = [v](std::size_t i) { return i > v ? i - 1 : i; };
    for (auto [i, j] : edges())
        if (static_cast<std::size_t>(i) != v && static_cast<std::size_t>(j) != v)
            g.add_edge(shift(static_cast<std::size_t>(i)), shift(static_cast<std::size_t>(j)));
    return g;
}

namespace {

void reject_duplicates(std::span<const Point2> points)
{
    std::vector<std::pair<double, double>> sorted;
    sorted.reserve(points.size());
    for (auto p : points)
        sorted.emplace_back(p.x1, p.x2);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate points in graph construction");
}

} // namespace

GeoGraph build_graph(std::span<const Point2> points, const MetricExpr& metric, const DistanceSet& distances)
{
    reject_duplicates(points);
    GeoGraph g(points.size(), {points.begin(), points.end()}, GeoGraph::Space::Plane,
               to_string(metric) + " in " + distances.to_string());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (distances.contains(metric(points[i], points[j])))
                g.add_edge(i, j);
    return g;
}

GeoGraph build_graph(std::span<const hyperbolic::HPoint> points, const DistanceSet& distances)
{
    std::vector<Point2> pts;
    pts.reserve(points.size());
    for (auto p : points) {
        hyperbolic::check_point(p);
        pts.push_back(hyperbolic::to_point2(p));
    }
    reject_duplicates(pts);
    GeoGraph g(points.size(), std::move(pts), GeoGraph::Space::Hyperbolic,
               "hyperbolic in " + distances.to_string());
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (distances.contains(hyperbolic::distance(points[i], points[j])))
                g.add_edge(i, j);
    return g;
}

FiniteK::FiniteK(std::vector<Point2> vectors) : vectors_(std::move(vectors))
{
    if (vectors_.empty())
        throw std::invalid_argument("K must be nonempty");
    std::map<std::pair<double, double>, int> counts;
    for (auto v : vectors_) {
        if (v.x1 == 0.0 && v.x2 == 0.0)
            throw std::invalid_argument("K must not contain 0");
        if (!std::isfinite(v.x1) || !std::isfinite(v.x2))
            throw std::invalid_argument("K vectors must be finite");
        if (++counts[{v.x1, v.x2}] > 1)
            throw std::invalid_argument("K contains a repeated vector");
    }
    for (auto v : vectors_)
        if (!counts.contains({-v.x1, -v.x2}))
            throw std::invalid_argument("K must be symmetric (missing -v)");
}

class FiniteKBuilder {
public:
    static GeoGraph build(std::span<const Point2> points, const FiniteK& k, double tol)
    {
        if (!(tol >= 0.0))
            throw std::invalid_argument("tolerance must be nonnegative");
        reject_duplicates(points);
        GeoGraph g(points.size(), {points.begin(), points.end()}, GeoGraph::Space::Plane,
                   "finite K with " + std::to_string(k.size()) + " vectors");
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j) {
                const Point2 diff = points[j] - points[i];
                for (auto v : k.vectors())
                    if ((diff - v).norm() <= tol) {
                        g.add_edge(i, j);
                        break;
                    }
            }
        return g;
    }
};

GeoGraph build_graph_finite_k(std::span<const Point2> points, const FiniteK& k, double tol)
{
    return FiniteKBuilder::build(points, k, tol);
}

} // namespace chromalab
