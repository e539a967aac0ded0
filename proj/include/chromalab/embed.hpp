#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "chromalab/graph.hpp"
#include "chromalab/metric.hpp"

namespace chromalab {

/// Place n vertices so that every target edge has length d. `metric` set
/// means the plane with that metric, empty means the hyperbolic plane
/// (positions returned in half-plane coordinates).
struct EmbedProblem {
    std::size_t vertex_count = 0;
    std::vector<Edge> edges;
    std::optional<MetricExpr> metric;
    double d = 1.0;
    int restarts = 64;
    double tol = 1e-8;

    /// Throws std::invalid_argument unless the graph is simple, n >= 2 and
    /// d, tol are positive.
    void validate() const;
};

struct EmbedResult {
    std::vector<Point2> positions;
    double max_residual = 0.0; // max over edges of |distance - d|
    bool converged = false;
    int restarts_used = 0;
};

/// Penalty sum over edges of (distance - d)^2, minimized by Nelder-Mead from
/// random starts. Restarts run in parallel; the converged result with the
/// lowest restart index wins, so the outcome depends only on the seed.
/// A failed search says nothing about whether an embedding exists.
EmbedResult embed_graph(const EmbedProblem& problem, std::uint64_t seed, unsigned threads = 0);

/// Max over edges of |distance - d| for given positions, measured directly.
double embedding_residual(const EmbedProblem& problem, const std::vector<Point2>& positions);

/// A triangle at distance 1. Throws std::invalid_argument unless the metric
/// is annotated proper.
EmbedResult triangle_witness(const AnnotatedMetric& metric, std::uint64_t seed, unsigned threads = 0);

} // namespace chromalab
