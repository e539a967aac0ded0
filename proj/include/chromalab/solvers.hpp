#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "chromalab/graph.hpp"

namespace chromalab {

/// Search effort is counted in branch-and-bound nodes, not wall time, so
/// results are reproducible.
struct SearchBudget {
    std::uint64_t max_nodes = 50'000'000;
};

inline constexpr std::size_t kDefaultVertexCap = 200;

struct ChromaticCertificate {
    int chi = 0;                 // best upper bound; exact iff `exact`
    int lower_bound = 0;         // == chi when exact
    std::vector<int> coloring;   // proper coloring with `chi` colors, 0-based
    std::vector<int> clique;     // clique certifying `lower_bound` (when exact, |clique| <= chi)
    bool exact = false;
    std::uint64_t nodes = 0;
};

/// Exact chromatic number by DSATUR branch and bound, seeded with a maximum
/// clique (lower bound, precolored) and a greedy coloring (upper bound).
/// Ties in vertex selection: saturation, then degree, then lowest index.
/// Throws std::invalid_argument above `vertex_cap` vertices.
ChromaticCertificate chromatic_number_exact(const GeoGraph& g, SearchBudget budget = {},
                                            std::size_t vertex_cap = kDefaultVertexCap);

struct CliqueResult {
    std::vector<int> vertices; // increasing order
    bool exact = false;
    std::uint64_t nodes = 0;
};

/// Maximum clique by branch and bound with greedy-coloring bounds.
CliqueResult max_clique(const GeoGraph& g, SearchBudget budget = {},
                        std::size_t vertex_cap = kDefaultVertexCap);

struct DegeneracyBound {
    int degeneracy = 0;
    int greedy_colors = 0;          // colors used by first-fit on the reversed smallest-last order
    std::vector<int> order;         // smallest-last removal order
    std::vector<int> coloring;

    int bound() const { return greedy_colors; }
};

/// Smallest-last ordering plus greedy coloring; greedy_colors <= degeneracy + 1.
DegeneracyBound greedy_degeneracy_bound(const GeoGraph& g);

/// Monochromatic edges (i < j); empty iff the coloring is proper.
std::vector<Edge> verify_coloring(const GeoGraph& g, std::span<const int> coloring);

} // namespace chromalab
