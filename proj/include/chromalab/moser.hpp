#pragma once

#include <array>
#include <utility>

#include "chromalab/metric.hpp"

namespace chromalab {

/// Vertex order shared by every spindle embedding:
///   0 = hinge A; 1, 2 = side vertices of the first rhombus; 3 = its tip;
///   4, 5 = side vertices of the second rhombus; 6 = its tip.
inline constexpr std::array<std::pair<int, int>, 11> kMoserSpindleEdges{{
    {0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3},
    {0, 4}, {0, 5}, {4, 5}, {4, 6}, {5, 6},
    {3, 6},
}};

/// Unit-distance Moser spindle in the Euclidean plane.
std::array<Point2, 7> moser_spindle_e2();

} // namespace chromalab
