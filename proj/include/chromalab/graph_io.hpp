#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "chromalab/graph.hpp"
#include "chromalab/solvers.hpp"

namespace chromalab {

/// Text graph format:
///   n m
///   x y        (n point lines, optional for abstract graphs)
///   i j        (m edge lines, 0-based)
/// Blank lines and lines starting with '#' are ignored. The point section is
/// present iff the file has n + m data lines after the header.
struct GraphFile {
    std::size_t vertex_count = 0;
    std::vector<Point2> points; // empty for abstract graphs
    std::vector<Edge> edges;

    GeoGraph to_graph() const;
};

/// Throws std::runtime_error with a line number on malformed input.
GraphFile read_graph_file(std::istream& in);
GraphFile read_graph_file(const std::string& path);

void write_graph_file(std::ostream& out, const GeoGraph& g);

/// "# chi = k" (or "# chi <= k" and "# chi >= l" when the search was cut
/// short), then "vertex color" lines.
void write_certificate(std::ostream& out, const ChromaticCertificate& cert);

/// Finite difference-set file:
///   k p
///   x y        (k vectors of K)
///   x y        (p points)
struct FiniteKFile {
    std::vector<Point2> vectors;
    std::vector<Point2> points;
};
FiniteKFile read_finite_k_file(const std::string& path);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

} // namespace chromalab
