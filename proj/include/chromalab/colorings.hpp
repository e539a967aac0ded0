#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "chromalab/color_label.hpp"
#include "chromalab/hyperbolic.hpp"
#include "chromalab/metric.hpp"

namespace chromalab {

/// A total, deterministic rule assigning a color to every point of a plane.
/// For hyperbolic colorings the point holds half-plane coordinates (x, y).
/// `color_count` is empty for colorings with unboundedly many labels.
class Coloring {
public:
    using Rule = std::function<ColorLabel(Point2)>;

    Coloring(std::string name, Rule rule, std::optional<std::int64_t> color_count);

    const std::string& name() const { return name_; }
    std::optional<std::int64_t> color_count() const { return color_count_; }
    bool is_finite() const { return color_count_.has_value(); }

    ColorLabel operator()(Point2 p) const { return rule_(p); }

private:
    std::string name_;
    Rule rule_;
    std::optional<std::int64_t> color_count_;
};

/// A coloring of the real line.
class LineColoring {
public:
    using Rule = std::function<ColorLabel(double)>;

    LineColoring(std::string name, Rule rule, std::int64_t color_count);

    const std::string& name() const { return name_; }
    std::int64_t color_count() const { return color_count_; }
    ColorLabel operator()(double x) const { return rule_(x); }

private:
    std::string name_;
    Rule rule_;
    std::int64_t color_count_;
};

/// floor(x1) mod 2: vertical strips of width 1, closed on the left.
Coloring strip_coloring();

/// Squares [a eps, (a+1) eps) x [b eps, (b+1) eps) labelled (a mod n, b mod n).
Coloring grid_mod_coloring(double eps, std::int64_t n);

/// floor(x) mod n on the line.
LineColoring interval_1d_coloring(std::int64_t n);

/// Single color on the line.
LineColoring constant_line_coloring();

/// c(x1, x2) = (c1(x1), c2(x2)); proper for the sup-product whenever both
/// factors are proper for theirs.
Coloring product_coloring(const LineColoring& c1, const LineColoring& c2);

/// Label (floor(x1/side), floor(x2/side)) with no bound on the labels. Two
/// points sharing a square are less than side*sqrt(2) apart.
/// Throws std::invalid_argument unless side*sqrt(2) < 1.
Coloring countable_square_coloring(double side);

/// Constant coloring of the plane; the trivial baseline for verification.
Coloring constant_coloring();

/// Wraps a hyperbolic checkerboard coloring as a Coloring over (x, y).
Coloring as_coloring(const hyperbolic::CheckerboardColoring& c, std::string name);

/// Named coloring spec as used on the command line:
///   strip | constant | grid:eps=<e>,n=<n> | squares:side=<s>
///   | interval-product:d1=<a>,d2=<b>   (interval_1d(a+1) x interval_1d(b+1))
///   | high-curvature:d=<d> | low-curvature:d=<d>
Coloring parse_coloring(std::string_view text);

// ---------------------------------------------------------------------------
// Cliques

struct CliqueWitness {
    std::vector<Point2> points;
    MetricExpr metric;
    DistanceSet target;
    double max_residual = 0.0; // largest distance of any pair outside target (0 if none)
};

/// Largest distance from target over all pairs, measured with `metric`.
double clique_residual(const std::vector<Point2>& points, const MetricExpr& metric,
                       const DistanceSet& target);

/// Integer grid {0..d1} x {0..d2}; every pair is at product:d1,d2 distance 1.
CliqueWitness grid_clique(int d1, int d2);

/// Hexagonal unit lattice points inside a closed disc of diameter d, for the
/// best of three disc centers (lattice point, edge midpoint, triangle
/// centroid). All pairwise Euclidean distances lie in [1, d]. Requires d > 1.
CliqueWitness euclid_packing_clique(double d);

} // namespace chromalab
