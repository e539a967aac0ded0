#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "chromalab/color_label.hpp"
#include "chromalab/metric.hpp"

// Geometry of the hyperbolic plane (curvature -1) in the upper half-plane
// model {(x, y) : y > 0} with metric y^-2 (dx^2 + dy^2).
namespace chromalab::hyperbolic {

struct HPoint {
    double x = 0.0;
    double y = 1.0;

    friend bool operator==(HPoint, HPoint) = default;
};

inline Point2 to_point2(HPoint p) { return {p.x, p.y}; }
inline HPoint from_point2(Point2 p) { return {p.x1, p.x2}; }

/// Throws std::invalid_argument unless y > 0 and both coordinates are finite.
void check_point(HPoint p);

/// 2 asinh(|p - q| / (2 sqrt(y_p y_q))), which equals
/// arcosh(1 + |p - q|^2 / (2 y_p y_q)) but stays accurate for tiny distances.
double distance(HPoint p, HPoint q);

/// Point at hyperbolic distance `radius` from `center`, at Euclidean angle
/// `theta` on the image circle (center (x, y cosh r), radius y sinh r).
/// The result is polished so that distance(center, result) matches `radius`
/// to within a few ulps of the coordinates.
HPoint circle_point(HPoint center, double radius, double theta);

/// Point reached from (0, 1) by a geodesic of length `s` leaving at angle
/// `heading` (radians) from the upward vertical. Headings measure true
/// hyperbolic angles at (0, 1).
HPoint polar_point(double s, double heading);

struct TileIndex {
    std::int64_t n = 0; // strip
    std::int64_t k = 0; // tile within the strip

    friend bool operator==(TileIndex, TileIndex) = default;
};

/// (h, l)-checkerboard: strips y in [e^{nh}, e^{(n+1)h}) cut into rectangles
/// x in [k w_n, (k+1) w_n) with w_n = r e^{nh}, where r = 2 sinh(l/2) makes
/// (0, 1) and (r, 1) exactly l apart. Boundaries are closed at the bottom and
/// on the left.
class Checkerboard {
public:
    Checkerboard(double h, double ell);

    double h() const { return h_; }
    double ell() const { return ell_; }
    double r() const { return r_; }

    /// e^{nh}; the single definition of strip boundaries used by tile_of.
    double strip_bottom(std::int64_t n) const;
    double tile_width(std::int64_t n) const { return r_ * strip_bottom(n); }

    TileIndex tile_of(HPoint p) const;

    /// max(l, h + e^{-h} l). Never attained.
    double diameter_bound() const;

private:
    double h_;
    double ell_;
    double r_;
};

inline Checkerboard checkerboard_new(double h, double ell) { return Checkerboard(h, ell); }

/// Coloring of a checkerboard by (n mod strip_period, k mod tile_period).
class CheckerboardColoring {
public:
    CheckerboardColoring(Checkerboard board, std::int64_t strip_period, std::int64_t tile_period);

    ColorLabel operator()(HPoint p) const;
    std::int64_t color_count() const { return strip_period_ * tile_period_; }
    std::pair<std::int64_t, std::int64_t> moduli() const { return {strip_period_, tile_period_}; }
    const Checkerboard& board() const { return board_; }

private:
    Checkerboard board_;
    std::int64_t strip_period_;
    std::int64_t tile_period_;
};

/// Smallest d for which the high-curvature coloring is defined: 3 ln 3.
double high_curvature_min_d();
/// Largest d for which the low-curvature coloring is defined: 2 ln(3/2).
double low_curvature_max_d();

/// (ln 3, d)-checkerboard colored by (n mod N, k mod 4), N = ceil(d / ln 3) + 1,
/// i.e. 4 ceil(d / ln 3) + 4 colors. Requires d >= 3 ln 3.
CheckerboardColoring high_curvature_coloring(double d);

/// (d/2, d/2)-checkerboard colored by (n mod 3, k mod 4). Requires
/// 0 < d <= 2 ln(3/2).
CheckerboardColoring low_curvature_coloring(double d);

inline ColorLabel color_high_curvature(double d, HPoint p) { return high_curvature_coloring(d)(p); }
inline ColorLabel color_low_curvature(double d, HPoint p) { return low_curvature_coloring(d)(p); }

/// Distance between the two apexes of a pair of equilateral triangles of
/// side d sharing an edge: 2 arcosh(cosh d / cosh(d/2)).
double equilateral_apex_distance(double d);

/// Moser spindle with every edge of hyperbolic length d, vertex order as in
/// kMoserSpindleEdges. Throws std::domain_error if the hinge angle cannot be
/// solved.
struct Spindle {
    std::array<HPoint, 7> points;
    std::array<std::pair<int, int>, 11> edges;
};
Spindle spindle_h2(double d);

/// Points equally spaced on a hyperbolic circle of radius d(1 + eps)/2 about
/// (0, 1), as many as fit with every pairwise distance in [d, d(1 + eps)].
/// Empty when no angular separation reaches distance d.
std::vector<HPoint> circle_clique(double d, double eps);

} // namespace chromalab::hyperbolic
