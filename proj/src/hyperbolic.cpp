#include "chromalab/hyperbolic.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

#include "chromalab/moser.hpp"

namespace chromalab::hyperbolic {

void check_point(HPoint p)
{
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !(p.y > 0.0))
        throw std::invalid_argument("half-plane point needs finite coordinates and y > 0");
}

double distance(HPoint p, HPoint q)
{
    const double chord = std::hypot(p.x - q.x, p.y - q.y);
    return 2.0 * std::asinh(chord / (2.0 * std::sqrt(p.y * q.y)));
}

namespace {

// Newton polish of one coordinate of p towards distance(c, p) == radius.
// cosh(rho) = 1 + (dx^2 + dy^2) / (2 cy y); derivatives follow directly.
HPoint polish(HPoint c, HPoint p, double radius, bool move_y)
{
    for (int iter = 0; iter < 3; ++iter) {
        const double rho = distance(c, p);
        const double err = rho - radius;
        if (err == 0.0)
            break;
        const double sh = std::sinh(rho);
        if (!(sh > 0.0))
            break;
        const double dx = p.x - c.x;
        const double dy = p.y - c.y;
        const double denom = c.y * p.y;
        const double dg = move_y ? dy / denom - (dx * dx + dy * dy) / (2.0 * denom * p.y) : dx / denom;
        const double slope = dg / sh;
        if (!(std::fabs(slope) > 0.0) || !std::isfinite(slope))
            break;
        HPoint next = p;
        if (move_y)
            next.y -= err / slope;
        else
            next.x -= err / slope;
        if (!(next.y > 0.0) || !std::isfinite(next.x))
            break;
        if (std::fabs(distance(c, next) - radius) >= std::fabs(err))
            break;
        p = next;
    }
    return p;
}

} // namespace

HPoint circle_point(HPoint center, double radius, double theta)
{
    if (!(radius >= 0.0))
        throw std::invalid_argument("circle radius must be nonnegative");
    if (radius == 0.0)
        return center;
    const double sh = std::sinh(radius);
    // cosh r + sinh r sin(t) = e^{-r} + 2 sinh r sin^2(t/2 + pi/4): no cancellation
    // near the bottom of the circle.
    const double s = std::sin(0.5 * theta + 0.25 * std::numbers::pi);
    const HPoint raw{center.x + center.y * sh * std::cos(theta),
                     center.y * (std::exp(-radius) + 2.0 * sh * s * s)};

    HPoint best = raw;
    double best_err = std::fabs(distance(center, raw) - radius);
    for (bool move_y : {true, false}) {
        const HPoint cand = polish(center, raw, radius, move_y);
        const double err = std::fabs(distance(center, cand) - radius);
        if (err < best_err) {
            best = cand;
            best_err = err;
        }
    }
    return best;
}

HPoint polar_point(double s, double heading)
{
    // z -> (cos t z + sin t) / (-sin t z + cos t) rotates by 2t about i.
    const double t = 0.5 * heading;
    const std::complex<double> w{0.0, std::exp(s)};
    const std::complex<double> z = (std::cos(t) * w + std::sin(t)) / (-std::sin(t) * w + std::cos(t));
    return {z.real(), z.imag()};
}

// ---------------------------------------------------------------------------
// Checkerboards

Checkerboard::Checkerboard(double h, double ell) : h_(h), ell_(ell), r_(2.0 * std::sinh(ell / 2.0))
{
    if (!std::isfinite(h) || !std::isfinite(ell) || !(h > 0.0) || !(ell > 0.0))
        throw std::invalid_argument("checkerboard needs h > 0 and l > 0");
}

double Checkerboard::strip_bottom(std::int64_t n) const
{
    return std::exp(static_cast<double>(n) * h_);
}

TileIndex Checkerboard::tile_of(HPoint p) const
{
    auto n = static_cast<std::int64_t>(std::floor(std::log(p.y) / h_));
    while (p.y < strip_bottom(n))
        --n;
    while (p.y >= strip_bottom(n + 1))
        ++n;

    const double w = tile_width(n);
    auto k = static_cast<std::int64_t>(std::floor(p.x / w));
    while (p.x < static_cast<double>(k) * w)
        --k;
    while (p.x >= static_cast<double>(k + 1) * w)
        ++k;
    return {n, k};
}

double Checkerboard::diameter_bound() const
{
    return std::max(ell_, h_ + std::exp(-h_) * ell_);
}

CheckerboardColoring::CheckerboardColoring(Checkerboard board, std::int64_t strip_period,
                                           std::int64_t tile_period)
    : board_(board), strip_period_(strip_period), tile_period_(tile_period)
{
    if (strip_period < 1 || tile_period < 1)
        throw std::invalid_argument("coloring periods must be positive");
}

ColorLabel CheckerboardColoring::operator()(HPoint p) const
{
    const TileIndex t = board_.tile_of(p);
    return {floor_mod(t.n, strip_period_), floor_mod(t.k, tile_period_)};
}

double high_curvature_min_d() { return 3.0 * std::log(3.0); }
double low_curvature_max_d() { return 2.0 * std::log(1.5); }

namespace {

constexpr double kBoundarySlack = 1e-12;

// ceil that treats values within rounding of an integer as that integer,
// so that ceil(3 ln 3 / ln 3) is 3.
std::int64_t ceil_snapped(double q)
{
    const double nearest = std::round(q);
    if (std::fabs(q - nearest) <= kBoundarySlack * std::max(1.0, std::fabs(q)))
        return static_cast<std::int64_t>(nearest);
    return static_cast<std::int64_t>(std::ceil(q));
}

} // namespace

CheckerboardColoring high_curvature_coloring(double d)
{
    if (!std::isfinite(d) || d < high_curvature_min_d() * (1.0 - kBoundarySlack))
        throw std::invalid_argument("high-curvature coloring needs d >= 3 ln 3");
    const double ln3 = std::log(3.0);
    const std::int64_t strips = ceil_snapped(d / ln3) + 1;
    return CheckerboardColoring(Checkerboard(ln3, d), strips, 4);
}

CheckerboardColoring low_curvature_coloring(double d)
{
    if (!std::isfinite(d) || !(d > 0.0) || d > low_curvature_max_d() * (1.0 + kBoundarySlack))
        throw std::invalid_argument("low-curvature coloring needs 0 < d <= 2 ln(3/2)");
    return CheckerboardColoring(Checkerboard(d / 2.0, d / 2.0), 3, 4);
}

// ---------------------------------------------------------------------------
// Equilateral triangles, spindles, circles

double equilateral_apex_distance(double d)
{
    if (!(d > 0.0))
        throw std::invalid_argument("side length must be positive");
    // cosh(a) - 1 = (cosh d - cosh(d/2)) / cosh(d/2) = 2 sinh(3d/4) sinh(d/4) / cosh(d/2)
    // and the apexes are 2a apart; this form keeps full precision as d -> 0.
    const double s = std::sqrt(std::sinh(0.75 * d) * std::sinh(0.25 * d) / std::cosh(0.5 * d));
    if (std::isfinite(s))
        return 4.0 * std::asinh(s);
    return 2.0 * std::acosh(std::cosh(d) / std::cosh(0.5 * d));
}

Spindle spindle_h2(double d)
{
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::invalid_argument("spindle edge length must be positive");
    const double tip = equilateral_apex_distance(d);
    // Hinge angle between the rhombus axes: law of cosines for the tip-to-tip
    // edge, cosh d = cosh^2 L - sinh^2 L cos(phi), in half-angle form.
    const double half_sin = std::sinh(0.5 * d) / std::sinh(tip);
    if (half_sin > 1.0 + 1e-12)
        throw std::domain_error("spindle hinge angle has no solution");
    const double phi = 2.0 * std::asin(std::min(half_sin, 1.0));
    // Half of the equilateral angle: sin(beta/2) = 1 / (2 cosh(d/2)).
    const double half_beta = std::asin(0.5 / std::cosh(0.5 * d));

    Spindle s;
    s.points = {
        HPoint{0.0, 1.0},
        polar_point(d, half_beta),
        polar_point(d, -half_beta),
        polar_point(tip, 0.0),
        polar_point(d, phi + half_beta),
        polar_point(d, phi - half_beta),
        polar_point(tip, phi),
    };
    s.edges = kMoserSpindleEdges;
    return s;
}

std::vector<HPoint> circle_clique(double d, double eps)
{
    if (!(d > 0.0) || !(eps > 0.0))
        throw std::invalid_argument("circle clique needs d > 0 and eps > 0");
    const double radius = d * (1.0 + eps) / 2.0;
    // Smallest central angle whose chord reaches d:
    // sinh(d/2) = sinh(R) sin(theta/2).
    const double half_sin = std::sinh(0.5 * d) / std::sinh(radius);
    if (!(half_sin <= 1.0 + 1e-12))
        return {};
    const double theta_min = 2.0 * std::asin(std::min(half_sin, 1.0));
    const auto n = static_cast<std::size_t>(std::floor(2.0 * std::numbers::pi / theta_min));

    std::vector<HPoint> points;
    points.reserve(n);
    for (std::size_t j = 0; j < n; ++j)
        points.push_back(polar_point(radius, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                                 static_cast<double>(n)));
    return points;
}

} // namespace chromalab::hyperbolic
