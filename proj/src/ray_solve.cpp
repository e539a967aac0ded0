#include "chromalab/metric.hpp"

#include <algorithm>
#include <cmath>

namespace chromalab {

namespace {

constexpr int kMaxBisectionSteps = 200;

struct Ray {
    const MetricExpr& expr;
    Point2 x;
    Point2 v;

    double operator()(double t) const { return expr(x, x + t * v); }
};

// Smallest t in (lo, hi] with f(t) >= level, given f(lo) < level <= f(hi).
// Returns nullopt if bisection does not close the bracket.
std::optional<double> first_crossing(const Ray& f, double lo, double hi, double level)
{
    for (int step = 0; step < kMaxBisectionSteps; ++step) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
            return hi;
        if (f(mid) >= level)
            hi = mid;
        else
            lo = mid;
    }
    return std::nullopt;
}

// Largest t in [lo, hi) with f(t) <= level, given f(lo) <= level < f(hi).
std::optional<double> last_below(const Ray& f, double lo, double hi, double level)
{
    for (int step = 0; step < kMaxBisectionSteps; ++step) {
        const double mid = lo + 0.5 * (hi - lo);
        if (mid <= lo || mid >= hi)
            return lo;
        if (f(mid) <= level)
            lo = mid;
        else
            hi = mid;
    }
    return std::nullopt;
}

} // namespace

RaySolution ray_solve_distance(const MetricExpr& expr, Point2 x, Point2 v,
                               const DistanceSet& target, double position, double t_max)
{
    const double len = v.norm();
    if (!(len > 0.0) || !std::isfinite(len))
        throw std::invalid_argument("ray direction must be nonzero");
    if (!(t_max > 0.0))
        throw std::invalid_argument("t_max must be positive");
    const Ray f{expr, x, (1.0 / len) * v};
    const double a = target.lower();
    const double b = target.upper();

    if (f(t_max) < a - target.tol())
        return {};

    // Bracket the first crossing of level a by doubling.
    double lo = 0.0;
    double hi = std::min(1.0, t_max);
    while (f(hi) < a && hi < t_max) {
        lo = hi;
        hi = std::min(2.0 * hi, t_max);
    }
    double t_lo = hi;
    if (f(hi) >= a) {
        auto t = first_crossing(f, lo, hi, a);
        if (!t)
            return {std::nullopt, true};
        t_lo = *t;
    }
    if (!target.contains(f(t_lo)))
        return {std::nullopt, false};

    if (!(position > 0.0))
        return {t_lo, false};

    double t_hi = t_max;
    if (f(t_max) > b) {
        auto t = last_below(f, t_lo, t_max, b);
        if (!t)
            return {t_lo, true};
        t_hi = *t;
    }
    const double t = t_lo + std::min(position, 1.0) * (t_hi - t_lo);
    if (target.contains(f(t)))
        return {t, false};
    return {t_lo, false};
}

} // namespace chromalab
