#include "chromalab/colorings.hpp"

#include <charconv>
#include <cmath>
#include <map>
#include <stdexcept>

namespace chromalab {

Coloring::Coloring(std::string name, Rule rule, std::optional<std::int64_t> color_count)
    : name_(std::move(name)), rule_(std::move(rule)), color_count_(color_count)
{
}

LineColoring::LineColoring(std::string name, Rule rule, std::int64_t color_count)
    : name_(std::move(name)), rule_(std::move(rule)), color_count_(color_count)
{
}

namespace {

std::int64_t floor_index(double v)
{
    return static_cast<std::int64_t>(std::floor(v));
}

} // namespace

Coloring strip_coloring()
{
    return Coloring("strip", [](Point2 p) { return ColorLabel{floor_mod(floor_index(p.x1), 2)}; }, 2);
}

Coloring grid_mod_coloring(double eps, std::int64_t n)
{
    if (!std::isfinite(eps) || !(eps > 0.0))
        throw std::invalid_argument("grid coloring needs eps > 0");
    if (n < 2)
        throw std::invalid_argument("grid coloring needs n >= 2");
    return Coloring(
        "grid",
        [eps, n](Point2 p) {
            return ColorLabel{floor_mod(floor_index(p.x1 / eps), n), floor_mod(floor_index(p.x2 / eps), n)};
        },
        n * n);
}

LineColoring interval_1d_coloring(std::int64_t n)
{
    if (n < 2)
        throw std::invalid_argument("interval coloring needs n >= 2");
    return LineColoring("interval:" + std::to_string(n),
                        [n](double x) { return ColorLabel{floor_mod(floor_index(x), n)}; }, n);
}

LineColoring constant_line_coloring()
{
    return LineColoring("constant", [](double) { return ColorLabel{0}; }, 1);
}

Coloring product_coloring(const LineColoring& c1, const LineColoring& c2)
{
    return Coloring(
        c1.name() + "*" + c2.name(), [c1, c2](Point2 p) { return c1(p.x1).concat(c2(p.x2)); },
        c1.color_count() * c2.color_count());
}

Coloring countable_square_coloring(double side)
{
    if (!std::isfinite(side) || !(side > 0.0) || !(side * std::sqrt(2.0) < 1.0))
        throw std::invalid_argument("square side must satisfy side*sqrt(2) < 1");
    return Coloring(
        "squares",
        [side](Point2 p) { return ColorLabel{floor_index(p.x1 / side), floor_index(p.x2 / side)}; },
        std::nullopt);
}

Coloring constant_coloring()
{
    return Coloring("constant", [](Point2) { return ColorLabel{0}; }, 1);
}

Coloring as_coloring(const hyperbolic::CheckerboardColoring& c, std::string name)
{
    return Coloring(
        std::move(name), [c](Point2 p) { return c(hyperbolic::from_point2(p)); }, c.color_count());
}

namespace {

// "key=value,key=value" after the first ':'.
std::map<std::string, std::string, std::less<>> parse_params(std::string_view text)
{
    std::map<std::string, std::string, std::less<>> out;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const auto item = text.substr(0, comma);
        const auto eq = item.find('=');
        if (eq == std::string_view::npos || eq == 0)
            throw std::invalid_argument("expected key=value in coloring spec, got '" + std::string(item) + "'");
        out.emplace(std::string(item.substr(0, eq)), std::string(item.substr(eq + 1)));
        if (comma == std::string_view::npos)
            break;
        text.remove_prefix(comma + 1);
    }
    return out;
}

double param_real(const std::map<std::string, std::string, std::less<>>& params, std::string_view key)
{
    auto it = params.find(key);
    if (it == params.end())
        throw std::invalid_argument("coloring spec is missing '" + std::string(key) + "'");
    const std::string& s = it->second;
    const auto slash = s.find('/');
    auto one = [&](std::string_view part) {
        double v = 0.0;
        auto res = std::from_chars(part.data(), part.data() + part.size(), v);
        if (res.ec != std::errc() || res.ptr != part.data() + part.size())
            throw std::invalid_argument("bad number '" + s + "' for '" + std::string(key) + "'");
        return v;
    };
    if (slash == std::string::npos)
        return one(s);
    return one(std::string_view(s).substr(0, slash)) / one(std::string_view(s).substr(slash + 1));
}

std::int64_t param_int(const std::map<std::string, std::string, std::less<>>& params, std::string_view key)
{
    const double v = param_real(params, key);
    if (std::floor(v) != v)
        throw std::invalid_argument("'" + std::string(key) + "' must be an integer");
    return static_cast<std::int64_t>(v);
}

} // namespace

Coloring parse_coloring(std::string_view text)
{
    const auto colon = text.find(':');
    const auto head = text.substr(0, colon);
    const auto params = parse_params(colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1));

    if (head == "strip")
        return strip_coloring();
    if (head == "constant")
        return constant_coloring();
    if (head == "grid")
        return grid_mod_coloring(param_real(params, "eps"), param_int(params, "n"));
    if (head == "squares")
        return countable_square_coloring(param_real(params, "side"));
    if (head == "interval-product") {
        const auto d1 = param_int(params, "d1");
        const auto d2 = param_int(params, "d2");
        if (d1 < 1 || d2 < 1)
            throw std::invalid_argument("interval-product needs d1, d2 >= 1");
        return product_coloring(interval_1d_coloring(d1 + 1), interval_1d_coloring(d2 + 1));
    }
    if (head == "high-curvature")
        return as_coloring(hyperbolic::high_curvature_coloring(param_real(params, "d")), "high-curvature");
    if (head == "low-curvature")
        return as_coloring(hyperbolic::low_curvature_coloring(param_real(params, "d")), "low-curvature");
    throw std::invalid_argument("unknown coloring '" + std::string(text) + "'");
}

// ---------------------------------------------------------------------------
// Cliques

double clique_residual(const std::vector<Point2>& points, const MetricExpr& metric,
                       const DistanceSet& target)
{
    double worst = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            worst = std::max(worst, target.gap(metric(points[i], points[j])));
    return worst;
}

CliqueWitness grid_clique(int d1, int d2)
{
    if (d1 < 1 || d2 < 1)
        throw std::invalid_argument("grid clique needs d1, d2 >= 1");
    auto metric = builtin({BuiltinKind::ProperProduct, 0.0, d1, d2}).expr;
    std::vector<Point2> points;
    for (int i = 0; i <= d1; ++i)
        for (int j = 0; j <= d2; ++j)
            points.push_back({static_cast<double>(i), static_cast<double>(j)});
    auto target = DistanceSet::singleton(1.0);
    const double residual = clique_residual(points, metric, target);
    return {std::move(points), metric, target, residual};
}

CliqueWitness euclid_packing_clique(double d)
{
    if (!std::isfinite(d) || !(d > 1.0))
        throw std::invalid_argument("packing clique needs d > 1");
    const double h = std::sqrt(3.0) / 2.0;
    const double radius = d / 2.0;
    const double slack = 1e-12 * std::max(1.0, radius);
    const Point2 centers[] = {{0.0, 0.0}, {0.5, 0.0}, {0.5, std::sqrt(3.0) / 6.0}};

    std::vector<Point2> best;
    for (const Point2 c : centers) {
        std::vector<Point2> pts;
        const auto jmax = static_cast<long>(std::ceil(radius / h)) + 1;
        for (long j = -jmax; j <= jmax; ++j) {
            const double y = static_cast<double>(j) * h;
            const double shift = 0.5 * static_cast<double>(j);
            const auto imin = static_cast<long>(std::floor(c.x1 - radius - shift)) - 1;
            const auto imax = static_cast<long>(std::ceil(c.x1 + radius - shift)) + 1;
            for (long i = imin; i <= imax; ++i) {
                const Point2 p{static_cast<double>(i) + shift, y};
                if ((p - c).norm() <= radius + slack)
                    pts.push_back(p);
            }
        }
        if (pts.size() > best.size())
            best = std::move(pts);
    }
    auto metric = MetricExpr::euclid();
    auto target = DistanceSet::interval(1.0, d);
    const double residual = clique_residual(best, metric, target);
    return {std::move(best), metric, target, residual};
}

} // namespace chromalab
