#include "chromalab/metric.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

namespace chromalab {

// ---------------------------------------------------------------------------
// DistanceSet

DistanceSet::DistanceSet(Kind kind, double a, double b, double tol)
    : kind_(kind), a_(a), b_(b), tol_(tol)
{
    if (!std::isfinite(a) || !std::isfinite(b) || !(a > 0.0))
        throw std::invalid_argument("distance set bounds must be finite and positive");
    if (!(b >= a))
        throw std::invalid_argument("distance interval must satisfy a <= b");
    if (!(tol >= 0.0) || !(tol < a / 10.0))
        throw std::invalid_argument("distance tolerance must lie in [0, a/10)");
}

DistanceSet DistanceSet::singleton(double d, double tol)
{
    return DistanceSet(Kind::Singleton, d, d, tol);
}

DistanceSet DistanceSet::interval(double a, double b, double tol)
{
    return DistanceSet(Kind::Interval, a, b, tol);
}

DistanceSet DistanceSet::with_tol(double tol) const
{
    return DistanceSet(kind_, a_, b_, tol);
}

std::string DistanceSet::to_string() const
{
    std::ostringstream os;
    os.precision(17);
    if (kind_ == Kind::Singleton)
        os << '{' << a_ << '}';
    else
        os << '[' << a_ << ',' << b_ << ']';
    return os.str();
}

// ---------------------------------------------------------------------------
// MetricExpr

struct MetricExpr::Node {
    Kind kind = Kind::Euclid;
    int axis = 0;
    Constant constant;
    std::vector<MetricExpr> children;
};

MetricExpr::MetricExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

namespace {

void check_constant(Constant c)
{
    if (!std::isfinite(c.num) || !std::isfinite(c.den) || c.den == 0.0)
        throw std::invalid_argument("metric constant must be finite");
    const double v = c.value();
    if (!std::isfinite(v) || !(v > 0.0))
        throw std::invalid_argument("metric constant must be positive");
}

} // namespace

MetricExpr MetricExpr::euclid()
{
    static const auto node = std::make_shared<const Node>(Node{Kind::Euclid, 0, {}, {}});
    return MetricExpr(node);
}

MetricExpr MetricExpr::axis(int index)
{
    if (index != 1 && index != 2)
        throw std::invalid_argument("axis index must be 1 or 2");
    return MetricExpr(std::make_shared<const Node>(Node{Kind::Axis, index, {}, {}}));
}

MetricExpr MetricExpr::bound(MetricExpr child)
{
    return MetricExpr(std::make_shared<const Node>(Node{Kind::Bound, 0, {}, {std::move(child)}}));
}

MetricExpr MetricExpr::cap(MetricExpr child, Constant r)
{
    check_constant(r);
    return MetricExpr(std::make_shared<const Node>(Node{Kind::Cap, 0, r, {std::move(child)}}));
}

MetricExpr MetricExpr::scale(MetricExpr child, Constant c)
{
    check_constant(c);
    return MetricExpr(std::make_shared<const Node>(Node{Kind::Scale, 0, c, {std::move(child)}}));
}

MetricExpr MetricExpr::max(std::vector<MetricExpr> children)
{
    if (children.size() < 2)
        throw std::invalid_argument("max needs at least two arguments");
    return MetricExpr(std::make_shared<const Node>(Node{Kind::Max, 0, {}, std::move(children)}));
}

MetricExpr::Kind MetricExpr::kind() const { return node_->kind; }
int MetricExpr::axis_index() const { return node_->axis; }
Constant MetricExpr::constant() const { return node_->constant; }
std::span<const MetricExpr> MetricExpr::children() const { return node_->children; }

double MetricExpr::eval_delta(double dx1, double dx2) const
{
    const Node& n = *node_;
    switch (n.kind) {
    case Kind::Euclid:
        return std::hypot(dx1, dx2);
    case Kind::Axis:
        return std::fabs(n.axis == 1 ? dx1 : dx2);
    case Kind::Bound: {
        const double v = n.children[0].eval_delta(dx1, dx2);
        return v / (1.0 + v);
    }
    case Kind::Cap:
        return std::min(n.children[0].eval_delta(dx1, dx2), n.constant.value());
    case Kind::Scale:
        return n.children[0].eval_delta(dx1, dx2) * n.constant.num / n.constant.den;
    case Kind::Max: {
        double best = 0.0;
        for (const auto& c : n.children)
            best = std::max(best, c.eval_delta(dx1, dx2));
        return best;
    }
    }
    return 0.0;
}

bool operator==(const MetricExpr& a, const MetricExpr& b)
{
    if (a.node_ == b.node_)
        return true;
    const auto& x = *a.node_;
    const auto& y = *b.node_;
    return x.kind == y.kind && x.axis == y.axis && x.constant == y.constant &&
           x.children == y.children;
}

namespace {

std::string format_number(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string format_constant(Constant c)
{
    if (c.den == 1.0)
        return format_number(c.num);
    return format_number(c.num) + "/" + format_number(c.den);
}

} // namespace

std::string to_string(const MetricExpr& expr)
{
    switch (expr.kind()) {
    case MetricExpr::Kind::Euclid:
        return "euclid";
    case MetricExpr::Kind::Axis:
        return "axis(" + std::to_string(expr.axis_index()) + ")";
    case MetricExpr::Kind::Bound:
        return "bound(" + to_string(expr.children()[0]) + ")";
    case MetricExpr::Kind::Cap:
        return "cap(" + to_string(expr.children()[0]) + ", " + format_constant(expr.constant()) + ")";
    case MetricExpr::Kind::Scale:
        return "scale(" + to_string(expr.children()[0]) + ", " + format_constant(expr.constant()) + ")";
    case MetricExpr::Kind::Max: {
        std::string s = "max(";
        bool first = true;
        for (const auto& c : expr.children()) {
            if (!first)
                s += ", ";
            s += to_string(c);
            first = false;
        }
        return s + ")";
    }
    }
    return {};
}

// ---------------------------------------------------------------------------
// Builtins

namespace {

MetricExpr cap_plus_scale(MetricExpr base, double d)
{
    return MetricExpr::max({MetricExpr::cap(base, {1.0, 1.0}), MetricExpr::scale(base, {1.0, d})});
}

bool is_positive_integer(double d)
{
    return std::isfinite(d) && d >= 1.0 && std::floor(d) == d;
}

std::string format_param(double d) { return format_number(d); }

} // namespace

AnnotatedMetric builtin(const BuiltinName& name)
{
    using E = MetricExpr;
    switch (name.kind) {
    case BuiltinKind::Rho1:
        return {"rho1", E::bound(E::euclid()), true, false};
    case BuiltinKind::Rho2:
        return {"rho2", E::max({E::axis(1), E::bound(E::axis(2))}), true, false};
    case BuiltinKind::RhoInfinity:
        return {"rhoinf", E::cap(E::euclid(), {1.0, 1.0}), true, false};
    case BuiltinKind::RhoStar:
        if (!std::isfinite(name.d) || !(name.d > 1.0))
            throw std::invalid_argument("rhostar needs a real parameter d > 1");
        return {"rhostar:" + format_param(name.d), cap_plus_scale(E::euclid(), name.d), true, true};
    case BuiltinKind::Theorem1Metric: {
        if (!is_positive_integer(name.d))
            throw std::invalid_argument("theorem1 needs a positive integer parameter");
        auto expr = E::max({E::cap(E::axis(1), {1.0, 1.0}), E::scale(E::axis(1), {1.0, name.d}),
                            E::bound(E::axis(2))});
        return {"theorem1:" + format_param(name.d), expr, true, false};
    }
    case BuiltinKind::ProperProduct: {
        if (name.d1 < 1 || name.d2 < 1)
            throw std::invalid_argument("product needs positive integer parameters");
        auto expr = E::max({cap_plus_scale(E::axis(1), name.d1), cap_plus_scale(E::axis(2), name.d2)});
        return {"product:" + std::to_string(name.d1) + "," + std::to_string(name.d2), expr, true, true};
    }
    }
    throw std::invalid_argument("unknown builtin");
}

namespace {

double parse_param(std::string_view s)
{
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad builtin parameter '" + std::string(s) + "'");
    return v;
}

int parse_int_param(std::string_view s)
{
    int v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size())
        throw std::invalid_argument("bad integer parameter '" + std::string(s) + "'");
    return v;
}

} // namespace

BuiltinName parse_builtin_name(std::string_view text)
{
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    const std::string_view params = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    BuiltinName name;
    if (head == "rho1" || head == "rho2" || head == "rhoinf") {
        if (!params.empty())
            throw std::invalid_argument(std::string(head) + " takes no parameters");
        name.kind = head == "rho1" ? BuiltinKind::Rho1
                  : head == "rho2" ? BuiltinKind::Rho2
                                   : BuiltinKind::RhoInfinity;
    } else if (head == "rhostar" || head == "theorem1") {
        name.kind = head == "rhostar" ? BuiltinKind::RhoStar : BuiltinKind::Theorem1Metric;
        name.d = parse_param(params);
    } else if (head == "product") {
        const auto comma = params.find(',');
        if (comma == std::string_view::npos)
            throw std::invalid_argument("product needs two parameters d1,d2");
        name.kind = BuiltinKind::ProperProduct;
        name.d1 = parse_int_param(params.substr(0, comma));
        name.d2 = parse_int_param(params.substr(comma + 1));
    } else {
        throw std::invalid_argument("unknown builtin metric '" + std::string(text) + "'");
    }
    return name;
}

AnnotatedMetric resolve_metric(std::string_view text)
{
    constexpr std::string_view prefix = "builtin:";
    if (text.substr(0, prefix.size()) == prefix)
        return builtin(parse_builtin_name(text.substr(prefix.size())));
    auto expr = parse_metric(text);
    return {to_string(expr), expr, false, false};
}

} // namespace chromalab
