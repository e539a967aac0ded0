#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chromalab {

struct Point2 {
    double x1 = 0.0;
    double x2 = 0.0;

    friend Point2 operator+(Point2 a, Point2 b) { return {a.x1 + b.x1, a.x2 + b.x2}; }
    friend Point2 operator-(Point2 a, Point2 b) { return {a.x1 - b.x1, a.x2 - b.x2}; }
    friend Point2 operator*(double s, Point2 a) { return {s * a.x1, s * a.x2}; }
    friend bool operator==(Point2, Point2) = default;

    double norm() const { return std::hypot(x1, x2); }
};

inline constexpr double kDefaultTolerance = 1e-9;

/// A set of forbidden distances: either {d} or [a, b]. Membership is the
/// closed interval widened by `tol` on both ends.
class DistanceSet {
public:
    enum class Kind { Singleton, Interval };

    static DistanceSet singleton(double d, double tol = kDefaultTolerance);
    static DistanceSet interval(double a, double b, double tol = kDefaultTolerance);

    Kind kind() const { return kind_; }
    double lower() const { return a_; }
    double upper() const { return b_; }
    double tol() const { return tol_; }

    bool contains(double v) const { return v >= a_ - tol_ && v <= b_ + tol_; }

    /// Distance from v to the (unwidened) set; zero inside.
    double gap(double v) const
    {
        if (v < a_)
            return a_ - v;
        if (v > b_)
            return v - b_;
        return 0.0;
    }

    DistanceSet with_tol(double tol) const;
    std::string to_string() const;

private:
    DistanceSet(Kind kind, double a, double b, double tol);

    Kind kind_;
    double a_;
    double b_;
    double tol_;
};

/// Positive constant of the metric DSL. Fractions are kept as num/den so
/// that `scale(axis(1), 1/3)` applied to 3 evaluates to exactly 1.
struct Constant {
    double num = 1.0;
    double den = 1.0;

    double value() const { return num / den; }
    friend bool operator==(const Constant&, const Constant&) = default;
};

/// Immutable expression tree for a translation-invariant pseudometric on R^2.
///
/// Nodes: euclid, axis(i), bound(e) = e/(1+e), cap(e, r) = min(e, r),
/// scale(e, c) = c*e and max(e1, ..., ek). Every combinator preserves
/// symmetry, the triangle inequality and translation invariance; axis(i)
/// alone is not definite.
class MetricExpr {
public:
    enum class Kind { Euclid, Axis, Bound, Cap, Scale, Max };

    static MetricExpr euclid();
    static MetricExpr axis(int index);
    static MetricExpr bound(MetricExpr child);
    static MetricExpr cap(MetricExpr child, Constant r);
    static MetricExpr scale(MetricExpr child, Constant c);
    static MetricExpr max(std::vector<MetricExpr> children);

    Kind kind() const;
    int axis_index() const;
    Constant constant() const;
    std::span<const MetricExpr> children() const;

    /// Evaluates the metric on a displacement q - p (sign irrelevant).
    double eval_delta(double dx1, double dx2) const;
    double operator()(Point2 p, Point2 q) const { return eval_delta(p.x1 - q.x1, p.x2 - q.x2); }

    friend bool operator==(const MetricExpr& a, const MetricExpr& b);

private:
    struct Node;
    explicit MetricExpr(std::shared_ptr<const Node> node);
    std::shared_ptr<const Node> node_;
};

inline double eval_metric(const MetricExpr& expr, Point2 p, Point2 q) { return expr(p, q); }

/// Canonical text form: lowercase, one space after each comma.
std::string to_string(const MetricExpr& expr);

class MetricParseError : public std::runtime_error {
public:
    MetricParseError(const std::string& message, std::size_t offset);
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Grammar:
///   expr := "euclid" | "axis" "(" int ")" | "bound" "(" expr ")"
///         | "cap" "(" expr "," real ")" | "scale" "(" expr "," real ")"
///         | "max" "(" expr { "," expr } ")"
///   real := decimal | decimal "/" decimal
/// Whitespace is insignificant. Throws MetricParseError.
MetricExpr parse_metric(std::string_view text);

// ---------------------------------------------------------------------------
// Named metrics

enum class BuiltinKind { Rho1, Rho2, RhoInfinity, RhoStar, Theorem1Metric, ProperProduct };

struct BuiltinName {
    BuiltinKind kind = BuiltinKind::Rho1;
    double d = 0.0; // RhoStar (real > 1), Theorem1Metric (integer >= 1)
    int d1 = 0;     // ProperProduct
    int d2 = 0;
};

/// A metric expression together with what is known about it. Builtins carry
/// flags taken from the mathematics; parsed DSL text carries none.
struct AnnotatedMetric {
    std::string name;
    MetricExpr expr;
    bool is_metric = false; // definite
    bool is_proper = false; // closed balls Euclidean-bounded
};

AnnotatedMetric builtin(const BuiltinName& name);

/// "rho1", "rho2", "rhoinf", "rhostar:<d>", "theorem1:<d>", "product:<d1>,<d2>".
BuiltinName parse_builtin_name(std::string_view text);

/// "builtin:<name>" or DSL text.
AnnotatedMetric resolve_metric(std::string_view text);

// ---------------------------------------------------------------------------
// Exact-distance search along a ray

struct RaySolution {
    std::optional<double> t;
    bool nonconvergent = false;
};

/// Finds t > 0 with expr(x, x + t*v) in `target` (tolerance included), where
/// v is normalized internally. Along a ray every DSL metric is nondecreasing
/// in t, so the admissible t form an interval [t_lo, t_hi] (t_hi clipped to
/// t_max); `position` in [0, 1] selects t_lo + position * (t_hi - t_lo).
/// Returns no t when the ray never reaches the target before t_max.
RaySolution ray_solve_distance(const MetricExpr& expr, Point2 x, Point2 v,
                               const DistanceSet& target, double position = 0.0,
                               double t_max = 1e6);

} // namespace chromalab
