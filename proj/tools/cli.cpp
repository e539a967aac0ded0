#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "chromalab/colorings.hpp"
#include "chromalab/embed.hpp"
#include "chromalab/graph.hpp"
#include "chromalab/graph_io.hpp"
#include "chromalab/hyperbolic.hpp"
#include "chromalab/metric.hpp"
#include "chromalab/moser.hpp"
#include "chromalab/solvers.hpp"
#include "chromalab/verification.hpp"

namespace chromalab::cli {

namespace {

// Bad user input detected after flag parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

double parse_real(std::string_view s, const std::string& what)
{
    while (!s.empty() && s.front() == ' ')
        s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ')
        s.remove_suffix(1);
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
        throw UsageError(what + ": expected a number, got '" + std::string(s) + "'");
    return v;
}

std::vector<double> parse_reals(const std::string& text, const std::string& what, std::size_t count)
{
    std::vector<double> out;
    std::size_t start = 0;
    for (;;) {
        const auto comma = text.find(',', start);
        out.push_back(parse_real(std::string_view(text).substr(start, comma - start), what));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    if (out.size() != count)
        throw UsageError(what + ": expected " + std::to_string(count) + " comma-separated numbers");
    return out;
}

int parse_int(const std::string& text, const std::string& what)
{
    const double v = parse_real(text, what);
    if (v != std::floor(v) || v < 0 || v > 1e6)
        throw UsageError(what + ": expected a nonnegative integer, got '" + text + "'");
    return static_cast<int>(v);
}

std::ofstream open_out(const std::string& path)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw UsageError("cannot write '" + path + "'");
    return f;
}

std::string fixed12(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12f", v);
    return buf;
}

// --- metric ---------------------------------------------------------------

struct MetricArgs {
    std::string metric;
    std::string p;
    std::string q;
};

int cmd_metric(const MetricArgs& a, std::ostream& out)
{
    const AnnotatedMetric m = resolve_metric(a.metric);
    const auto p = parse_reals(a.p, "--p", 2);
    const auto q = parse_reals(a.q, "--q", 2);
    out << fixed12(m.expr(Point2{p[0], p[1]}, Point2{q[0], q[1]})) << '\n';
    return kExitOk;
}

// --- verify ---------------------------------------------------------------

struct VerifyArgs {
    std::string space = "plane";
    std::string metric;
    std::string coloring;
    std::string d;
    std::string interval;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0;
    std::string out;
    double tol = kDefaultTolerance;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out)
{
    if (a.d.empty() == a.interval.empty())
        throw UsageError("give exactly one of --d and --interval");
    DistanceSet distances = DistanceSet::singleton(1.0, 0.0);
    if (!a.d.empty()) {
        distances = DistanceSet::singleton(parse_real(a.d, "--d"), a.tol);
    } else {
        const auto ab = parse_reals(a.interval, "--interval", 2);
        distances = DistanceSet::interval(ab[0], ab[1], a.tol);
    }

    // Checkerboard colorings take their distance from --d when not spelled out.
    std::string coloring_name = a.coloring;
    if ((coloring_name == "high-curvature" || coloring_name == "low-curvature") && !a.d.empty())
        coloring_name += ":d=" + a.d;
    const Coloring coloring = parse_coloring(coloring_name);

    SampleSpec spec = [&] {
        if (a.space == "hyperbolic") {
            if (!a.metric.empty())
                throw UsageError("--metric applies to the plane only");
            return SampleSpec::hyperbolic(distances, a.samples, a.seed);
        }
        if (a.space != "plane")
            throw UsageError("--space must be plane or hyperbolic");
        if (a.metric.empty())
            throw UsageError("plane verification needs --metric");
        return SampleSpec::plane(resolve_metric(a.metric).expr, distances, a.samples, a.seed);
    }();

    const VerificationReport report = verify_statistical(coloring, spec);
    if (!a.out.empty()) {
        auto f = open_out(a.out);
        write_report_csv(f, report);
    }

    out << "coloring: " << coloring.name();
    if (coloring.color_count())
        out << " (" << *coloring.color_count() << " colors)";
    out << "\ndistances: " << distances.to_string() << '\n';
    out << "attempted: " << report.samples_attempted << '\n';
    out << "realized: " << report.samples_realized << '\n';
    out << "violations: " << report.violation_count << '\n';
    out << "streams: " << report.rng_streams_used << '\n';
    for (std::size_t i = 0; i < report.violations.size() && i < 5; ++i) {
        const auto& v = report.violations[i];
        out << "  (" << format_double(v.p.x1) << ", " << format_double(v.p.x2) << ") - (" << format_double(v.q.x1)
            << ", " << format_double(v.q.x2) << ") at " << format_double(v.distance) << " both "
            << v.label.to_string() << '\n';
    }
    return report.clean() ? kExitOk : kExitFailure;
}

// --- chi ------------------------------------------------------------------

struct ChiArgs {
    std::string graph;
    std::string construct;
    std::uint64_t budget = SearchBudget{}.max_nodes;
    std::string out;
};

GeoGraph construct_graph(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string name = spec.substr(0, colon);
    const std::string params = colon == std::string::npos ? "" : spec.substr(colon + 1);

    if (name == "moser-e2" && params.empty()) {
        const auto pts = moser_spindle_e2();
        return build_graph(pts, MetricExpr::euclid(), DistanceSet::singleton(1.0));
    }
    if (name == "moser-h2") {
        const double d = parse_reals(params, "moser-h2", 1)[0];
        const auto s = hyperbolic::spindle_h2(d);
        return build_graph(s.points, DistanceSet::singleton(d));
    }
    if (name == "grid-clique") {
        const auto comma = params.find(',');
        if (comma == std::string::npos)
            throw UsageError("grid-clique: expected d1,d2");
        const int d1 = parse_int(params.substr(0, comma), "grid-clique");
        const int d2 = parse_int(params.substr(comma + 1), "grid-clique");
        const CliqueWitness w = grid_clique(d1, d2);
        return build_graph(w.points, w.metric, w.target);
    }
    if (name == "circle-clique") {
        const auto v = parse_reals(params, "circle-clique", 2);
        const auto pts = hyperbolic::circle_clique(v[0], v[1]);
        if (pts.empty())
            throw UsageError("circle-clique: no points at this d and eps");
        return build_graph(pts, DistanceSet::interval(v[0], v[0] * (1.0 + v[1])));
    }
    if (name == "finite-k" && !params.empty()) {
        const FiniteKFile f = read_finite_k_file(params);
        return build_graph_finite_k(f.points, FiniteK(f.vectors));
    }
    throw UsageError("unknown construction '" + spec + "'");
}

int cmd_chi(const ChiArgs& a, std::ostream& out)
{
    if (a.graph.empty() == a.construct.empty())
        throw UsageError("give exactly one of --graph and --construct");
    const GeoGraph g = a.graph.empty() ? construct_graph(a.construct) : read_graph_file(a.graph).to_graph();

    const ChromaticCertificate cert = chromatic_number_exact(g, SearchBudget{a.budget});
    out << "# graph: " << (a.graph.empty() ? a.construct : a.graph) << ", " << g.size() << " vertices, "
        << g.edge_count() << " edges\n";
    out << "# clique:";
    for (int v : cert.clique)
        out << ' ' << v;
    out << '\n';
    write_certificate(out, cert);
    if (!a.out.empty()) {
        auto f = open_out(a.out);
        write_certificate(f, cert);
    }
    return cert.exact ? kExitOk : kExitBudget;
}

// --- bounds ---------------------------------------------------------------

struct BoundsArgs {
    std::string family;
    double d_min = 0.0;
    double d_max = 0.0;
    double step = 0.0;
    std::string out;
    std::string svg;
};

int cmd_bounds(const BoundsArgs& a, std::ostream& out)
{
    BoundsFamily family;
    if (a.family == "euclid-interval")
        family = BoundsFamily::EuclidInterval;
    else if (a.family == "hyperbolic")
        family = BoundsFamily::Hyperbolic;
    else
        throw UsageError("--family must be euclid-interval or hyperbolic");

    const auto rows = bounds_table(family, a.d_min, a.d_max, a.step);
    if (a.out.empty()) {
        write_bounds_csv(out, rows);
    } else {
        auto f = open_out(a.out);
        write_bounds_csv(f, rows);
        out << rows.size() << " rows written to " << a.out << '\n';
    }
    if (!a.svg.empty()) {
        auto f = open_out(a.svg);
        write_bounds_svg(f, family, rows);
    }
    return kExitOk;
}

// --- embed ----------------------------------------------------------------

struct EmbedArgs {
    std::string target;
    std::string space = "plane";
    std::string metric;
    double d = 1.0;
    std::uint64_t seed = 0;
    int restarts = 64;
    double tol = 1e-8;
};

int cmd_embed(const EmbedArgs& a, std::ostream& out)
{
    const GraphFile file = read_graph_file(a.target);
    EmbedProblem problem;
    problem.vertex_count = file.vertex_count;
    problem.edges = file.edges;
    problem.d = a.d;
    problem.restarts = a.restarts;
    problem.tol = a.tol;
    if (a.space == "plane") {
        if (a.metric.empty())
            throw UsageError("plane embedding needs --metric");
        problem.metric = resolve_metric(a.metric).expr;
    } else if (a.space == "hyperbolic") {
        if (!a.metric.empty())
            throw UsageError("--metric applies to the plane only");
    } else {
        throw UsageError("--space must be plane or hyperbolic");
    }

    const EmbedResult r = embed_graph(problem, a.seed);
    out << "# converged = " << (r.converged ? "true" : "false") << '\n';
    out << "# max_residual = " << format_double(r.max_residual) << '\n';
    out << "# restarts_used = " << r.restarts_used << '\n';
    for (std::size_t i = 0; i < r.positions.size(); ++i)
        out << i << ' ' << format_double(r.positions[i].x1) << ' ' << format_double(r.positions[i].x2) << '\n';
    return r.converged ? kExitOk : kExitFailure;
}

std::int64_t euclid_interval_upper(double d)
{
    const double side = std::sqrt(2.0) * d + 1.0;
    const auto k = static_cast<std::int64_t>(std::ceil(side * (1.0 - 1e-12)));
    return k * k;
}

} // namespace

std::vector<BoundsRow> bounds_table(BoundsFamily family, double d_min, double d_max, double step)
{
    if (!std::isfinite(d_min) || !std::isfinite(d_max) || !std::isfinite(step))
        throw std::invalid_argument("bounds range must be finite");
    if (!(step > 0.0))
        throw std::invalid_argument("--step must be positive");
    if (d_max < d_min)
        throw std::invalid_argument("--d-max is below --d-min");
    if (family == BoundsFamily::EuclidInterval && !(d_min > 1.0))
        throw std::invalid_argument("euclid-interval rows need d > 1");
    if (family == BoundsFamily::Hyperbolic && !(d_min > 0.0))
        throw std::invalid_argument("hyperbolic rows need d > 0");
    const double span = (d_max - d_min) / step;
    if (span > 1e5)
        throw std::invalid_argument("bounds range has too many rows");

    const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
    std::vector<BoundsRow> rows;
    for (std::size_t i = 0; i < count; ++i) {
        BoundsRow row;
        row.d = d_min + static_cast<double>(i) * step;
        const double d = row.d;
        if (family == BoundsFamily::EuclidInterval) {
            row.lower = static_cast<std::int64_t>(euclid_packing_clique(d).points.size());
            row.lower_kind = "hexagonal-clique";
            row.upper = euclid_interval_upper(d);
            row.upper_kind = "grid-coloring";
        } else {
            row.lower = 4;
            row.lower_kind = "moser-spindle";
            if (d <= hyperbolic::low_curvature_max_d() * (1.0 + 1e-12)) {
                row.upper = hyperbolic::low_curvature_coloring(d).color_count();
                row.upper_kind = "low-curvature";
            } else if (d >= hyperbolic::high_curvature_min_d() * (1.0 - 1e-12)) {
                row.upper = hyperbolic::high_curvature_coloring(d).color_count();
                row.upper_kind = "high-curvature";
            } else {
                row.note = "no theorem applies";
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundsRow>& rows)
{
    out << "d,lower,lower_kind,upper,upper_kind,note\n";
    for (const auto& r : rows) {
        out << format_double(r.d) << ',';
        if (r.lower)
            out << *r.lower;
        out << ',' << r.lower_kind << ',';
        if (r.upper)
            out << *r.upper;
        out << ',' << r.upper_kind << ',' << r.note << '\n';
    }
}

void write_bounds_svg(std::ostream& out, BoundsFamily family, const std::vector<BoundsRow>& rows)
{
    constexpr double width = 640, height = 400, margin = 50;
    double x0 = rows.empty() ? 0.0 : rows.front().d;
    double x1 = rows.empty() ? 1.0 : rows.back().d;
    if (x1 <= x0) {
        x0 -= 0.5;
        x1 += 0.5;
    }
    // Asymptotic reference constants for the interval family.
    const double dense = std::numbers::pi / std::sqrt(12.0);
    const double sparse = 4.0 / 3.0;

    double y1 = 1.0;
    for (const auto& r : rows) {
        if (r.lower)
            y1 = std::max(y1, static_cast<double>(*r.lower));
        if (r.upper)
            y1 = std::max(y1, static_cast<double>(*r.upper));
        if (family == BoundsFamily::EuclidInterval)
            y1 = std::max(y1, sparse * r.d * r.d);
    }
    y1 *= 1.05;

    auto sx = [&](double x) { return margin + (x - x0) / (x1 - x0) * (width - 2 * margin); };
    auto sy = [&](double y) { return height - margin - y / y1 * (height - 2 * margin); };
    auto num = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", v);
        return std::string(buf);
    };
    auto polyline = [&](const std::vector<std::pair<double, double>>& pts, const char* style) {
        if (pts.empty())
            return;
        out << "<polyline fill=\"none\" " << style << " points=\"";
        for (std::size_t i = 0; i < pts.size(); ++i)
            out << (i ? " " : "") << num(sx(pts[i].first)) << ',' << num(sy(pts[i].second));
        out << "\"/>\n";
    };
    // Splits a bound into runs so that blanks show up as gaps.
    auto series = [&](auto get, const char* style) {
        std::vector<std::pair<double, double>> run;
        for (const auto& r : rows) {
            const auto v = get(r);
            if (v) {
                run.emplace_back(r.d, static_cast<double>(*v));
            } else {
                polyline(run, style);
                run.clear();
            }
        }
        polyline(run, style);
    };

    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << height - margin << "\" x2=\"" << width - margin << "\" y2=\""
        << height - margin << "\" stroke=\"black\"/>\n";
    out << "<line x1=\"" << margin << "\" y1=\"" << margin << "\" x2=\"" << margin << "\" y2=\"" << height - margin
        << "\" stroke=\"black\"/>\n";
    out << "<text x=\"" << width / 2 << "\" y=\"" << height - 15 << "\" text-anchor=\"middle\">d</text>\n";
    out << "<text x=\"" << margin << "\" y=\"" << height - margin + 15 << "\" text-anchor=\"middle\">" << num(x0)
        << "</text>\n";
    out << "<text x=\"" << width - margin << "\" y=\"" << height - margin + 15 << "\" text-anchor=\"middle\">"
        << num(x1) << "</text>\n";
    out << "<text x=\"" << margin - 5 << "\" y=\"" << margin << "\" text-anchor=\"end\">" << num(y1) << "</text>\n";

    if (family == BoundsFamily::EuclidInterval) {
        for (double c : {dense, sparse}) {
            std::vector<std::pair<double, double>> ref;
            for (const auto& r : rows)
                ref.emplace_back(r.d, c * r.d * r.d);
            polyline(ref, "stroke=\"gray\" stroke-dasharray=\"4 4\"");
        }
    }
    series([](const BoundsRow& r) { return r.lower; }, "stroke=\"blue\"");
    series([](const BoundsRow& r) { return r.upper; }, "stroke=\"red\"");
    out << "<text x=\"" << width - margin << "\" y=\"" << margin - 20
        << "\" text-anchor=\"end\" fill=\"blue\">lower</text>\n";
    out << "<text x=\"" << width - margin << "\" y=\"" << margin - 5
        << "\" text-anchor=\"end\" fill=\"red\">upper</text>\n";
    out << "</svg>\n";
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    std::vector<std::string> args(argv, argv + argc);
    return run_cli(args, out, err);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Chromatic numbers of distance graphs in metric planes", "chromalab"};
    app.require_subcommand(1);

    MetricArgs metric_args;
    auto* metric = app.add_subcommand("metric", "Evaluate a metric between two points");
    metric->add_option("--metric", metric_args.metric, "DSL expression or builtin:<name>")->required();
    metric->add_option("--p", metric_args.p, "First point as x,y")->required();
    metric->add_option("--q", metric_args.q, "Second point as x,y")->required();

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Search a coloring for monochromatic pairs at forbidden distances");
    verify->add_option("--space", verify_args.space, "plane or hyperbolic")->capture_default_str();
    verify->add_option("--metric", verify_args.metric, "Planar metric (DSL or builtin:<name>)");
    verify->add_option("--coloring", verify_args.coloring, "Coloring spec, e.g. strip or high-curvature")->required();
    auto* d_opt = verify->add_option("--d", verify_args.d, "Single forbidden distance");
    auto* i_opt = verify->add_option("--interval", verify_args.interval, "Forbidden interval a,b");
    d_opt->excludes(i_opt);
    verify->add_option("--samples", verify_args.samples, "Number of sampled pairs")->capture_default_str();
    verify->add_option("--seed", verify_args.seed, "Master seed")->capture_default_str();
    verify->add_option("--out", verify_args.out, "CSV report path");
    verify->add_option("--tol", verify_args.tol, "Distance tolerance")->capture_default_str();

    ChiArgs chi_args;
    auto* chi = app.add_subcommand("chi", "Exact chromatic number of a finite distance graph");
    chi->add_option("--graph", chi_args.graph, "Graph file");
    chi->add_option("--construct", chi_args.construct,
                    "moser-e2 | moser-h2:d | grid-clique:d1,d2 | circle-clique:d,eps | finite-k:<file>");
    chi->add_option("--budget", chi_args.budget, "Search node budget")->capture_default_str();
    chi->add_option("--out", chi_args.out, "Certificate path");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Table of known bounds as CSV");
    bounds->add_option("--family", bounds_args.family, "euclid-interval or hyperbolic")->required();
    bounds->add_option("--d-min", bounds_args.d_min, "First d")->required();
    bounds->add_option("--d-max", bounds_args.d_max, "Last d")->required();
    bounds->add_option("--step", bounds_args.step, "Step in d")->required();
    bounds->add_option("--out", bounds_args.out, "CSV path (stdout if omitted)");
    bounds->add_option("--svg", bounds_args.svg, "Optional SVG plot path");

    EmbedArgs embed_args;
    auto* embed = app.add_subcommand("embed", "Numerically embed a graph with all edges at distance d");
    embed->add_option("--target", embed_args.target, "Graph file")->required();
    embed->add_option("--space", embed_args.space, "plane or hyperbolic")->capture_default_str();
    embed->add_option("--metric", embed_args.metric, "Planar metric (DSL or builtin:<name>)");
    embed->add_option("--d", embed_args.d, "Edge length")->capture_default_str();
    embed->add_option("--seed", embed_args.seed, "Seed")->capture_default_str();
    embed->add_option("--restarts", embed_args.restarts, "Random restarts")->capture_default_str();
    embed->add_option("--tol", embed_args.tol, "Residual tolerance")->capture_default_str();

    try {
        std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
        app.parse(rest);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*metric)
            return cmd_metric(metric_args, out);
        if (*verify)
            return cmd_verify(verify_args, out);
        if (*chi)
            return cmd_chi(chi_args, out);
        if (*bounds)
            return cmd_bounds(bounds_args, out);
        if (*embed)
            return cmd_embed(embed_args, out);
    } catch (const MetricParseError& e) {
        err << "error: metric parse error at offset " << e.offset() << ": " << e.what() << '\n';
        return kExitUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::runtime_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}

} // namespace chromalab::cli
