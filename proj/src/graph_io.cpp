#include "chromalab/graph_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace chromalab {

std::string format_double(double v)
{
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace {

struct DataLine {
    std::size_t number;
    std::vector<std::string> fields;
};

std::vector<DataLine> data_lines(std::istream& in)
{
    std::vector<DataLine> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#')
            continue;
        std::istringstream fields(line);
        DataLine dl{number, {}};
        std::string f;
        while (fields >> f)
            dl.fields.push_back(f);
        out.push_back(std::move(dl));
    }
    return out;
}

[[noreturn]] void fail(const DataLine& line, const std::string& msg)
{
    throw std::runtime_error("line " + std::to_string(line.number) + ": " + msg);
}

double real_field(const DataLine& line, std::size_t i)
{
    const std::string& s = line.fields[i];
    double v = 0.0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || !std::isfinite(v))
        fail(line, "expected a number, got '" + s + "'");
    return v;
}

long long int_field(const DataLine& line, std::size_t i)
{
    const std::string& s = line.fields[i];
    long long v = 0;
    auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc() || res.ptr != s.data() + s.size() || v < 0)
        fail(line, "expected a nonnegative integer, got '" + s + "'");
    return v;
}

void expect_fields(const DataLine& line, std::size_t n)
{
    if (line.fields.size() != n)
        fail(line, "expected " + std::to_string(n) + " fields");
}

std::ifstream open(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open '" + path + "'");
    return in;
}

} // namespace

GeoGraph GraphFile::to_graph() const
{
    return GeoGraph::from_edges(vertex_count, edges, points,
                                points.empty() ? GeoGraph::Space::Abstract : GeoGraph::Space::Plane, "file");
}

GraphFile read_graph_file(std::istream& in)
{
    const auto lines = data_lines(in);
    if (lines.empty())
        throw std::runtime_error("graph file is empty");
    expect_fields(lines[0], 2);
    const auto n = static_cast<std::size_t>(int_field(lines[0], 0));
    const auto m = static_cast<std::size_t>(int_field(lines[0], 1));
    const std::size_t body = lines.size() - 1;
    if (body != m && body != n + m)
        fail(lines[0], "header announces " + std::to_string(n) + " points and " + std::to_string(m) +
                           " edges but " + std::to_string(body) + " data lines follow");

    GraphFile out;
    out.vertex_count = n;
    std::size_t at = 1;
    if (body == n + m && n > 0) {
        for (std::size_t i = 0; i < n; ++i, ++at) {
            expect_fields(lines[at], 2);
            out.points.push_back({real_field(lines[at], 0), real_field(lines[at], 1)});
        }
    }
    for (std::size_t e = 0; e < m; ++e, ++at) {
        expect_fields(lines[at], 2);
        const auto i = int_field(lines[at], 0);
        const auto j = int_field(lines[at], 1);
        if (static_cast<std::size_t>(i) >= n || static_cast<std::size_t>(j) >= n)
            fail(lines[at], "edge endpoint out of range");
        if (i == j)
            fail(lines[at], "self-loop");
        out.edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
    }
    return out;
}

GraphFile read_graph_file(const std::string& path)
{
    auto in = open(path);
    return read_graph_file(in);
}

void write_graph_file(std::ostream& out, const GeoGraph& g)
{
    const auto edges = g.edges();
    out << g.size() << ' ' << edges.size() << '\n';
    for (auto p : g.points())
        out << format_double(p.x1) << ' ' << format_double(p.x2) << '\n';
    for (auto [i, j] : edges)
        out << i << ' ' << j << '\n';
}

void write_certificate(std::ostream& out, const ChromaticCertificate& cert)
{
    if (cert.exact) {
        out << "# chi = " << cert.chi << '\n';
    } else {
        out << "# chi <= " << cert.chi << '\n';
        out << "# chi >= " << cert.lower_bound << '\n';
    }
    for (std::size_t v = 0; v < cert.coloring.size(); ++v)
        out << v << ' ' << cert.coloring[v] << '\n';
}

FiniteKFile read_finite_k_file(const std::string& path)
{
    auto in = open(path);
    const auto lines = data_lines(in);
    if (lines.empty())
        throw std::runtime_error("finite-K file is empty");
    expect_fields(lines[0], 2);
    const auto k = static_cast<std::size_t>(int_field(lines[0], 0));
    const auto p = static_cast<std::size_t>(int_field(lines[0], 1));
    if (lines.size() - 1 != k + p)
        fail(lines[0], "expected " + std::to_string(k + p) + " data lines");
    FiniteKFile out;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        expect_fields(lines[i], 2);
        const Point2 v{real_field(lines[i], 0), real_field(lines[i], 1)};
        (i <= k ? out.vectors : out.points).push_back(v);
    }
    return out;
}

} // namespace chromalab
