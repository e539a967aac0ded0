#include "chromalab/metric.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace chromalab {

MetricParseError::MetricParseError(const std::string& message, std::size_t offset)
    : std::runtime_error("at byte " + std::to_string(offset) + ": " + message), offset_(offset)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    MetricExpr parse()
    {
        auto e = expr();
        skip_ws();
        if (pos_ != text_.size())
            fail("trailing input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw MetricParseError(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw MetricParseError(msg, at); }

    void skip_ws()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    void expect(char c)
    {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    bool accept(char c)
    {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string identifier()
    {
        skip_ws();
        const auto start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a combinator name");
        std::string name(text_.substr(start, pos_ - start));
        for (auto& ch : name)
            ch = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
        return name;
    }

    double number()
    {
        skip_ws();
        double v = 0.0;
        const char* first = text_.data() + pos_;
        const char* last = text_.data() + text_.size();
        // from_chars rejects a leading '+'; allow it for symmetry with '-'.
        if (first != last && *first == '+')
            ++first;
        auto res = std::from_chars(first, last, v, std::chars_format::general);
        if (res.ec != std::errc() || !std::isfinite(v))
            fail("expected a number");
        pos_ = static_cast<std::size_t>(res.ptr - text_.data());
        return v;
    }

    Constant constant()
    {
        skip_ws();
        const auto start = pos_;
        Constant c{number(), 1.0};
        if (accept('/'))
            c.den = number();
        if (!(c.num > 0.0) || !(c.den > 0.0))
            fail_at("non-positive constant", start);
        return c;
    }

    MetricExpr expr()
    {
        skip_ws();
        const auto start = pos_;
        const auto name = identifier();
        if (name == "euclid")
            return MetricExpr::euclid();
        if (name == "axis") {
            expect('(');
            skip_ws();
            const auto at = pos_;
            const double v = number();
            if (v != 1.0 && v != 2.0)
                fail_at("axis index must be 1 or 2", at);
            expect(')');
            return MetricExpr::axis(static_cast<int>(v));
        }
        if (name == "bound") {
            expect('(');
            auto child = expr();
            expect(')');
            return MetricExpr::bound(std::move(child));
        }
        if (name == "cap" || name == "scale") {
            expect('(');
            auto child = expr();
            expect(',');
            const auto c = constant();
            expect(')');
            return name == "cap" ? MetricExpr::cap(std::move(child), c)
                                 : MetricExpr::scale(std::move(child), c);
        }
        if (name == "max") {
            expect('(');
            std::vector<MetricExpr> children;
            children.push_back(expr());
            while (accept(','))
                children.push_back(expr());
            if (children.size() < 2)
                fail("max needs at least two arguments");
            expect(')');
            return MetricExpr::max(std::move(children));
        }
        fail_at("unknown combinator '" + name + "'", start);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

MetricExpr parse_metric(std::string_view text)
{
    return Parser(text).parse();
}

} // namespace chromalab
