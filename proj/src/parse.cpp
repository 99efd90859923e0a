#include "gpd/parse.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "gpd/error.hpp"

namespace gpd {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_space();
        return pos_ == text_.size();
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c) {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (start == pos_)
            fail("expected a name");
        return std::string(text_.substr(start, pos_ - start));
    }

    std::uint64_t natural() {
        skip_space();
        const std::size_t start = pos_;
        std::uint64_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (value > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
                throw ParseError("number too large", start);
            value = value * 10 + digit;
            ++pos_;
        }
        if (start == pos_)
            fail("expected a number");
        return value;
    }

    std::size_t position() const { return pos_; }

    [[noreturn]] void fail(const std::string& what) { throw ParseError(what, pos_); }

    void finish() {
        if (!at_end())
            fail("unexpected trailing input");
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

GroupoidExpr groupoid(Cursor& in) {
    const std::size_t start = in.position();
    const std::string name = in.identifier();
    if (name == "empty")
        return GroupoidExpr::empty();
    if (name == "unit")
        return GroupoidExpr::unit();
    if (name == "discrete" || name == "cyclic") {
        in.expect('(');
        const std::size_t at = in.position();
        const std::uint64_t n = in.natural();
        in.expect(')');
        if (name == "discrete")
            return GroupoidExpr::discrete(n);
        if (n == 0)
            throw ParseError("cyclic order must be at least 1", at);
        return GroupoidExpr::cyclic(n);
    }
    if (name == "u" || name == "x") {
        in.expect('(');
        std::vector<GroupoidExpr> children;
        if (!in.accept(')')) {
            do
                children.push_back(groupoid(in));
            while (in.accept(','));
            in.expect(')');
        }
        return name == "u" ? GroupoidExpr::disjoint_union(std::move(children))
                           : GroupoidExpr::product(std::move(children));
    }
    throw ParseError("unknown groupoid form '" + name + "'", start);
}

PositiveFraction fraction(Cursor& in) {
    const std::size_t at = in.position();
    PositiveFraction f;
    f.numerator = in.natural();
    if (in.accept('/'))
        f.denominator = in.natural();
    if (f.numerator == 0 || f.denominator == 0)
        throw ParseError("parameters must be positive fractions p/q", at);
    return f;
}

std::vector<PositiveFraction> fraction_list(Cursor& in, char terminator) {
    std::vector<PositiveFraction> out;
    if (in.peek() == terminator)
        return out;
    do
        out.push_back(fraction(in));
    while (in.accept(','));
    return out;
}

Species species(Cursor& in, const ExpansionCaps& caps) {
    const std::size_t start = in.position();
    const std::string name = in.identifier();
    if (name == "zero" || name == "one" || name == "singleton" || name == "sets" || name == "Z")
        return Species::builtin(name);
    if (name == "H" || name == "Halt") {
        in.expect('(');
        HyperParams params;
        params.upper = fraction_list(in, ';');
        in.expect(';');
        params.lower = fraction_list(in, ')');
        in.expect(')');
        return species_H(params, name == "H" ? Interpretation::Product : Interpretation::Alternative);
    }
    if (name == "sum" || name == "had" || name == "prod" || name == "comp") {
        in.expect('(');
        const Species f = species(in, caps);
        in.expect(',');
        const Species g = species(in, caps);
        in.expect(')');
        if (name == "sum")
            return sum(f, g);
        if (name == "had")
            return hadamard(f, g);
        if (name == "prod")
            return prod(f, g, caps);
        return compose(f, g, caps);
    }
    throw ParseError("unknown species form '" + name + "'", start);
}

}  // namespace

GroupoidExpr parse_groupoid_expr(std::string_view text) {
    Cursor in(text);
    GroupoidExpr e = groupoid(in);
    in.finish();
    return e;
}

Species parse_species_expr(std::string_view text, const ExpansionCaps& caps) {
    Cursor in(text);
    Species s = species(in, caps);
    in.finish();
    return s;
}

std::vector<PositiveFraction> parse_fraction_list(std::string_view text) {
    Cursor in(text);
    if (in.at_end())
        return {};
    std::vector<PositiveFraction> out = fraction_list(in, '\0');
    in.finish();
    return out;
}

}  // namespace gpd
