#include "gpd/rational.hpp"

#include <cctype>
#include <ostream>

#include "gpd/error.hpp"

namespace gpd {

namespace {

// Validates a run of decimal digits starting at `pos`; returns one past its end.
std::size_t scan_digits(std::string_view text, std::size_t pos) {
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        ++pos;
    if (pos == start)
        throw ParseError("expected decimal digits in rational '" + std::string(text) + "'", start);
    return pos;
}

}  // namespace

Rational::Rational(std::int64_t value) : value_(static_cast<long>(value)) {}

Rational::Rational(const Integer& value) : value_(value) {}

Rational::Rational(const Integer& numerator, const Integer& denominator) {
    if (denominator == 0)
        throw DivisionByZero();
    value_ = mpq_class(numerator, denominator);
    value_.canonicalize();
}

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : Rational(Integer(static_cast<long>(numerator)), Integer(static_cast<long>(denominator))) {}

Rational Rational::parse(std::string_view text) {
    std::size_t pos = 0;
    if (pos < text.size() && text[pos] == '-')
        ++pos;
    const std::size_t num_end = scan_digits(text, pos);
    const Integer numerator(std::string(text.substr(0, num_end)).c_str(), 10);
    if (num_end == text.size())
        return Rational(numerator);
    if (text[num_end] != '/')
        throw ParseError("unexpected character in rational '" + std::string(text) + "'", num_end);
    const std::size_t den_end = scan_digits(text, num_end + 1);
    if (den_end != text.size())
        throw ParseError("trailing characters in rational '" + std::string(text) + "'", den_end);
    Integer denominator(std::string(text.substr(num_end + 1)).c_str(), 10);
    if (denominator == 0)
        throw ParseError("zero denominator in rational '" + std::string(text) + "'", num_end + 1);
    return Rational(numerator, denominator);
}

Rational& Rational::operator+=(const Rational& rhs) {
    value_ += rhs.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
    value_ -= rhs.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
    value_ *= rhs.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero())
        throw DivisionByZero();
    value_ /= rhs.value_;
    return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational Rational::inverse() const {
    if (is_zero())
        throw DivisionByZero();
    return Rational(mpq_class(1) / value_);
}

Rational Rational::pow(unsigned exponent) const {
    Integer num, den;
    mpz_pow_ui(num.get_mpz_t(), value_.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), value_.get_den_mpz_t(), exponent);
    mpq_class result(num, den);
    result.canonicalize();
    return Rational(std::move(result));
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    const int c = cmp(lhs.value_, rhs.value_);
    if (c < 0)
        return std::strong_ordering::less;
    if (c > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Rational::to_string() const {
    if (is_integer())
        return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& out, const Rational& value) { return out << value.to_string(); }

}  // namespace gpd
