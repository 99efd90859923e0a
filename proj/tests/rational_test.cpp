#include <gtest/gtest.h>

#include <sstream>

#include "gpd/error.hpp"
#include "gpd/rational.hpp"

using gpd::Integer;
using gpd::Rational;

TEST(Rational, StoredInLowestTerms) {
    const Rational r(6, -4);
    EXPECT_EQ(r.numerator(), -3);
    EXPECT_EQ(r.denominator(), 2);
    EXPECT_EQ(Rational(2, 4), Rational(1, 2));
    EXPECT_EQ(Rational(0, 7).denominator(), 1);
}

TEST(Rational, ExactArithmetic) {
    const Rational a(1, 2), b(1, 3);
    EXPECT_EQ(a + b, Rational(5, 6));
    EXPECT_EQ(a - b, Rational(1, 6));
    EXPECT_EQ(a * b, Rational(1, 6));
    EXPECT_EQ(a / b, Rational(3, 2));
    EXPECT_EQ(-a, Rational(-1, 2));
    EXPECT_EQ(Rational(2, 3).inverse(), Rational(3, 2));
    EXPECT_EQ(Rational(-2, 3).pow(3), Rational(-8, 27));
    EXPECT_EQ(Rational(5).pow(0), Rational(1));
}

TEST(Rational, DivisionByZeroThrows) {
    EXPECT_THROW(Rational(1) / Rational(0), gpd::DivisionByZero);
    EXPECT_THROW(Rational(0).inverse(), gpd::DivisionByZero);
    EXPECT_THROW(Rational(1, 0), gpd::DivisionByZero);
}

TEST(Rational, BeyondFixedWidth) {
    Rational f(1);
    for (int i = 1; i <= 30; ++i)
        f *= Rational(i);
    EXPECT_EQ(f.to_string(), "265252859812191058636308480000000");
}

TEST(Rational, Ordering) {
    EXPECT_LT(Rational(1, 3), Rational(1, 2));
    EXPECT_GT(Rational(-1, 3), Rational(-1, 2));
    EXPECT_EQ(Rational(3, 9) <=> Rational(1, 3), std::strong_ordering::equal);
}

TEST(Rational, TextRoundTrip) {
    for (const char* text : {"0", "7", "-7", "15/8", "-3/4", "123456789012345678901234567891/1024"}) {
        EXPECT_EQ(Rational::parse(text).to_string(), text);
    }
    EXPECT_EQ(Rational::parse("4/6").to_string(), "2/3");
    std::ostringstream out;
    out << Rational(-5, 10);
    EXPECT_EQ(out.str(), "-1/2");
}

TEST(Rational, ParseRejectsMalformedText) {
    for (const char* text : {"", "1/0", "1/", "/2", "a", "1 /2", " 1", "1/-2", "+1", "1.5", "--1", "1/2/3"}) {
        EXPECT_THROW(Rational::parse(text), gpd::Error) << text;
    }
}

TEST(Rational, Predicates) {
    EXPECT_TRUE(Rational(0).is_zero());
    EXPECT_TRUE(Rational(4, 2).is_integer());
    EXPECT_FALSE(Rational(1, 2).is_integer());
    EXPECT_EQ(Rational(-1, 2).sign(), -1);
    EXPECT_DOUBLE_EQ(Rational(1, 4).to_double(), 0.25);
}
