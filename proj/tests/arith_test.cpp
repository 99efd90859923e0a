#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "gpd/arith.hpp"
#include "gpd/error.hpp"
#include "support/oracles.hpp"

using gpd::Integer;
using gpd::Rational;

TEST(Pochhammer, Examples) {
    EXPECT_EQ(gpd::pochhammer_step(Rational(1, 2), 0, Rational(1)), Rational(1));
    EXPECT_EQ(gpd::pochhammer_step(Rational(1), 3, Rational(2)), Rational(15));
    EXPECT_EQ(gpd::pochhammer_step(Rational(1, 2), 3, Rational(1)), Rational(15, 8));
    EXPECT_EQ(gpd::pochhammer(Rational(1), 21), Rational(oracle::factorial(21)));
}

TEST(Pochhammer, StepRecurrence) {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Rational a(std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(1, 7)(rng));
        const Rational k(std::uniform_int_distribution<int>(-5, 5)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
        for (std::size_t n = 0; n <= 50; ++n)
            ASSERT_EQ(gpd::pochhammer_step(a, n + 1, k),
                      gpd::pochhammer_step(a, n, k) * (a + Rational(static_cast<std::int64_t>(n)) * k));
    }
}

TEST(Pochhammer, IntegerArgumentIsFactorialRatio) {
    for (std::size_t a = 1; a <= 6; ++a)
        for (std::size_t n = 0; n <= 10; ++n)
            EXPECT_EQ(gpd::pochhammer(Rational(static_cast<std::int64_t>(a)), n),
                      Rational(oracle::factorial(a + n - 1), oracle::factorial(a - 1)));
}

TEST(Pochhammer, FractionalArgumentMatchesScaledStep) {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> param(1, 12), length(0, 8);
    for (int trial = 0; trial < 200; ++trial) {
        const int a = param(rng), b = param(rng);
        const std::size_t n = length(rng);
        EXPECT_EQ(gpd::pochhammer(Rational(a, b), n),
                  gpd::pochhammer_step(Rational(a), n, Rational(b)) / Rational(b).pow(n));
        EXPECT_EQ(gpd::pochhammer(Rational(a, b), n), oracle::rising(a, b, n));
    }
}

TEST(Binomial, MatchesPascal) {
    const auto rows = oracle::pascal(40);
    for (std::size_t n = 0; n <= 40; ++n)
        for (std::size_t r = 0; r <= n + 2; ++r)
            EXPECT_EQ(gpd::binomial(n, r), r <= n ? rows[n][r] : Integer(0));
    EXPECT_EQ(gpd::binomial(4, 2), 6);
    EXPECT_EQ(gpd::binomial(9, 0), 1);
    EXPECT_EQ(gpd::binomial(5, 7), 0);
}

TEST(Factorial, SmallValues) {
    EXPECT_EQ(gpd::factorial(0), 1);
    EXPECT_EQ(gpd::factorial(5), 120);
    EXPECT_EQ(gpd::factorial(25), oracle::factorial(25));
}

TEST(HyperCoefficient, Examples) {
    const std::vector<Rational> one{Rational(1)}, ones{Rational(1), Rational(1)}, two{Rational(2)}, none;
    EXPECT_EQ(gpd::hyper_coefficient(one, none, 4), Rational(24));
    EXPECT_EQ(gpd::hyper_coefficient(ones, two, 3), Rational(3, 2));
    EXPECT_EQ(gpd::hyper_coefficient(none, one, 3), Rational(1, 6));
}

TEST(HyperCoefficient, EmptyParametersGiveOne) {
    for (std::size_t n = 0; n < 20; ++n)
        EXPECT_EQ(gpd::hyper_coefficient({}, {}, n), Rational(1));
}

TEST(HyperCoefficient, RejectsNonPositiveLower) {
    const std::vector<Rational> zero{Rational(0)}, negative{Rational(-1, 2)};
    EXPECT_THROW(gpd::hyper_coefficient({}, zero, 2), gpd::NonPositiveLowerParameter);
    EXPECT_THROW(gpd::hyper_coefficient({}, negative, 0), gpd::NonPositiveLowerParameter);
}

TEST(HyperCoefficient, RatioOfRisingFactorials) {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                for (std::size_t n = 0; n <= 6; ++n) {
                    const std::vector<Rational> upper{Rational(a, b)}, lower{Rational(c, b + 1)};
                    EXPECT_EQ(gpd::hyper_coefficient(upper, lower, n),
                              oracle::rising(a, b, n) / oracle::rising(c, b + 1, n));
                }
}
