#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "gpd/error.hpp"
#include "gpd/series.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using gpd::EgfSeries;
using gpd::Rational;

namespace {

EgfSeries ints(std::initializer_list<int> values) {
    std::vector<Rational> a;
    for (int v : values)
        a.emplace_back(v);
    return EgfSeries(a);
}

}  // namespace

TEST(SeriesEgfSeries, Constructors) {
    EXPECT_EQ(EgfSeries::zero(2), ints({0, 0, 0}));
    EXPECT_EQ(EgfSeries::one(2), ints({1, 0, 0}));
    EXPECT_EQ(EgfSeries::exp(3), ints({1, 1, 1, 1}));
    EXPECT_EQ(EgfSeries::x(2), ints({0, 1, 0}));
    EXPECT_EQ(EgfSeries::exp(3).order(), 3u);
    EXPECT_THROW(EgfSeries(std::vector<Rational>{}), gpd::Error);
    EXPECT_EQ(EgfSeries::exp(3).ordinary(), (std::vector<Rational>{1, 1, Rational(1, 2), Rational(1, 6)}));
}

TEST(SeriesAdd, Examples) {
    std::mt19937_64 rng(1);
    const EgfSeries f = random_gen::random_series(rng, 5), g = random_gen::random_series(rng, 5);
    EXPECT_EQ(gpd::add(f, EgfSeries::zero(5)), f);
    EXPECT_EQ(gpd::add(ints({1, 1, 1}), ints({0, 1, 2})), ints({1, 2, 3}));
    EXPECT_EQ(gpd::add(f, g), gpd::add(g, f));
    EXPECT_THROW(gpd::add(EgfSeries::zero(2), EgfSeries::zero(3)), gpd::OrderMismatch);
}

TEST(SeriesHadamard, Examples) {
    std::mt19937_64 rng(2);
    const EgfSeries f = random_gen::random_series(rng, 6);
    EXPECT_EQ(gpd::hadamard(f, EgfSeries::exp(6)), f);
    EXPECT_EQ(gpd::hadamard(ints({1, 1, 2}), ints({1, 3, 5})), ints({1, 3, 10}));
    const std::vector<Rational> half{Rational(1, 2)};
    EXPECT_EQ(gpd::hadamard(gpd::hypergeometric_series(half, {}, 8), gpd::hypergeometric_series({}, half, 8)),
              EgfSeries::exp(8));
    EXPECT_THROW(gpd::hadamard(EgfSeries::zero(1), EgfSeries::zero(0)), gpd::OrderMismatch);
}

TEST(SeriesCauchyProduct, Examples) {
    std::mt19937_64 rng(3);
    const EgfSeries f = random_gen::random_series(rng, 6);
    EXPECT_EQ(gpd::cauchy_product(f, EgfSeries::one(6)), f);
    EXPECT_EQ(gpd::cauchy_product(EgfSeries::exp(6), EgfSeries::exp(6)), ints({1, 2, 4, 8, 16, 32, 64}));
    EXPECT_EQ(gpd::cauchy_product(EgfSeries::x(4), EgfSeries::x(4)), ints({0, 0, 2, 0, 0}));
    EXPECT_THROW(gpd::cauchy_product(EgfSeries::zero(1), EgfSeries::zero(2)), gpd::OrderMismatch);
}

TEST(SeriesCauchyProduct, MatchesOrdinaryPolynomialProduct) {
    std::mt19937_64 rng(4);
    for (int trial = 0; trial < 50; ++trial) {
        const EgfSeries f = random_gen::random_series(rng, 8), g = random_gen::random_series(rng, 8);
        const auto expected =
            oracle::to_egf(oracle::poly_mul(oracle::to_ordinary(f.coefficients()), oracle::to_ordinary(g.coefficients())));
        ASSERT_EQ(gpd::cauchy_product(f, g).coefficients(), expected);
    }
}

TEST(SeriesCauchyProduct, CommutativeAndAssociative) {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        const EgfSeries f = random_gen::random_series(rng, 8), g = random_gen::random_series(rng, 8),
                        h = random_gen::random_series(rng, 8);
        ASSERT_EQ(gpd::cauchy_product(f, g), gpd::cauchy_product(g, f));
        ASSERT_EQ(gpd::cauchy_product(gpd::cauchy_product(f, g), h),
                  gpd::cauchy_product(f, gpd::cauchy_product(g, h)));
    }
}

TEST(SeriesCompose, Examples) {
    std::mt19937_64 rng(6);
    const EgfSeries f = random_gen::random_series(rng, 7);
    EXPECT_EQ(gpd::compose(f, EgfSeries::x(7)), f);
    const EgfSeries exp_minus_one = gpd::add(EgfSeries::exp(5), ints({-1, 0, 0, 0, 0, 0}));
    EXPECT_EQ(gpd::compose(EgfSeries::exp(5), exp_minus_one), ints({1, 1, 2, 5, 15, 52}));
    EXPECT_THROW(gpd::compose(f, EgfSeries::exp(7)), gpd::CompositionRequiresZeroConstant);
    EXPECT_THROW(gpd::compose(f, EgfSeries::x(6)), gpd::OrderMismatch);
}

TEST(SeriesCompose, BellNumbersAgainstPartitionEnumeration) {
    const std::size_t order = 10;
    std::vector<Rational> bell;
    for (std::size_t n = 0; n <= order; ++n)
        bell.emplace_back(static_cast<std::int64_t>(oracle::set_partitions(static_cast<int>(n)).size()));
    std::vector<Rational> inner(order + 1, Rational(1));
    inner[0] = Rational(0);
    EXPECT_EQ(gpd::compose(EgfSeries::exp(order), EgfSeries(inner)).coefficients(), bell);
}

TEST(SeriesCompose, MatchesNaiveSubstitution) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const EgfSeries f = random_gen::random_series(rng, 7), g = random_gen::random_series(rng, 7, true);
        const auto expected = oracle::to_egf(
            oracle::poly_compose(oracle::to_ordinary(f.coefficients()), oracle::to_ordinary(g.coefficients())));
        ASSERT_EQ(gpd::compose(f, g).coefficients(), expected);
    }
}

TEST(SeriesCompose, Associative) {
    std::mt19937_64 rng(8);
    for (int trial = 0; trial < 30; ++trial) {
        const EgfSeries f = random_gen::random_series(rng, 6), g = random_gen::random_series(rng, 6, true),
                        h = random_gen::random_series(rng, 6, true);
        ASSERT_EQ(gpd::compose(gpd::compose(f, g), h), gpd::compose(f, gpd::compose(g, h)));
    }
}

TEST(SeriesHypergeometricSeries, Examples) {
    const std::vector<Rational> one{Rational(1)}, ones{Rational(1), Rational(1)}, two{Rational(2)};
    EXPECT_EQ(gpd::hypergeometric_series(one, {}, 4), ints({1, 1, 2, 6, 24}));
    EXPECT_EQ(gpd::hypergeometric_series({}, {}, 6), EgfSeries::exp(6));
    EXPECT_EQ(gpd::hypergeometric_series(ones, two, 4).coefficients(),
              (std::vector<Rational>{1, Rational(1, 2), Rational(2, 3), Rational(3, 2), Rational(24, 5)}));
    const std::vector<Rational> zero{Rational(0)};
    EXPECT_THROW(gpd::hypergeometric_series({}, zero, 3), gpd::NonPositiveLowerParameter);
}

TEST(SeriesHypergeometricSeries, GeneralizedBinomialExpansion) {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            const std::vector<Rational> upper{Rational(a, b)};
            const EgfSeries s = gpd::hypergeometric_series(upper, {}, 12);
            for (std::size_t n = 0; n <= 12; ++n)
                ASSERT_EQ(s[n], oracle::generalized_binomial_egf(a, b, n)) << a << "/" << b << " n=" << n;
        }
}
