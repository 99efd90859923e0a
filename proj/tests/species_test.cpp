#include <gtest/gtest.h>

#include <random>
#include <thread>
#include <vector>

#include "gpd/error.hpp"
#include "gpd/species.hpp"
#include "support/oracles.hpp"
#include "support/random.hpp"

using gpd::EgfSeries;
using gpd::ExprKind;
using gpd::GroupoidExpr;
using gpd::Rational;
using gpd::Species;

namespace {

Species builtin(const char* name) { return gpd::builtin_species(name); }

Rational card(const Species& s, std::size_t n) { return gpd::cardinality_expr(gpd::species_value(s, n)); }

// A species whose valuation is the given nonnegative series.
Species with_valuation(const EgfSeries& f, const std::string& name) {
    return Species::custom(name, [f](std::size_t n) { return gpd::interpret_rational(f[n]); });
}

EgfSeries random_nonnegative(std::mt19937_64& rng, std::size_t order, bool zero_constant) {
    std::vector<Rational> a;
    for (std::size_t n = 0; n <= order; ++n)
        a.emplace_back(random_gen::uniform(rng, 0, 5), random_gen::uniform(rng, 1, 4));
    if (zero_constant)
        a[0] = Rational(0);
    return EgfSeries(a);
}

}  // namespace

TEST(SpeciesBuiltins, Values) {
    EXPECT_EQ(gpd::species_value(builtin("singleton"), 1).kind(), ExprKind::Unit);
    EXPECT_EQ(gpd::species_value(builtin("singleton"), 3).kind(), ExprKind::Empty);
    EXPECT_EQ(gpd::species_value(builtin("one"), 0).kind(), ExprKind::Unit);
    EXPECT_EQ(gpd::species_value(builtin("one"), 2).kind(), ExprKind::Empty);
    const GroupoidExpr z4 = gpd::species_value(builtin("Z"), 4);
    EXPECT_EQ(z4.kind(), ExprKind::Cyclic);
    EXPECT_EQ(z4.order(), 4u);
    EXPECT_EQ(gpd::species_value(builtin("Z"), 1).order(), 1u);
    EXPECT_EQ(gpd::species_value(builtin("Z"), 0).kind(), ExprKind::Empty);
    EXPECT_THROW(builtin("E"), gpd::UnknownBuiltin);
}

TEST(SpeciesBuiltins, Valuations) {
    EXPECT_EQ(gpd::valuation(builtin("Z"), 4).coefficients(),
              (std::vector<Rational>{0, 1, Rational(1, 2), Rational(1, 3), Rational(1, 4)}));
    EXPECT_EQ(gpd::valuation(builtin("singleton"), 3), EgfSeries::x(3));
    EXPECT_EQ(gpd::valuation(builtin("one"), 3), EgfSeries::one(3));
    EXPECT_EQ(gpd::valuation(builtin("sets"), 3), EgfSeries::exp(3));
    EXPECT_EQ(gpd::valuation(builtin("zero"), 5), EgfSeries::zero(5));
}

TEST(SpeciesSum, Examples) {
    const Species z = builtin("Z");
    for (std::size_t n = 0; n < 5; ++n)
        EXPECT_EQ(card(gpd::sum(builtin("zero"), z), n), card(z, n));
    EXPECT_EQ(card(gpd::sum(builtin("singleton"), builtin("singleton")), 1), Rational(2));
    EXPECT_EQ(card(gpd::sum(z, z), 3), Rational(2, 3));
}

TEST(SpeciesHadamard, Examples) {
    const Species z = builtin("Z");
    for (std::size_t n = 0; n < 5; ++n) {
        EXPECT_EQ(card(gpd::hadamard(z, builtin("sets")), n), card(z, n));
        EXPECT_TRUE(gpd::species_value(gpd::hadamard(builtin("singleton"), builtin("one")), n).has_no_objects());
    }
    EXPECT_EQ(card(gpd::hadamard(z, z), 3), Rational(1, 9));
}

TEST(SpeciesProd, Examples) {
    const Species z = builtin("Z");
    for (std::size_t n = 0; n < 6; ++n)
        EXPECT_EQ(card(gpd::prod(builtin("one"), z), n), card(z, n));
    EXPECT_EQ(card(gpd::prod(builtin("singleton"), builtin("singleton")), 2), Rational(2));
    EXPECT_EQ(card(gpd::prod(z, z), 2), Rational(2));
}

TEST(SpeciesProd, OneSummandPerSubset) {
    const Species p = gpd::prod(builtin("sets"), builtin("Z"));
    for (std::size_t n = 0; n <= 6; ++n) {
        const GroupoidExpr v = gpd::species_value(p, n);
        ASSERT_EQ(v.kind(), ExprKind::DisjointUnion);
        EXPECT_EQ(v.children().size(), std::size_t{1} << n);
    }
    const GroupoidExpr v3 = gpd::species_value(p, 3);
    EXPECT_EQ(v3.child_tags()[0], "{}");
    EXPECT_EQ(v3.child_tags()[5], "{1,3}");
    EXPECT_EQ(v3.child_tags()[7], "{1,2,3}");
}

TEST(SpeciesProd, ExpansionCap) {
    const Species p = gpd::prod(builtin("sets"), builtin("sets"), gpd::ExpansionCaps{4, 12});
    EXPECT_NO_THROW(gpd::species_value(p, 4));
    EXPECT_THROW(gpd::species_value(p, 5), gpd::ResourceLimitExceeded);
}

TEST(SpeciesCompose, Examples) {
    const Species z = builtin("Z");
    for (std::size_t n = 0; n < 6; ++n)
        EXPECT_EQ(card(gpd::compose(z, builtin("singleton")), n), card(z, n));
    EXPECT_EQ(card(gpd::compose(builtin("sets"), z), 2), Rational(3, 2));
    EXPECT_THROW(gpd::compose(builtin("sets"), builtin("one")), gpd::CompositionRequiresZeroFree);
    EXPECT_THROW(gpd::compose(builtin("sets"), builtin("sets")), gpd::CompositionRequiresZeroFree);
}

TEST(SpeciesCompose, OneSummandPerSetPartition) {
    const Species c = gpd::compose(builtin("sets"), builtin("Z"));
    for (int n = 1; n <= 7; ++n) {
        const GroupoidExpr v = gpd::species_value(c, n);
        ASSERT_EQ(v.kind(), ExprKind::DisjointUnion);
        EXPECT_EQ(v.children().size(), oracle::set_partitions(n).size());
    }
    const GroupoidExpr v3 = gpd::species_value(c, 3);
    ASSERT_EQ(v3.children().size(), 5u);
    EXPECT_EQ(v3.child_tags()[0], "{{1,2,3}}");
    EXPECT_EQ(v3.child_tags()[1], "{{1,2},{3}}");
    EXPECT_EQ(v3.child_tags()[4], "{{1},{2},{3}}");
}

TEST(SpeciesCompose, ExpansionCap) {
    const Species c = gpd::compose(builtin("sets"), builtin("Z"), gpd::ExpansionCaps{20, 3});
    EXPECT_NO_THROW(gpd::species_value(c, 3));
    EXPECT_THROW(gpd::species_value(c, 4), gpd::ResourceLimitExceeded);
}

TEST(Species, MemoIsStable) {
    const Species c = gpd::compose(builtin("sets"), gpd::sum(builtin("Z"), builtin("singleton")));
    const GroupoidExpr first = gpd::species_value(c, 5);
    EXPECT_TRUE(first == gpd::species_value(c, 5));
    EXPECT_EQ(first.node_id(), gpd::species_value(c, 5).node_id());
}

TEST(Species, ConcurrentEvaluationAgrees) {
    const Species c = gpd::compose(builtin("sets"), gpd::prod(builtin("singleton"), builtin("sets")));
    std::vector<Rational> results(8);
    std::vector<std::thread> threads;
    for (std::size_t t = 0; t < results.size(); ++t)
        threads.emplace_back([&, t] { results[t] = card(c, 7); });
    for (auto& th : threads)
        th.join();
    for (const Rational& r : results)
        EXPECT_EQ(r, results[0]);
    // Sets of pointed blocks are idempotent self-maps of [7]:
    // sum_k C(7,k) k^(7-k) = 6322.
    EXPECT_EQ(results[0], Rational(6322));
}

TEST(Species, TextForm) {
    const Species s = gpd::compose(builtin("sets"), gpd::hadamard(builtin("Z"), gpd::sum(builtin("one"), builtin("sets"))));
    EXPECT_EQ(s.to_string(), "comp(sets,had(Z,sum(one,sets)))");
    EXPECT_EQ(gpd::prod(builtin("Z"), builtin("zero")).to_string(), "prod(Z,zero)");
}

TEST(SpeciesValuation, HomomorphismOnRandomSpecies) {
    std::mt19937_64 rng(123);
    const std::size_t order = 6;
    for (int trial = 0; trial < 150; ++trial) {
        const Species f = random_gen::random_species(rng, 2);
        const Species g = random_gen::random_species(rng, 2);
        const Species h = random_gen::zero_free(random_gen::random_species(rng, 2));
        const EgfSeries vf = gpd::valuation(f, order), vg = gpd::valuation(g, order), vh = gpd::valuation(h, order);
        ASSERT_EQ(gpd::valuation(gpd::sum(f, g), order), gpd::add(vf, vg));
        ASSERT_EQ(gpd::valuation(gpd::hadamard(f, g), order), gpd::hadamard(vf, vg));
        ASSERT_EQ(gpd::valuation(gpd::prod(f, g), order), gpd::cauchy_product(vf, vg));
        ASSERT_EQ(gpd::valuation(gpd::compose(f, h), order), gpd::compose(vf, vh)) << f.to_string() << " o " << h.to_string();
    }
}

TEST(SpeciesValuation, SeriesOperationsMatchCombinators) {
    std::mt19937_64 rng(321);
    const std::size_t order = 8;
    for (int trial = 0; trial < 20; ++trial) {
        const EgfSeries f = random_nonnegative(rng, order, false), g = random_nonnegative(rng, order, true);
        const Species sf = with_valuation(f, "f"), sg = with_valuation(g, "g");
        ASSERT_EQ(gpd::valuation(sf, order), f);
        ASSERT_EQ(gpd::valuation(gpd::sum(sf, sg), order), gpd::add(f, g));
        ASSERT_EQ(gpd::valuation(gpd::hadamard(sf, sg), order), gpd::hadamard(f, g));
        ASSERT_EQ(gpd::valuation(gpd::prod(sf, sg), order), gpd::cauchy_product(f, g));
        ASSERT_EQ(gpd::valuation(gpd::compose(sf, sg), order), gpd::compose(f, g));
    }
}

TEST(SpeciesValuation, SetsOfCycles) {
    const EgfSeries v = gpd::valuation(gpd::compose(builtin("sets"), builtin("Z")), 6);
    const EgfSeries expected = gpd::compose(EgfSeries::exp(6), gpd::valuation(builtin("Z"), 6));
    EXPECT_EQ(v, expected);
}
