#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gpd/explicit_groupoid.hpp"
#include "gpd/groupoid_expr.hpp"
#include "gpd/rational.hpp"
#include "gpd/realize.hpp"
#include "gpd/species.hpp"

namespace gpd {

// p/q with p, q >= 1, kept exactly as written: 2/4 and 1/2 describe
// different groupoids with the same cardinality.
struct PositiveFraction {
    std::uint64_t numerator = 1;
    std::uint64_t denominator = 1;

    Rational value() const;
    std::string to_string() const;
    friend bool operator==(const PositiveFraction&, const PositiveFraction&) = default;
};

// Upper parameters a_i/b_i and lower parameters c_j/d_j.
struct HyperParams {
    std::vector<PositiveFraction> upper;
    std::vector<PositiveFraction> lower;

    std::vector<Rational> upper_values() const;
    std::vector<Rational> lower_values() const;
};

enum class Interpretation { Product, Alternative };

// prod_{i<n} (g u (k x [i])). Its cardinality is (|g|)_{n,|k|}.
GroupoidExpr functorial_pochhammer(const GroupoidExpr& g, const GroupoidExpr& k, std::size_t n);

// prod_{i<n} Z_{c + i d}, of cardinality 1/(c)_{n,d}.
GroupoidExpr zbar_chain(std::uint64_t c, std::size_t n, std::uint64_t d);

// [n] |-> ([a])_{n,[b]} x Z_b^n, with |value(n)| = (a/b)_n.
Species species_H_upper(std::uint64_t a, std::uint64_t b);
// [n] |-> [d]^n x Z_{c,n,d}, with |value(n)| = 1/(c/d)_n.
Species species_H_lower(std::uint64_t c, std::uint64_t d);
// [n] |-> (Z_b^{+a})_n, the alternative upper factor; |value(n)| = (a/b)_n.
Species species_H_upper_alt(std::uint64_t a, std::uint64_t b);

// Pointwise product of one factor per parameter; the valuation is the
// hypergeometric series of the parameters.
Species species_H(const HyperParams& params, Interpretation interpretation = Interpretation::Product);

// Objects are tuples (x_1..x_n) with 1 <= x_i <= a+i-1; each object has
// automorphism group Z_b^{c(x)}, c(x) = #{i : x_i <= a}, and there are no
// morphisms between distinct objects. Built directly, not via realize.
ExplicitGroupoid alt_pochhammer_groupoid(std::uint64_t a, std::uint64_t b, std::size_t n, const ResourceCaps& caps = {});

// Coordinate i of alt_pochhammer_groupoid: objects 1..a+i, those <= a with
// automorphism group Z_b. The product of coordinates 0..n-1 is
// alt_pochhammer_groupoid(a, b, n), with the same object labels.
ExplicitGroupoid alt_pochhammer_coordinate(std::uint64_t a, std::uint64_t b, std::size_t i);

// f_i(p) is either an element of [a_i] or a pair (element of [b_i], step)
// with 1 <= step <= p.
struct FromUpper {
    std::uint64_t element;
    friend bool operator==(const FromUpper&, const FromUpper&) = default;
};
struct FromStep {
    std::uint64_t element;
    std::uint64_t step;
    friend bool operator==(const FromStep&, const FromStep&) = default;
};
using PochhammerValue = std::variant<FromUpper, FromStep>;

// One object (I, f, g) of the explicit description of H(params)[n].
// I[i] is a sorted subset of {1..n-1}; f[i][p] for p = 0..n-1 is FromStep
// exactly when p is in I[i]; g[j][p] is in [d_j].
struct TripleObject {
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::vector<PochhammerValue>> upper_maps;
    std::vector<std::vector<std::uint64_t>> lower_maps;

    friend bool operator==(const TripleObject&, const TripleObject&) = default;
};

bool satisfies_triple_invariants(const TripleObject& t, const HyperParams& params, std::size_t n);

// Every triple, in lexicographic order of its components. Throws
// ResourceLimitExceeded when the count exceeds caps.max_objects.
std::vector<TripleObject> explicit_H_objects(const HyperParams& params, std::size_t n, const ResourceCaps& caps = {});

// The number of triples, obtained by enumerating each index's admissible
// (I_i, f_i) and g_j separately and multiplying the counts.
Integer count_H_objects(const HyperParams& params, std::size_t n);

struct VerificationRow {
    std::size_t n = 0;
    Rational explicit_value;
    Rational symbolic;
    Rational analytic;
    bool pass = false;
    bool factored = false;
};

struct ResourceOverflow {
    std::size_t n = 0;
    std::string message;
};

struct VerificationReport {
    std::vector<VerificationRow> rows;
    // Set when realization at some n hit a resource cap; rows stop before it.
    std::optional<ResourceOverflow> overflow;

    bool passed() const;
    const VerificationRow* first_failure() const;
};

struct VerificationCache {
    ExplicitCardinalityCache realized;
    // Cardinalities of alt_pochhammer_groupoid, keyed by the factor's value node.
    ExplicitCardinalityCache alternative;
};

enum class VerifyStrategy {
    // Materialize H(params)[n] as one groupoid.
    Whole,
    // Materialize the whole value when it fits the caps, otherwise each
    // H(a/b;) and H(;c/d) factor value as one groupoid.
    PerFactor,
    // As PerFactor, but factor values that do not fit are split further with
    // ExplicitStrategy::Factored, and alternative upper factors that do not
    // fit are counted coordinate by coordinate.
    Factored,
};

struct VerifyOptions {
    ResourceCaps caps;
    // Values over these limits are evaluated per factor even when they fit
    // `caps`. Unset means `caps`. Ignored by the Whole strategy.
    std::optional<ResourceCaps> whole_value_caps;
    VerifyStrategy strategy = VerifyStrategy::PerFactor;
    VerificationCache* cache = nullptr;
};

// For n = 0..order, compares the brute-force cardinality of H(params)[n]
// (materialized, validated and counted by iso classes), its symbolic
// cardinality, and the hypergeometric coefficient. Under Alternative the
// upper factors are materialized by alt_pochhammer_groupoid.
VerificationReport verify_theorem(const HyperParams& params, std::size_t order, Interpretation interpretation,
                                  const VerifyOptions& options = {});

}  // namespace gpd
