#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <string_view>

#include "gpd/groupoid_expr.hpp"
#include "gpd/series.hpp"

namespace gpd {

// Largest sizes at which the subset-sum (prod) and partition-sum (compose)
// combinators will expand; beyond them evaluation throws ResourceLimitExceeded.
struct ExpansionCaps {
    std::size_t max_product_size = 20;  // 2^20 summands
    std::size_t max_compose_size = 12;  // Bell(12) = 4213597 summands
};

// A groupoid-valued species, evaluated on the canonical sets [n] only.
// Subsets and partition blocks are transported to [|block|] by the
// order-preserving bijection; the action on bijections is not represented.
// Values are memoized per species; concurrent evaluation is safe and a racing
// duplicate fill computes the same value.
class Species {
public:
    enum class Kind { Builtin, Custom, Sum, Hadamard, Prod, Compose };
    using Rule = std::function<GroupoidExpr(std::size_t)>;

    // zero, one (Unit on the empty set), singleton (Unit on one-element
    // sets), sets (Unit everywhere), Z (Z_n on [n], empty on [0]).
    static Species builtin(std::string_view name);
    static Species custom(std::string name, Rule rule);

    Kind kind() const;
    const std::string& name() const;
    std::span<const Species> operands() const;

    GroupoidExpr value(std::size_t n) const;

    // Species expression syntax: builtins by name, sum/had/prod/comp(F,G),
    // custom species by their name.
    std::string to_string() const;

private:
    friend Species sum(const Species&, const Species&);
    friend Species hadamard(const Species&, const Species&);
    friend Species prod(const Species&, const Species&, const ExpansionCaps&);
    friend Species compose(const Species&, const Species&, const ExpansionCaps&);

    struct Node;
    explicit Species(std::shared_ptr<Node> node) : node_(std::move(node)) {}

    std::shared_ptr<Node> node_;
};

inline Species builtin_species(std::string_view name) { return Species::builtin(name); }
inline GroupoidExpr species_value(const Species& f, std::size_t n) { return f.value(n); }

// F(x) + G(x).
Species sum(const Species& f, const Species& g);
// F(x) x G(x).
Species hadamard(const Species& f, const Species& g);
// Union over subsets S of [n] of F(S) x G([n] \ S); summands tagged by S.
Species prod(const Species& f, const Species& g, const ExpansionCaps& caps = {});
// Union over set partitions p of [n] of F(p) x prod_{b in p} G(b); summands
// tagged by p, partitions in restricted-growth order. Throws
// CompositionRequiresZeroFree unless G takes the empty groupoid at size 0.
Species compose(const Species& f, const Species& g, const ExpansionCaps& caps = {});

// a_n = |F[n]| for n = 0..order.
EgfSeries valuation(const Species& f, std::size_t order);

}  // namespace gpd
