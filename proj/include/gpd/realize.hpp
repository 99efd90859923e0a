#pragma once

#include <cstdint>
#include <mutex>
#include <unordered_map>

#include "gpd/explicit_groupoid.hpp"
#include "gpd/groupoid_expr.hpp"

namespace gpd {

// Limits on materialization, checked against predicted sizes before anything
// is allocated. The composition limit bounds the composition table (4 bytes
// per entry); it is not exposed by the CLI.
struct ResourceCaps {
    std::uint64_t max_objects = 200'000;
    std::uint64_t max_morphisms = 2'000'000;
    std::uint64_t max_compositions = 16'000'000;

    bool admits(const ExplicitSize& size) const;
};

// Throws ResourceLimitExceeded naming the first exceeded limit.
void check_caps(const ExplicitSize& size, const ResourceCaps& caps);

// Objects are labelled structurally: products give tuples, unions give
// injections tagged by the child tag (or index), discrete sets give
// `<tag><i>` atoms and Z_m gives the atom `Z<m>`.
ExplicitGroupoid realize(const GroupoidExpr& e, const ResourceCaps& caps = {});

enum class ExplicitStrategy {
    // Materialize the whole groupoid; over-cap values are an error.
    Whole,
    // Materialize the largest subtrees that fit the caps. A Product that does
    // not fit is evaluated factor by factor and the factor cardinalities are
    // multiplied; an over-cap non-product node is still an error.
    Factored,
};

struct ExplicitEvaluation {
    Rational total;
    // True when at least one Product was split into separately realized factors.
    bool factored = false;
};

// Memo of realized-and-counted subtrees, keyed by node identity. Entries keep
// their expressions alive, so pass one only where subtrees are shared. Safe
// for concurrent use.
class ExplicitCardinalityCache {
public:
    const Rational* find(const GroupoidExpr& e) const;
    void insert(const GroupoidExpr& e, const Rational& total);
    std::size_t size() const;

private:
    mutable std::mutex mutex_;
    // The stored expression keeps its node alive so the key stays unique.
    std::unordered_map<const void*, std::pair<GroupoidExpr, Rational>> entries_;
};

// Brute-force cardinality by realization, validation and iso-class counting.
ExplicitEvaluation explicit_cardinality(const GroupoidExpr& e, const ResourceCaps& caps,
                                        ExplicitStrategy strategy = ExplicitStrategy::Whole,
                                        ExplicitCardinalityCache* cache = nullptr);

}  // namespace gpd
