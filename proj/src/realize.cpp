#include "gpd/realize.hpp"

#include <string>

#include "gpd/error.hpp"

namespace gpd {

bool ResourceCaps::admits(const ExplicitSize& size) const {
    return size.objects <= max_objects && size.morphisms <= max_morphisms && size.compositions <= max_compositions;
}

void check_caps(const ExplicitSize& size, const ResourceCaps& caps) {
    auto over = [](const char* what, std::uint64_t value, std::uint64_t cap) {
        const std::string shown = value == UINT64_MAX ? "more than 2^64" : std::to_string(value);
        throw ResourceLimitExceeded(std::string(what) + " count " + shown + " exceeds cap " + std::to_string(cap));
    };
    if (size.objects > caps.max_objects)
        over("object", size.objects, caps.max_objects);
    if (size.morphisms > caps.max_morphisms)
        over("morphism", size.morphisms, caps.max_morphisms);
    if (size.compositions > caps.max_compositions)
        over("composition", size.compositions, caps.max_compositions);
}

namespace {

ExplicitGroupoid realize_unchecked(const GroupoidExpr& e) {
    switch (e.kind()) {
    case ExprKind::Empty:
        return ExplicitGroupoid::discrete(0);
    case ExprKind::Unit:
        return ExplicitGroupoid::product({});
    case ExprKind::Discrete:
        return ExplicitGroupoid::discrete(e.count(), e.tag());
    case ExprKind::Cyclic:
        return ExplicitGroupoid::cyclic(e.order());
    case ExprKind::DisjointUnion: {
        std::vector<ExplicitGroupoid> parts;
        parts.reserve(e.children().size());
        for (const GroupoidExpr& c : e.children())
            parts.push_back(realize_unchecked(c));
        return ExplicitGroupoid::disjoint_union(parts, e.child_tags());
    }
    case ExprKind::Product: {
        // Factors of an empty product may be arbitrarily large; never build them.
        std::vector<ExplicitGroupoid> parts;
        if (e.has_no_objects()) {
            parts.push_back(ExplicitGroupoid::discrete(0));
            return ExplicitGroupoid::product(parts);
        }
        parts.reserve(e.children().size());
        for (const GroupoidExpr& c : e.children())
            parts.push_back(realize_unchecked(c));
        return ExplicitGroupoid::product(parts);
    }
    }
    return {};
}

Rational count_realized(const GroupoidExpr& e, ExplicitCardinalityCache* cache) {
    if (cache)
        if (const Rational* hit = cache->find(e))
            return *hit;
    Rational total = cardinality_explicit(realize_unchecked(e)).total;
    if (cache)
        cache->insert(e, total);
    return total;
}

}  // namespace

ExplicitGroupoid realize(const GroupoidExpr& e, const ResourceCaps& caps) {
    check_caps(e.size(), caps);
    return realize_unchecked(e);
}

const Rational* ExplicitCardinalityCache::find(const GroupoidExpr& e) const {
    std::lock_guard lock(mutex_);
    const auto it = entries_.find(e.node_id());
    return it == entries_.end() ? nullptr : &it->second.second;
}

void ExplicitCardinalityCache::insert(const GroupoidExpr& e, const Rational& total) {
    std::lock_guard lock(mutex_);
    entries_.try_emplace(e.node_id(), e, total);
}

std::size_t ExplicitCardinalityCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

ExplicitEvaluation explicit_cardinality(const GroupoidExpr& e, const ResourceCaps& caps, ExplicitStrategy strategy,
                                        ExplicitCardinalityCache* cache) {
    if (caps.admits(e.size()))
        return {count_realized(e, cache), false};
    if (strategy == ExplicitStrategy::Whole || e.kind() != ExprKind::Product)
        check_caps(e.size(), caps);

    ExplicitEvaluation result{Rational(1), true};
    for (const GroupoidExpr& factor : e.children())
        result.total *= explicit_cardinality(factor, caps, strategy, cache).total;
    return result;
}

}  // namespace gpd
