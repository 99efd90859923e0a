#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

using ObjectId = std::uint32_t;
using MorphismId = std::uint32_t;
inline constexpr std::uint32_t kNoId = UINT32_MAX;

// Structured object label: an atom, a tuple of labels (products) or a tagged
// injection of a label (disjoint unions). Copies share structure.
class ObjectLabel {
public:
    enum class Kind { Atom, Tuple, Injection };

    ObjectLabel();  // the empty tuple

    static ObjectLabel atom(std::string text);
    static ObjectLabel tuple(std::vector<ObjectLabel> parts);
    static ObjectLabel injection(std::string tag, ObjectLabel inner);

    Kind kind() const;
    const std::string& text() const;
    std::span<const ObjectLabel> parts() const;

    std::string to_string() const;
    friend bool operator==(const ObjectLabel& lhs, const ObjectLabel& rhs);

private:
    struct Node;
    explicit ObjectLabel(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

struct MorphismEnds {
    ObjectId source = 0;
    ObjectId target = 0;
};

// Fully materialized finite groupoid. Composition is diagrammatic:
// compose(f, g) is "f then g" and is defined exactly when target(f) ==
// source(g). Values are immutable; the with_* members return modified copies
// (used to build deliberately broken groupoids).
class ExplicitGroupoid {
public:
    class Builder;

    ExplicitGroupoid() = default;

    std::size_t object_count() const { return labels_.size(); }
    std::size_t morphism_count() const { return ends_.size(); }
    std::size_t composition_count() const { return table_.size(); }

    const ObjectLabel& label(ObjectId x) const { return labels_.at(x); }
    const MorphismEnds& ends(MorphismId f) const { return ends_.at(f); }
    // kNoId when unset.
    MorphismId identity(ObjectId x) const { return identity_.at(x); }
    MorphismId inverse(MorphismId f) const { return inverse_.at(f); }
    // kNoId when f, g are not composable or the entry is unset.
    MorphismId compose(MorphismId f, MorphismId g) const;

    // Morphisms with source x, in increasing id order.
    std::span<const MorphismId> outgoing(ObjectId x) const;

    ExplicitGroupoid with_compose(MorphismId f, MorphismId g, MorphismId result) const;
    ExplicitGroupoid with_inverse(MorphismId f, MorphismId result) const;

    static ExplicitGroupoid discrete(std::uint64_t count, const std::string& tag = {});
    static ExplicitGroupoid cyclic(std::uint64_t order);
    // Objects are tuples; morphisms and composition act componentwise.
    static ExplicitGroupoid product(std::span<const ExplicitGroupoid> factors);
    // Objects are injections tagged by `tags[i]`, or by the summand index when
    // `tags` is empty.
    static ExplicitGroupoid disjoint_union(std::span<const ExplicitGroupoid> summands,
                                           std::span<const std::string> tags = {});

private:
    friend class Builder;

    // Builds outgoing lists and sizes the composition table from ends_.
    void index_shape();
    std::size_t slot(MorphismId f, MorphismId g) const;

    std::vector<ObjectLabel> labels_;
    std::vector<MorphismEnds> ends_;
    std::vector<MorphismId> identity_;
    std::vector<MorphismId> inverse_;

    std::vector<std::uint32_t> out_offset_;   // per object, into out_list_; size objects+1
    std::vector<MorphismId> out_list_;
    std::vector<std::uint32_t> out_position_; // per morphism, index within outgoing(source)
    std::vector<std::uint64_t> table_offset_; // per morphism, into table_
    std::vector<MorphismId> table_;           // compose(f, g) at table_offset_[f] + out_position_[g]
};

class ExplicitGroupoid::Builder {
public:
    ObjectId add_object(ObjectLabel label);
    MorphismId add_morphism(ObjectId source, ObjectId target);
    void set_identity(ObjectId x, MorphismId f);
    void set_inverse(MorphismId f, MorphismId inverse);
    void set_compose(MorphismId f, MorphismId g, MorphismId result);

    // Throws InvalidGroupoid when a set_compose pair is not composable or an
    // id is out of range. Unset entries stay unset; validate reports them.
    ExplicitGroupoid build() &&;

private:
    ExplicitGroupoid g_;
    std::vector<std::array<std::uint32_t, 3>> pending_compose_;
};

enum class ViolationKind {
    MissingIdentity,
    IdentityLaw,
    MissingComposition,
    CompositionEndpoints,
    Associativity,
    MissingInverse,
    InverseLaw,
    HomSizeCoherence,
};

inline constexpr std::size_t kViolationKindCount = 8;

const char* to_string(ViolationKind kind);

struct Violation {
    ViolationKind kind;
    std::vector<std::uint32_t> ids;
    std::string message;
};

// Every violation is counted; at most kMaxRecordedPerKind examples per kind
// are kept in `violations`.
struct ValidationReport {
    static constexpr std::size_t kMaxRecordedPerKind = 16;

    std::vector<Violation> violations;
    std::array<std::size_t, kViolationKindCount> counts{};

    bool ok() const { return violations.empty(); }
    std::size_t count(ViolationKind kind) const { return counts[static_cast<std::size_t>(kind)]; }
    std::size_t total() const;
};

ValidationReport validate(const ExplicitGroupoid& g);

// Connected components, each sorted, ordered by smallest member. Throws
// InvalidGroupoid when g does not validate.
std::vector<std::vector<ObjectId>> iso_classes(const ExplicitGroupoid& g);

struct IsoClass {
    ObjectId representative;
    std::uint64_t automorphism_order;
};

struct CardinalityReport {
    std::size_t iso_class_count = 0;
    std::vector<IsoClass> classes;
    Rational total;
};

// Sum over iso classes of 1/|Aut(representative)|. Throws InvalidGroupoid
// when g does not validate.
CardinalityReport cardinality_explicit(const ExplicitGroupoid& g);

}  // namespace gpd
