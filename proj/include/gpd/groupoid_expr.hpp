#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

enum class ExprKind { Empty, Unit, Discrete, Cyclic, DisjointUnion, Product };

// Exact sizes of the groupoid an expression materializes to, saturating at
// UINT64_MAX. `compositions` counts composable pairs, the size of the
// composition table.
struct ExplicitSize {
    std::uint64_t objects = 0;
    std::uint64_t morphisms = 0;
    std::uint64_t compositions = 0;

    friend bool operator==(const ExplicitSize&, const ExplicitSize&) = default;
};

// Immutable expression tree over discrete sets, cyclic-group groupoids,
// disjoint unions and Cartesian products. Copies share structure. Cardinality
// and materialized size are computed once, when a node is built.
class GroupoidExpr {
public:
    GroupoidExpr();  // Empty

    static GroupoidExpr empty();
    static GroupoidExpr unit();
    // `count` objects and identities only; `tag` prefixes object labels.
    static GroupoidExpr discrete(std::uint64_t count, std::string tag = {});
    // One object whose automorphism group is Z_order. order >= 1.
    static GroupoidExpr cyclic(std::uint64_t order);
    // `tags`, when given, names each summand in realized labels; it must be
    // empty or match `children` in length. An empty union is Empty.
    static GroupoidExpr disjoint_union(std::vector<GroupoidExpr> children, std::vector<std::string> tags = {});
    // An empty product is Unit.
    static GroupoidExpr product(std::vector<GroupoidExpr> children);

    ExprKind kind() const;
    // Discrete label count.
    std::uint64_t count() const;
    // Cyclic group order.
    std::uint64_t order() const;
    const std::string& tag() const;
    std::span<const GroupoidExpr> children() const;
    std::span<const std::string> child_tags() const;

    const Rational& cardinality() const;
    const ExplicitSize& size() const;
    bool has_no_objects() const { return size().objects == 0; }

    // Text in the CLI expression syntax; tags are not rendered.
    std::string to_string() const;

    // Identity of the shared node; equal ids imply structural equality.
    const void* node_id() const { return node_.get(); }

    friend bool operator==(const GroupoidExpr& lhs, const GroupoidExpr& rhs);

private:
    struct Node;
    explicit GroupoidExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Compositional cardinality: Empty 0, Unit 1, Discrete n, Cyclic 1/m, unions
// add, products multiply. Never materializes objects.
inline const Rational& cardinality_expr(const GroupoidExpr& e) { return e.cardinality(); }

GroupoidExpr disjoint_union(const GroupoidExpr& g, const GroupoidExpr& h);
GroupoidExpr product(const GroupoidExpr& g, const GroupoidExpr& h);

// A groupoid of the given nonnegative cardinality p/q: p copies of Z_q.
GroupoidExpr interpret_rational(const Rational& value);

}  // namespace gpd
