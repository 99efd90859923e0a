#include "gpd/groupoid_expr.hpp"

#include <limits>
#include <stdexcept>

#include "gpd/error.hpp"

namespace gpd {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

}  // namespace

struct GroupoidExpr::Node {
    ExprKind kind = ExprKind::Empty;
    std::uint64_t value = 0;
    std::string tag;
    std::vector<GroupoidExpr> children;
    std::vector<std::string> child_tags;
    Rational cardinality;
    ExplicitSize size;
};

GroupoidExpr::GroupoidExpr() : GroupoidExpr(empty()) {}

GroupoidExpr GroupoidExpr::empty() {
    static const auto node = std::make_shared<const Node>();
    return GroupoidExpr(node);
}

GroupoidExpr GroupoidExpr::unit() {
    static const auto node = [] {
        auto n = std::make_shared<Node>();
        n->kind = ExprKind::Unit;
        n->cardinality = Rational(1);
        n->size = {1, 1, 1};
        return std::shared_ptr<const Node>(std::move(n));
    }();
    return GroupoidExpr(node);
}

GroupoidExpr GroupoidExpr::discrete(std::uint64_t count, std::string tag) {
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Discrete;
    n->value = count;
    n->tag = std::move(tag);
    n->cardinality = Rational(Integer(static_cast<unsigned long>(count)));
    n->size = {count, count, count};
    return GroupoidExpr(std::move(n));
}

GroupoidExpr GroupoidExpr::cyclic(std::uint64_t order) {
    if (order == 0)
        throw Error("cyclic group order must be at least 1");
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Cyclic;
    n->value = order;
    n->cardinality = Rational(Integer(1), Integer(static_cast<unsigned long>(order)));
    // One object with `order` automorphisms: m morphisms, m^2 composable pairs.
    n->size = {1, order, sat_mul(order, order)};
    return GroupoidExpr(std::move(n));
}

GroupoidExpr GroupoidExpr::disjoint_union(std::vector<GroupoidExpr> children, std::vector<std::string> tags) {
    if (!tags.empty() && tags.size() != children.size())
        throw Error("disjoint union tags must match its children");
    if (children.empty())
        return empty();
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::DisjointUnion;
    for (const GroupoidExpr& c : children) {
        n->cardinality += c.cardinality();
        const ExplicitSize& s = c.size();
        n->size.objects = sat_add(n->size.objects, s.objects);
        n->size.morphisms = sat_add(n->size.morphisms, s.morphisms);
        n->size.compositions = sat_add(n->size.compositions, s.compositions);
    }
    n->children = std::move(children);
    n->child_tags = std::move(tags);
    return GroupoidExpr(std::move(n));
}

GroupoidExpr GroupoidExpr::product(std::vector<GroupoidExpr> children) {
    if (children.empty())
        return unit();
    auto n = std::make_shared<Node>();
    n->kind = ExprKind::Product;
    n->cardinality = Rational(1);
    n->size = {1, 1, 1};
    bool any_empty = false;
    for (const GroupoidExpr& c : children) {
        n->cardinality *= c.cardinality();
        const ExplicitSize& s = c.size();
        any_empty = any_empty || s.objects == 0;
        n->size.objects = sat_mul(n->size.objects, s.objects);
        n->size.morphisms = sat_mul(n->size.morphisms, s.morphisms);
        n->size.compositions = sat_mul(n->size.compositions, s.compositions);
    }
    // A saturated factor times an empty one is still empty.
    if (any_empty)
        n->size = {};
    n->children = std::move(children);
    return GroupoidExpr(std::move(n));
}

ExprKind GroupoidExpr::kind() const { return node_->kind; }
std::uint64_t GroupoidExpr::count() const { return node_->kind == ExprKind::Discrete ? node_->value : 0; }
std::uint64_t GroupoidExpr::order() const { return node_->kind == ExprKind::Cyclic ? node_->value : 0; }
const std::string& GroupoidExpr::tag() const { return node_->tag; }
std::span<const GroupoidExpr> GroupoidExpr::children() const { return node_->children; }
std::span<const std::string> GroupoidExpr::child_tags() const { return node_->child_tags; }
const Rational& GroupoidExpr::cardinality() const { return node_->cardinality; }
const ExplicitSize& GroupoidExpr::size() const { return node_->size; }

std::string GroupoidExpr::to_string() const {
    switch (node_->kind) {
    case ExprKind::Empty:
        return "empty";
    case ExprKind::Unit:
        return "unit";
    case ExprKind::Discrete:
        return "discrete(" + std::to_string(node_->value) + ")";
    case ExprKind::Cyclic:
        return "cyclic(" + std::to_string(node_->value) + ")";
    case ExprKind::DisjointUnion:
    case ExprKind::Product: {
        std::string out = node_->kind == ExprKind::DisjointUnion ? "u(" : "x(";
        for (std::size_t i = 0; i < node_->children.size(); ++i) {
            if (i > 0)
                out += ',';
            out += node_->children[i].to_string();
        }
        return out + ")";
    }
    }
    return {};
}

bool operator==(const GroupoidExpr& lhs, const GroupoidExpr& rhs) {
    if (lhs.node_ == rhs.node_)
        return true;
    const GroupoidExpr::Node& a = *lhs.node_;
    const GroupoidExpr::Node& b = *rhs.node_;
    return a.kind == b.kind && a.value == b.value && a.tag == b.tag && a.child_tags == b.child_tags &&
           a.children == b.children;
}

GroupoidExpr disjoint_union(const GroupoidExpr& g, const GroupoidExpr& h) {
    return GroupoidExpr::disjoint_union({g, h});
}

GroupoidExpr product(const GroupoidExpr& g, const GroupoidExpr& h) { return GroupoidExpr::product({g, h}); }

GroupoidExpr interpret_rational(const Rational& value) {
    if (value.sign() < 0)
        throw Error("groupoid cardinalities are nonnegative, got " + value.to_string());
    if (value.is_zero())
        return GroupoidExpr::empty();
    const Integer num = value.numerator();
    const Integer den = value.denominator();
    if (!num.fits_ulong_p() || !den.fits_ulong_p())
        throw ResourceLimitExceeded("rational " + value.to_string() + " is too large to interpret");
    if (den == 1)
        return GroupoidExpr::discrete(num.get_ui());
    return GroupoidExpr::product({GroupoidExpr::discrete(num.get_ui()), GroupoidExpr::cyclic(den.get_ui())});
}

}  // namespace gpd
