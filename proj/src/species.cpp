#include "gpd/species.hpp"

#include <map>
#include <mutex>
#include <vector>

#include "gpd/error.hpp"
#include "gpd/partitions.hpp"

namespace gpd {

struct Species::Node {
    Kind kind = Kind::Builtin;
    std::string name;
    std::vector<Species> operands;
    Rule rule;

    mutable std::mutex memo_mutex;
    mutable std::map<std::size_t, GroupoidExpr> memo;
};

namespace {

std::string subset_tag(std::uint64_t mask, std::size_t n) {
    std::string tag = "{";
    bool first = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (!(mask >> i & 1U))
            continue;
        if (!first)
            tag += ',';
        tag += std::to_string(i + 1);
        first = false;
    }
    return tag + "}";
}

std::string partition_tag(const std::vector<std::vector<std::size_t>>& blocks) {
    std::string tag = "{";
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        if (b > 0)
            tag += ',';
        tag += '{';
        for (std::size_t i = 0; i < blocks[b].size(); ++i) {
            if (i > 0)
                tag += ',';
            tag += std::to_string(blocks[b][i] + 1);
        }
        tag += '}';
    }
    return tag + "}";
}

GroupoidExpr expand_product(const Species& f, const Species& g, std::size_t n, const ExpansionCaps& caps) {
    if (n > caps.max_product_size)
        throw ResourceLimitExceeded("species product at size " + std::to_string(n) + " exceeds the subset cap " +
                                    std::to_string(caps.max_product_size));
    // All summands for subsets of one size share a single product node.
    std::vector<GroupoidExpr> by_size;
    for (std::size_t k = 0; k <= n; ++k)
        by_size.push_back(GroupoidExpr::product({f.value(k), g.value(n - k)}));

    const std::uint64_t subsets = std::uint64_t{1} << n;
    std::vector<GroupoidExpr> summands;
    std::vector<std::string> tags;
    summands.reserve(subsets);
    tags.reserve(subsets);
    for (std::uint64_t mask = 0; mask < subsets; ++mask) {
        summands.push_back(by_size[static_cast<std::size_t>(__builtin_popcountll(mask))]);
        tags.push_back(subset_tag(mask, n));
    }
    return GroupoidExpr::disjoint_union(std::move(summands), std::move(tags));
}

GroupoidExpr expand_compose(const Species& f, const Species& g, std::size_t n, const ExpansionCaps& caps) {
    if (n > caps.max_compose_size)
        throw ResourceLimitExceeded("species composition at size " + std::to_string(n) +
                                    " exceeds the partition cap " + std::to_string(caps.max_compose_size));
    std::map<std::vector<std::size_t>, GroupoidExpr> by_shape;
    std::vector<GroupoidExpr> summands;
    std::vector<std::string> tags;
    std::vector<std::vector<std::size_t>> blocks;
    for_each_set_partition(n, [&](const std::vector<std::uint32_t>& rgs, std::size_t block_count) {
        blocks.assign(block_count, {});
        for (std::size_t i = 0; i < n; ++i)
            blocks[rgs[i]].push_back(i);
        std::vector<std::size_t> shape;
        for (const auto& b : blocks)
            shape.push_back(b.size());
        auto it = by_shape.find(shape);
        if (it == by_shape.end()) {
            std::vector<GroupoidExpr> inner;
            for (std::size_t size : shape)
                inner.push_back(g.value(size));
            it = by_shape
                     .emplace(shape, GroupoidExpr::product(
                                         {f.value(block_count), GroupoidExpr::product(std::move(inner))}))
                     .first;
        }
        summands.push_back(it->second);
        tags.push_back(partition_tag(blocks));
    });
    return GroupoidExpr::disjoint_union(std::move(summands), std::move(tags));
}

}  // namespace

Species Species::builtin(std::string_view name) {
    Rule rule;
    if (name == "zero")
        rule = [](std::size_t) { return GroupoidExpr::empty(); };
    else if (name == "one")
        rule = [](std::size_t n) { return n == 0 ? GroupoidExpr::unit() : GroupoidExpr::empty(); };
    else if (name == "singleton")
        rule = [](std::size_t n) { return n == 1 ? GroupoidExpr::unit() : GroupoidExpr::empty(); };
    else if (name == "sets")
        rule = [](std::size_t) { return GroupoidExpr::unit(); };
    else if (name == "Z")
        rule = [](std::size_t n) { return n == 0 ? GroupoidExpr::empty() : GroupoidExpr::cyclic(n); };
    else
        throw UnknownBuiltin(std::string(name));
    auto node = std::make_shared<Node>();
    node->kind = Kind::Builtin;
    node->name = std::string(name);
    node->rule = std::move(rule);
    return Species(std::move(node));
}

Species Species::custom(std::string name, Rule rule) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Custom;
    node->name = std::move(name);
    node->rule = std::move(rule);
    return Species(std::move(node));
}

Species::Kind Species::kind() const { return node_->kind; }
const std::string& Species::name() const { return node_->name; }
std::span<const Species> Species::operands() const { return node_->operands; }

GroupoidExpr Species::value(std::size_t n) const {
    {
        std::lock_guard lock(node_->memo_mutex);
        const auto it = node_->memo.find(n);
        if (it != node_->memo.end())
            return it->second;
    }
    GroupoidExpr computed = node_->rule(n);
    std::lock_guard lock(node_->memo_mutex);
    return node_->memo.try_emplace(n, std::move(computed)).first->second;
}

std::string Species::to_string() const {
    switch (node_->kind) {
    case Kind::Builtin:
    case Kind::Custom:
        return node_->name;
    default:
        return node_->name + "(" + node_->operands[0].to_string() + "," + node_->operands[1].to_string() + ")";
    }
}

Species sum(const Species& f, const Species& g) {
    auto node = std::make_shared<Species::Node>();
    node->kind = Species::Kind::Sum;
    node->name = "sum";
    node->operands = {f, g};
    node->rule = [f, g](std::size_t n) { return disjoint_union(f.value(n), g.value(n)); };
    return Species(std::move(node));
}

Species hadamard(const Species& f, const Species& g) {
    auto node = std::make_shared<Species::Node>();
    node->kind = Species::Kind::Hadamard;
    node->name = "had";
    node->operands = {f, g};
    node->rule = [f, g](std::size_t n) { return product(f.value(n), g.value(n)); };
    return Species(std::move(node));
}

Species prod(const Species& f, const Species& g, const ExpansionCaps& caps) {
    auto node = std::make_shared<Species::Node>();
    node->kind = Species::Kind::Prod;
    node->name = "prod";
    node->operands = {f, g};
    node->rule = [f, g, caps](std::size_t n) { return expand_product(f, g, n, caps); };
    return Species(std::move(node));
}

Species compose(const Species& f, const Species& g, const ExpansionCaps& caps) {
    if (!g.value(0).has_no_objects())
        throw CompositionRequiresZeroFree();
    auto node = std::make_shared<Species::Node>();
    node->kind = Species::Kind::Compose;
    node->name = "comp";
    node->operands = {f, g};
    node->rule = [f, g, caps](std::size_t n) { return expand_compose(f, g, n, caps); };
    return Species(std::move(node));
}

EgfSeries valuation(const Species& f, std::size_t order) {
    std::vector<Rational> coefficients;
    coefficients.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        coefficients.push_back(cardinality_expr(f.value(n)));
    return EgfSeries(std::move(coefficients));
}

}  // namespace gpd
