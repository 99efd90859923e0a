#include "gpd/explicit_groupoid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "gpd/error.hpp"

namespace gpd {

// ---------------------------------------------------------------------------
// ObjectLabel

struct ObjectLabel::Node {
    Kind kind = Kind::Tuple;
    std::string text;
    std::vector<ObjectLabel> parts;
};

ObjectLabel::ObjectLabel() {
    static const auto empty_tuple = std::make_shared<const Node>();
    node_ = empty_tuple;
}

ObjectLabel ObjectLabel::atom(std::string text) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Atom;
    n->text = std::move(text);
    return ObjectLabel(std::move(n));
}

ObjectLabel ObjectLabel::tuple(std::vector<ObjectLabel> parts) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Tuple;
    n->parts = std::move(parts);
    return ObjectLabel(std::move(n));
}

ObjectLabel ObjectLabel::injection(std::string tag, ObjectLabel inner) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Injection;
    n->text = std::move(tag);
    n->parts.push_back(std::move(inner));
    return ObjectLabel(std::move(n));
}

ObjectLabel::Kind ObjectLabel::kind() const { return node_->kind; }
const std::string& ObjectLabel::text() const { return node_->text; }
std::span<const ObjectLabel> ObjectLabel::parts() const { return node_->parts; }

std::string ObjectLabel::to_string() const {
    switch (node_->kind) {
    case Kind::Atom:
        return node_->text;
    case Kind::Injection:
        return node_->text + ":" + node_->parts.front().to_string();
    case Kind::Tuple: {
        std::string out = "(";
        for (std::size_t i = 0; i < node_->parts.size(); ++i) {
            if (i > 0)
                out += ',';
            out += node_->parts[i].to_string();
        }
        return out + ")";
    }
    }
    return {};
}

bool operator==(const ObjectLabel& lhs, const ObjectLabel& rhs) {
    if (lhs.node_ == rhs.node_)
        return true;
    return lhs.node_->kind == rhs.node_->kind && lhs.node_->text == rhs.node_->text &&
           lhs.node_->parts == rhs.node_->parts;
}

// ---------------------------------------------------------------------------
// ExplicitGroupoid storage

void ExplicitGroupoid::index_shape() {
    const std::size_t objects = labels_.size();
    const std::size_t morphisms = ends_.size();
    out_offset_.assign(objects + 1, 0);
    for (const MorphismEnds& e : ends_)
        ++out_offset_[e.source + 1];
    std::partial_sum(out_offset_.begin(), out_offset_.end(), out_offset_.begin());

    out_list_.resize(morphisms);
    out_position_.resize(morphisms);
    std::vector<std::uint32_t> fill(out_offset_.begin(), out_offset_.end() - 1);
    for (MorphismId f = 0; f < morphisms; ++f) {
        const ObjectId s = ends_[f].source;
        out_position_[f] = fill[s] - out_offset_[s];
        out_list_[fill[s]++] = f;
    }

    table_offset_.resize(morphisms);
    std::uint64_t total = 0;
    for (MorphismId f = 0; f < morphisms; ++f) {
        table_offset_[f] = total;
        const ObjectId t = ends_[f].target;
        total += out_offset_[t + 1] - out_offset_[t];
    }
    table_.assign(total, kNoId);
}

std::size_t ExplicitGroupoid::slot(MorphismId f, MorphismId g) const {
    return table_offset_[f] + out_position_[g];
}

MorphismId ExplicitGroupoid::compose(MorphismId f, MorphismId g) const {
    if (f >= ends_.size() || g >= ends_.size() || ends_[f].target != ends_[g].source)
        return kNoId;
    return table_[slot(f, g)];
}

std::span<const MorphismId> ExplicitGroupoid::outgoing(ObjectId x) const {
    return std::span<const MorphismId>(out_list_).subspan(out_offset_.at(x), out_offset_[x + 1] - out_offset_[x]);
}

ExplicitGroupoid ExplicitGroupoid::with_compose(MorphismId f, MorphismId g, MorphismId result) const {
    if (f >= ends_.size() || g >= ends_.size() || ends_[f].target != ends_[g].source)
        throw InvalidGroupoid("with_compose on a non-composable pair");
    ExplicitGroupoid copy = *this;
    copy.table_[slot(f, g)] = result;
    return copy;
}

ExplicitGroupoid ExplicitGroupoid::with_inverse(MorphismId f, MorphismId result) const {
    ExplicitGroupoid copy = *this;
    copy.inverse_.at(f) = result;
    return copy;
}

// ---------------------------------------------------------------------------
// Builder

ObjectId ExplicitGroupoid::Builder::add_object(ObjectLabel label) {
    g_.labels_.push_back(std::move(label));
    g_.identity_.push_back(kNoId);
    return static_cast<ObjectId>(g_.labels_.size() - 1);
}

MorphismId ExplicitGroupoid::Builder::add_morphism(ObjectId source, ObjectId target) {
    if (source >= g_.labels_.size() || target >= g_.labels_.size())
        throw InvalidGroupoid("morphism endpoint out of range");
    g_.ends_.push_back({source, target});
    g_.inverse_.push_back(kNoId);
    return static_cast<MorphismId>(g_.ends_.size() - 1);
}

void ExplicitGroupoid::Builder::set_identity(ObjectId x, MorphismId f) { g_.identity_.at(x) = f; }

void ExplicitGroupoid::Builder::set_inverse(MorphismId f, MorphismId inverse) { g_.inverse_.at(f) = inverse; }

void ExplicitGroupoid::Builder::set_compose(MorphismId f, MorphismId g, MorphismId result) {
    pending_compose_.push_back({f, g, result});
}

ExplicitGroupoid ExplicitGroupoid::Builder::build() && {
    g_.index_shape();
    for (const auto& [f, g, h] : pending_compose_) {
        if (f >= g_.ends_.size() || g >= g_.ends_.size() || g_.ends_[f].target != g_.ends_[g].source)
            throw InvalidGroupoid("composition entry for a non-composable pair (" + std::to_string(f) + ", " +
                                  std::to_string(g) + ")");
        g_.table_[g_.slot(f, g)] = h;
    }
    pending_compose_.clear();
    return std::move(g_);
}

// ---------------------------------------------------------------------------
// Constructions

ExplicitGroupoid ExplicitGroupoid::discrete(std::uint64_t count, const std::string& tag) {
    if (count >= kNoId)
        throw ResourceLimitExceeded("discrete groupoid with " + std::to_string(count) + " objects");
    ExplicitGroupoid g;
    g.labels_.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i)
        g.labels_.push_back(ObjectLabel::atom(tag + std::to_string(i + 1)));
    g.ends_.resize(count);
    g.identity_.resize(count);
    for (std::uint32_t i = 0; i < count; ++i) {
        g.ends_[i] = {i, i};
        g.identity_[i] = i;
    }
    g.inverse_ = g.identity_;
    g.index_shape();
    for (std::uint32_t i = 0; i < count; ++i)
        g.table_[g.slot(i, i)] = i;
    return g;
}

ExplicitGroupoid ExplicitGroupoid::cyclic(std::uint64_t order) {
    if (order == 0)
        throw Error("cyclic group order must be at least 1");
    if (order >= (1ULL << 31))
        throw ResourceLimitExceeded("cyclic group of order " + std::to_string(order));
    const auto m = static_cast<std::uint32_t>(order);
    ExplicitGroupoid g;
    g.labels_.push_back(ObjectLabel::atom("Z" + std::to_string(order)));
    g.identity_.push_back(0);
    g.ends_.assign(m, MorphismEnds{0, 0});
    g.inverse_.resize(m);
    for (std::uint32_t k = 0; k < m; ++k)
        g.inverse_[k] = (m - k) % m;
    g.index_shape();
    // Morphism k is the residue k; composition is addition mod m.
    for (std::uint32_t j = 0; j < m; ++j)
        for (std::uint32_t k = 0; k < m; ++k)
            g.table_[g.slot(j, k)] = (j + k) % m;
    return g;
}

ExplicitGroupoid ExplicitGroupoid::product(std::span<const ExplicitGroupoid> factors) {
    const std::size_t k = factors.size();
    ExplicitGroupoid g;
    std::uint64_t objects = 1;
    std::uint64_t morphisms = 1;
    for (const ExplicitGroupoid& f : factors) {
        objects *= f.object_count();
        morphisms *= f.morphism_count();
        if (objects >= kNoId || morphisms >= kNoId)
            throw ResourceLimitExceeded("explicit product is too large");
    }

    // Mixed-radix ids with the first factor most significant; lexicographic
    // order on component ids is then increasing id order.
    std::vector<std::uint64_t> object_stride(k, 1), morphism_stride(k, 1);
    for (std::size_t i = k; i-- > 1;) {
        object_stride[i - 1] = object_stride[i] * factors[i].object_count();
        morphism_stride[i - 1] = morphism_stride[i] * factors[i].morphism_count();
    }

    g.labels_.reserve(objects);
    g.identity_.resize(objects);
    std::vector<ObjectLabel> parts(k);
    for (std::uint64_t x = 0; x < objects; ++x) {
        MorphismId id = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const auto xi = static_cast<ObjectId>((x / object_stride[i]) % factors[i].object_count());
            parts[i] = factors[i].labels_[xi];
            const MorphismId fi = factors[i].identity_[xi];
            if (id != kNoId)
                id = fi == kNoId ? kNoId : static_cast<MorphismId>(id + fi * morphism_stride[i]);
        }
        g.labels_.push_back(ObjectLabel::tuple(parts));
        g.identity_[x] = id;
    }

    std::vector<std::uint32_t> components(morphisms * k);
    g.ends_.resize(morphisms);
    g.inverse_.resize(morphisms);
    for (std::uint64_t f = 0; f < morphisms; ++f) {
        std::uint64_t source = 0, target = 0;
        MorphismId inv = 0;
        for (std::size_t i = 0; i < k; ++i) {
            const auto fi = static_cast<MorphismId>((f / morphism_stride[i]) % factors[i].morphism_count());
            components[f * k + i] = fi;
            source += factors[i].ends_[fi].source * object_stride[i];
            target += factors[i].ends_[fi].target * object_stride[i];
            const MorphismId ii = factors[i].inverse_[fi];
            if (inv != kNoId)
                inv = ii == kNoId ? kNoId : static_cast<MorphismId>(inv + ii * morphism_stride[i]);
        }
        g.ends_[f] = {static_cast<ObjectId>(source), static_cast<ObjectId>(target)};
        g.inverse_[f] = inv;
    }

    g.index_shape();
    for (MorphismId f = 0; f < morphisms; ++f) {
        for (MorphismId h : g.outgoing(g.ends_[f].target)) {
            MorphismId result = 0;
            for (std::size_t i = 0; i < k && result != kNoId; ++i) {
                const MorphismId ci = factors[i].compose(components[f * k + i], components[h * k + i]);
                result = ci == kNoId ? kNoId : static_cast<MorphismId>(result + ci * morphism_stride[i]);
            }
            g.table_[g.slot(f, h)] = result;
        }
    }
    return g;
}

ExplicitGroupoid ExplicitGroupoid::disjoint_union(std::span<const ExplicitGroupoid> summands,
                                                  std::span<const std::string> tags) {
    if (!tags.empty() && tags.size() != summands.size())
        throw Error("disjoint union tags must match its summands");
    std::uint64_t objects = 0, morphisms = 0;
    for (const ExplicitGroupoid& s : summands) {
        objects += s.object_count();
        morphisms += s.morphism_count();
    }
    if (objects >= kNoId || morphisms >= kNoId)
        throw ResourceLimitExceeded("explicit disjoint union is too large");

    ExplicitGroupoid g;
    g.labels_.reserve(objects);
    g.identity_.reserve(objects);
    g.ends_.reserve(morphisms);
    g.inverse_.reserve(morphisms);
    std::vector<std::uint32_t> object_base, morphism_base;
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const ExplicitGroupoid& s = summands[i];
        const auto ob = static_cast<std::uint32_t>(g.labels_.size());
        const auto mb = static_cast<std::uint32_t>(g.ends_.size());
        object_base.push_back(ob);
        morphism_base.push_back(mb);
        const std::string tag = tags.empty() ? "in" + std::to_string(i) : tags[i];
        for (ObjectId x = 0; x < s.object_count(); ++x) {
            g.labels_.push_back(ObjectLabel::injection(tag, s.labels_[x]));
            g.identity_.push_back(s.identity_[x] == kNoId ? kNoId : s.identity_[x] + mb);
        }
        for (MorphismId f = 0; f < s.morphism_count(); ++f) {
            g.ends_.push_back({s.ends_[f].source + ob, s.ends_[f].target + ob});
            g.inverse_.push_back(s.inverse_[f] == kNoId ? kNoId : s.inverse_[f] + mb);
        }
    }
    g.index_shape();
    for (std::size_t i = 0; i < summands.size(); ++i) {
        const ExplicitGroupoid& s = summands[i];
        for (MorphismId f = 0; f < s.morphism_count(); ++f)
            for (MorphismId h : s.outgoing(s.ends_[f].target)) {
                const MorphismId c = s.table_[s.slot(f, h)];
                g.table_[g.slot(f + morphism_base[i], h + morphism_base[i])] =
                    c == kNoId ? kNoId : c + morphism_base[i];
            }
    }
    return g;
}

// ---------------------------------------------------------------------------
// Validation and cardinality

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0U); }

    std::uint32_t find(std::uint32_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b)
            parent_[std::max(a, b)] = std::min(a, b);
    }

private:
    std::vector<std::uint32_t> parent_;
};

class ReportSink {
public:
    explicit ReportSink(ValidationReport& report) : report_(report) {}

    void add(ViolationKind kind, std::vector<std::uint32_t> ids, std::string message) {
        auto& n = report_.counts[static_cast<std::size_t>(kind)];
        if (n++ < ValidationReport::kMaxRecordedPerKind)
            report_.violations.push_back({kind, std::move(ids), std::move(message)});
    }

private:
    ValidationReport& report_;
};

std::vector<std::vector<ObjectId>> components_of(const ExplicitGroupoid& g) {
    DisjointSets sets(g.object_count());
    for (MorphismId f = 0; f < g.morphism_count(); ++f)
        sets.unite(g.ends(f).source, g.ends(f).target);
    std::vector<std::vector<ObjectId>> classes;
    std::vector<std::uint32_t> class_of_root(g.object_count(), kNoId);
    for (ObjectId x = 0; x < g.object_count(); ++x) {
        const std::uint32_t root = sets.find(x);
        if (class_of_root[root] == kNoId) {
            class_of_root[root] = static_cast<std::uint32_t>(classes.size());
            classes.emplace_back();
        }
        classes[class_of_root[root]].push_back(x);
    }
    return classes;
}

std::uint64_t hom_key(ObjectId x, ObjectId y) { return (static_cast<std::uint64_t>(x) << 32) | y; }

void require_valid(const ExplicitGroupoid& g) {
    const ValidationReport report = validate(g);
    if (!report.ok())
        throw InvalidGroupoid("groupoid fails validation: " + std::to_string(report.total()) + " violation(s), first: " +
                              report.violations.front().message);
}

// Light's test: if every morphism is a composite of generators A, the
// composition is associative iff (x a) y = x (a y) for all a in A and all
// composable x, y. Generators are chosen greedily in id order, each new one
// extending the right-multiplication closure of those before it.
void check_associativity(const ExplicitGroupoid& g, ReportSink& sink) {
    const std::size_t objects = g.object_count();
    const std::size_t morphisms = g.morphism_count();

    std::vector<std::uint32_t> in_offset(objects + 1, 0);
    for (MorphismId f = 0; f < morphisms; ++f)
        ++in_offset[g.ends(f).target + 1];
    std::partial_sum(in_offset.begin(), in_offset.end(), in_offset.begin());
    std::vector<MorphismId> in_list(morphisms);
    {
        std::vector<std::uint32_t> fill(in_offset.begin(), in_offset.end() - 1);
        for (MorphismId f = 0; f < morphisms; ++f)
            in_list[fill[g.ends(f).target]++] = f;
    }
    auto incoming = [&](ObjectId x) {
        return std::span<const MorphismId>(in_list).subspan(in_offset[x], in_offset[x + 1] - in_offset[x]);
    };

    std::vector<MorphismId> generators;
    std::vector<std::vector<MorphismId>> generators_from(objects);
    std::vector<bool> generated(morphisms, false);
    std::vector<MorphismId> pending;
    auto absorb = [&](MorphismId h) {
        if (h < morphisms && !generated[h]) {
            generated[h] = true;
            pending.push_back(h);
        }
    };
    for (MorphismId a = 0; a < morphisms; ++a) {
        if (generated[a])
            continue;
        generators.push_back(a);
        generators_from[g.ends(a).source].push_back(a);
        for (MorphismId e : incoming(g.ends(a).source))
            if (generated[e])
                absorb(g.compose(e, a));
        absorb(a);
        while (!pending.empty()) {
            const MorphismId h = pending.back();
            pending.pop_back();
            for (MorphismId b : generators_from[g.ends(h).target])
                absorb(g.compose(h, b));
        }
    }

    auto s = [](MorphismId f) { return std::to_string(f); };
    for (MorphismId a : generators) {
        for (MorphismId x : incoming(g.ends(a).source)) {
            const MorphismId xa = g.compose(x, a);
            for (MorphismId y : g.outgoing(g.ends(a).target)) {
                const MorphismId ay = g.compose(a, y);
                const MorphismId left = xa < morphisms ? g.compose(xa, y) : kNoId;
                const MorphismId right = ay < morphisms ? g.compose(x, ay) : kNoId;
                if (left != kNoId && right != kNoId && left != right)
                    sink.add(ViolationKind::Associativity, {x, a, y},
                             "(" + s(x) + "," + s(a) + "," + s(y) + ") composes to " + s(left) + " and " + s(right));
            }
        }
    }
}

}  // namespace

const char* to_string(ViolationKind kind) {
    switch (kind) {
    case ViolationKind::MissingIdentity:
        return "missing-identity";
    case ViolationKind::IdentityLaw:
        return "identity-law";
    case ViolationKind::MissingComposition:
        return "missing-composition";
    case ViolationKind::CompositionEndpoints:
        return "composition-endpoints";
    case ViolationKind::Associativity:
        return "associativity";
    case ViolationKind::MissingInverse:
        return "missing-inverse";
    case ViolationKind::InverseLaw:
        return "inverse-law";
    case ViolationKind::HomSizeCoherence:
        return "hom-size-coherence";
    }
    return "unknown";
}

std::size_t ValidationReport::total() const { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

ValidationReport validate(const ExplicitGroupoid& g) {
    ValidationReport report;
    ReportSink sink(report);
    const std::size_t objects = g.object_count();
    const std::size_t morphisms = g.morphism_count();
    auto s = [&](MorphismId f) { return std::to_string(f); };

    std::vector<bool> has_identity(objects, false);
    for (ObjectId x = 0; x < objects; ++x) {
        const MorphismId id = g.identity(x);
        if (id >= morphisms || g.ends(id).source != x || g.ends(id).target != x)
            sink.add(ViolationKind::MissingIdentity, {x}, "object " + std::to_string(x) + " has no identity");
        else
            has_identity[x] = true;
    }

    for (MorphismId f = 0; f < morphisms; ++f) {
        const auto [x, y] = g.ends(f);
        if (has_identity[x] && g.compose(g.identity(x), f) != f)
            sink.add(ViolationKind::IdentityLaw, {g.identity(x), f}, "id then " + s(f) + " is not " + s(f));
        if (has_identity[y] && g.compose(f, g.identity(y)) != f)
            sink.add(ViolationKind::IdentityLaw, {f, g.identity(y)}, s(f) + " then id is not " + s(f));
    }

    // Closure: every composable pair has an entry with the right endpoints.
    for (MorphismId f = 0; f < morphisms; ++f) {
        for (MorphismId h : g.outgoing(g.ends(f).target)) {
            const MorphismId c = g.compose(f, h);
            if (c == kNoId)
                sink.add(ViolationKind::MissingComposition, {f, h}, "no composite for (" + s(f) + ", " + s(h) + ")");
            else if (c >= morphisms || g.ends(c).source != g.ends(f).source || g.ends(c).target != g.ends(h).target)
                sink.add(ViolationKind::CompositionEndpoints, {f, h, c},
                         "composite of (" + s(f) + ", " + s(h) + ") has wrong endpoints");
        }
    }

    check_associativity(g, sink);

    for (MorphismId f = 0; f < morphisms; ++f) {
        const auto [x, y] = g.ends(f);
        const MorphismId inv = g.inverse(f);
        if (inv >= morphisms) {
            sink.add(ViolationKind::MissingInverse, {f}, "morphism " + s(f) + " has no inverse");
            continue;
        }
        if (g.ends(inv).source != y || g.ends(inv).target != x) {
            sink.add(ViolationKind::InverseLaw, {f, inv}, s(inv) + " is not an inverse of " + s(f));
            continue;
        }
        // One report per offending table entry: when inverse(inv) == f, the
        // entry (inv, f) is checked while visiting inv.
        if (g.compose(f, inv) != g.identity(x))
            sink.add(ViolationKind::InverseLaw, {f, inv}, s(f) + " then " + s(inv) + " is not the identity");
        else if (g.inverse(inv) != f && g.compose(inv, f) != g.identity(y))
            sink.add(ViolationKind::InverseLaw, {inv, f}, s(inv) + " then " + s(f) + " is not the identity");
    }

    std::unordered_map<std::uint64_t, std::uint64_t> hom_size;
    hom_size.reserve(morphisms);
    for (MorphismId f = 0; f < morphisms; ++f)
        ++hom_size[hom_key(g.ends(f).source, g.ends(f).target)];
    auto hom = [&](ObjectId a, ObjectId b) -> std::uint64_t {
        const auto it = hom_size.find(hom_key(a, b));
        return it == hom_size.end() ? 0 : it->second;
    };
    for (const std::vector<ObjectId>& component : components_of(g)) {
        for (ObjectId a : component) {
            const std::uint64_t loops = hom(a, a);
            for (ObjectId b : component)
                if (hom(a, b) != loops)
                    sink.add(ViolationKind::HomSizeCoherence, {a, b},
                             "|hom(" + std::to_string(a) + "," + std::to_string(b) + ")| = " +
                                 std::to_string(hom(a, b)) + " but |hom(" + std::to_string(a) + "," +
                                 std::to_string(a) + ")| = " + std::to_string(loops));
        }
    }
    return report;
}

std::vector<std::vector<ObjectId>> iso_classes(const ExplicitGroupoid& g) {
    require_valid(g);
    return components_of(g);
}

CardinalityReport cardinality_explicit(const ExplicitGroupoid& g) {
    require_valid(g);
    CardinalityReport report;
    for (const std::vector<ObjectId>& component : components_of(g)) {
        const ObjectId rep = component.front();
        std::uint64_t automorphisms = 0;
        for (MorphismId f : g.outgoing(rep))
            automorphisms += g.ends(f).target == rep ? 1 : 0;
        report.classes.push_back({rep, automorphisms});
        report.total += Rational(Integer(1), Integer(static_cast<unsigned long>(automorphisms)));
    }
    report.iso_class_count = report.classes.size();
    return report;
}

}  // namespace gpd
