#include "gpd/hyper.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <mutex>
#include <tuple>

#include "gpd/arith.hpp"
#include "gpd/error.hpp"

namespace gpd {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_mul_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r;
    return __builtin_add_overflow(a, b, &r) ? kSaturated : r;
}

std::uint64_t sat_pow(std::uint64_t base, std::size_t exponent) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < exponent; ++i)
        r = sat_mul(r, base);
    return r;
}

void require_positive(std::uint64_t value, const char* what) {
    if (value == 0)
        throw Error(std::string(what) + " must be a positive integer");
}

// Factor species are interned so that every H built from the same parameter
// shares factor values, and with them any cached realizations.
class SpeciesTable {
public:
    template <typename Make>
    Species get(char family, std::uint64_t p, std::uint64_t q, Make make) {
        std::lock_guard lock(mutex_);
        const auto key = std::make_tuple(family, p, q);
        auto it = table_.find(key);
        if (it == table_.end())
            it = table_.emplace(key, make()).first;
        return it->second;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<char, std::uint64_t, std::uint64_t>, Species> table_;
};

SpeciesTable& species_table() {
    static SpeciesTable table;
    return table;
}

GroupoidExpr power_of(const GroupoidExpr& g, std::size_t n) {
    return GroupoidExpr::product(std::vector<GroupoidExpr>(n, g));
}

std::string params_text(const HyperParams& params) {
    std::string out;
    for (std::size_t i = 0; i < params.upper.size(); ++i)
        out += (i > 0 ? "," : "") + params.upper[i].to_string();
    out += ';';
    for (std::size_t j = 0; j < params.lower.size(); ++j)
        out += (j > 0 ? "," : "") + params.lower[j].to_string();
    return out;
}

// Admissible (I, f) for one upper index, in order of I's bitmask and then
// lexicographically in f.
using UpperComponent = std::pair<std::vector<std::size_t>, std::vector<PochhammerValue>>;

std::vector<UpperComponent> upper_components(std::uint64_t a, std::uint64_t b, std::size_t n) {
    std::vector<UpperComponent> out;
    const std::uint64_t masks = n == 0 ? 1 : std::uint64_t{1} << (n - 1);
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
        // Bit p-1 set means p is in I; position 0 is never in I.
        std::vector<std::size_t> subset;
        std::vector<std::uint64_t> choices(n);
        for (std::size_t p = 0; p < n; ++p) {
            const bool in_subset = p >= 1 && (mask >> (p - 1) & 1U);
            if (in_subset)
                subset.push_back(p);
            choices[p] = in_subset ? b * p : a;
        }
        std::vector<std::uint64_t> digit(n, 0);
        while (true) {
            std::vector<PochhammerValue> f;
            f.reserve(n);
            for (std::size_t p = 0; p < n; ++p) {
                const bool in_subset = p >= 1 && (mask >> (p - 1) & 1U);
                if (in_subset)
                    f.emplace_back(FromStep{digit[p] / p + 1, digit[p] % p + 1});
                else
                    f.emplace_back(FromUpper{digit[p] + 1});
            }
            out.emplace_back(subset, std::move(f));
            std::size_t p = n;
            while (p > 0 && ++digit[p - 1] == choices[p - 1])
                digit[--p] = 0;
            if (p == 0)
                break;
        }
    }
    return out;
}

std::vector<std::vector<std::uint64_t>> lower_components(std::uint64_t d, std::size_t n) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> g(n, 1);
    while (true) {
        out.push_back(g);
        std::size_t p = n;
        while (p > 0 && ++g[p - 1] > d)
            g[--p] = 1;
        if (p == 0)
            break;
    }
    return out;
}

class ComponentCounts {
public:
    std::uint64_t upper(std::uint64_t a, std::uint64_t b, std::size_t n) {
        return lookup('u', a, b, n, [&] { return upper_components(a, b, n).size(); });
    }
    std::uint64_t lower(std::uint64_t d, std::size_t n) {
        return lookup('l', d, 0, n, [&] { return lower_components(d, n).size(); });
    }

private:
    template <typename Count>
    std::uint64_t lookup(char family, std::uint64_t p, std::uint64_t q, std::size_t n, Count count) {
        const auto key = std::make_tuple(family, p, q, n);
        {
            std::lock_guard lock(mutex_);
            const auto it = counts_.find(key);
            if (it != counts_.end())
                return it->second;
        }
        const std::uint64_t value = count();
        std::lock_guard lock(mutex_);
        return counts_.try_emplace(key, value).first->second;
    }

    std::mutex mutex_;
    std::map<std::tuple<char, std::uint64_t, std::uint64_t, std::size_t>, std::uint64_t> counts_;
};

ComponentCounts& component_counts() {
    static ComponentCounts counts;
    return counts;
}

}  // namespace

Rational PositiveFraction::value() const {
    return Rational(Integer(static_cast<unsigned long>(numerator)), Integer(static_cast<unsigned long>(denominator)));
}

std::string PositiveFraction::to_string() const {
    return std::to_string(numerator) + "/" + std::to_string(denominator);
}

std::vector<Rational> HyperParams::upper_values() const {
    std::vector<Rational> out;
    for (const PositiveFraction& p : upper)
        out.push_back(p.value());
    return out;
}

std::vector<Rational> HyperParams::lower_values() const {
    std::vector<Rational> out;
    for (const PositiveFraction& p : lower)
        out.push_back(p.value());
    return out;
}

GroupoidExpr functorial_pochhammer(const GroupoidExpr& g, const GroupoidExpr& k, std::size_t n) {
    std::vector<GroupoidExpr> factors;
    factors.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        factors.push_back(
            GroupoidExpr::disjoint_union({g, GroupoidExpr::product({k, GroupoidExpr::discrete(i)})}, {"G", "K"}));
    return GroupoidExpr::product(std::move(factors));
}

GroupoidExpr zbar_chain(std::uint64_t c, std::size_t n, std::uint64_t d) {
    std::vector<GroupoidExpr> factors;
    factors.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        factors.push_back(GroupoidExpr::cyclic(c + i * d));
    return GroupoidExpr::product(std::move(factors));
}

Species species_H_upper(std::uint64_t a, std::uint64_t b) {
    require_positive(a, "upper numerator");
    require_positive(b, "upper denominator");
    return species_table().get('u', a, b, [&] {
        const GroupoidExpr labels = GroupoidExpr::discrete(a, "a");
        const GroupoidExpr steps = GroupoidExpr::discrete(b, "b");
        const GroupoidExpr rotations = GroupoidExpr::cyclic(b);
        return Species::custom("Hu(" + std::to_string(a) + "/" + std::to_string(b) + ")", [=](std::size_t n) {
            return GroupoidExpr::product({functorial_pochhammer(labels, steps, n), power_of(rotations, n)});
        });
    });
}

Species species_H_lower(std::uint64_t c, std::uint64_t d) {
    require_positive(c, "lower numerator");
    require_positive(d, "lower denominator");
    return species_table().get('l', c, d, [&] {
        const GroupoidExpr colours = GroupoidExpr::discrete(d, "d");
        return Species::custom("Hl(" + std::to_string(c) + "/" + std::to_string(d) + ")", [=](std::size_t n) {
            return GroupoidExpr::product({power_of(colours, n), zbar_chain(c, n, d)});
        });
    });
}

Species species_H_upper_alt(std::uint64_t a, std::uint64_t b) {
    require_positive(a, "upper numerator");
    require_positive(b, "upper denominator");
    return species_table().get('a', a, b, [&] {
        const GroupoidExpr copies =
            GroupoidExpr::disjoint_union(std::vector<GroupoidExpr>(a, GroupoidExpr::cyclic(b)));
        return Species::custom("Ha(" + std::to_string(a) + "/" + std::to_string(b) + ")", [=](std::size_t n) {
            return functorial_pochhammer(copies, GroupoidExpr::unit(), n);
        });
    });
}

Species species_H(const HyperParams& params, Interpretation interpretation) {
    std::vector<Species> factors;
    for (const PositiveFraction& p : params.upper)
        factors.push_back(interpretation == Interpretation::Product
                              ? species_H_upper(p.numerator, p.denominator)
                              : species_H_upper_alt(p.numerator, p.denominator));
    for (const PositiveFraction& p : params.lower)
        factors.push_back(species_H_lower(p.numerator, p.denominator));
    const std::string name =
        std::string(interpretation == Interpretation::Product ? "H(" : "Halt(") + params_text(params) + ")";
    return Species::custom(name, [factors = std::move(factors)](std::size_t n) {
        std::vector<GroupoidExpr> values;
        values.reserve(factors.size());
        for (const Species& f : factors)
            values.push_back(f.value(n));
        return GroupoidExpr::product(std::move(values));
    });
}

ExplicitGroupoid alt_pochhammer_groupoid(std::uint64_t a, std::uint64_t b, std::size_t n, const ResourceCaps& caps) {
    require_positive(a, "upper numerator");
    require_positive(b, "upper denominator");
    // Coordinate i (0-based) offers a + i values, a of which carry a Z_b.
    ExplicitSize size{1, 1, 1};
    const std::uint64_t b2 = sat_mul(b, b);
    for (std::size_t i = 0; i < n; ++i) {
        size.objects = sat_mul(size.objects, sat_add(a, i));
        size.morphisms = sat_mul(size.morphisms, sat_add(sat_mul(a, b), i));
        size.compositions = sat_mul(size.compositions, sat_add(sat_mul(a, b2), i));
    }
    check_caps(size, caps);

    // Z_b^c as base-b digit vectors, one composition table per exponent c.
    std::map<std::size_t, std::vector<std::uint32_t>> sum_tables;
    auto sum_table = [&](std::size_t c) -> const std::vector<std::uint32_t>& {
        auto it = sum_tables.find(c);
        if (it != sum_tables.end())
            return it->second;
        const std::uint64_t m = sat_pow(b, c);
        std::vector<std::uint32_t> table(m * m);
        for (std::uint64_t x = 0; x < m; ++x)
            for (std::uint64_t y = 0; y < m; ++y) {
                std::uint64_t sum = 0, place = 1, u = x, v = y;
                for (std::size_t digit = 0; digit < c; ++digit) {
                    sum += ((u % b + v % b) % b) * place;
                    u /= b;
                    v /= b;
                    place *= b;
                }
                table[x * m + y] = static_cast<std::uint32_t>(sum);
            }
        return sum_tables.emplace(c, std::move(table)).first->second;
    };

    ExplicitGroupoid::Builder builder;
    std::vector<std::uint64_t> tuple(n, 1);
    while (true) {
        std::size_t rotating = 0;
        std::vector<ObjectLabel> parts;
        parts.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
            rotating += tuple[i] <= a ? 1 : 0;
            parts.push_back(ObjectLabel::atom(std::to_string(tuple[i])));
        }
        const ObjectId x = builder.add_object(ObjectLabel::tuple(std::move(parts)));
        const std::vector<std::uint32_t>& table = sum_table(rotating);
        const std::uint64_t m = sat_pow(b, rotating);
        MorphismId base = 0;
        for (std::uint64_t e = 0; e < m; ++e) {
            const MorphismId f = builder.add_morphism(x, x);
            if (e == 0)
                base = f;
        }
        builder.set_identity(x, base);
        for (std::uint64_t e = 0; e < m; ++e)
            for (std::uint64_t h = 0; h < m; ++h) {
                const std::uint32_t s = table[e * m + h];
                builder.set_compose(base + e, base + h, base + s);
                if (s == 0)
                    builder.set_inverse(base + e, base + h);
            }
        std::size_t i = n;
        while (i > 0 && ++tuple[i - 1] > a + (i - 1))
            tuple[--i] = 1;
        if (i == 0)
            break;
    }
    return std::move(builder).build();
}

ExplicitGroupoid alt_pochhammer_coordinate(std::uint64_t a, std::uint64_t b, std::size_t i) {
    require_positive(a, "upper numerator");
    require_positive(b, "upper denominator");
    check_caps({sat_add(a, i), sat_add(sat_mul(a, b), i), sat_add(sat_mul(a, sat_mul(b, b)), i)}, ResourceCaps{});
    ExplicitGroupoid::Builder builder;
    for (std::uint64_t value = 1; value <= a + i; ++value) {
        const ObjectId x = builder.add_object(ObjectLabel::atom(std::to_string(value)));
        const std::uint64_t m = value <= a ? b : 1;
        const MorphismId base = builder.add_morphism(x, x);
        for (std::uint64_t e = 1; e < m; ++e)
            builder.add_morphism(x, x);
        builder.set_identity(x, base);
        for (std::uint64_t e = 0; e < m; ++e) {
            builder.set_inverse(base + e, base + (m - e) % m);
            for (std::uint64_t h = 0; h < m; ++h)
                builder.set_compose(base + e, base + h, base + (e + h) % m);
        }
    }
    return std::move(builder).build();
}

bool satisfies_triple_invariants(const TripleObject& t, const HyperParams& params, std::size_t n) {
    const std::size_t k = params.upper.size();
    if (t.subsets.size() != k || t.upper_maps.size() != k || t.lower_maps.size() != params.lower.size())
        return false;
    for (std::size_t i = 0; i < k; ++i) {
        const auto [a, b] = params.upper[i];
        const std::vector<std::size_t>& subset = t.subsets[i];
        for (std::size_t s = 0; s < subset.size(); ++s)
            if (subset[s] < 1 || subset[s] > n - 1 || (s > 0 && subset[s - 1] >= subset[s]))
                return false;
        if (t.upper_maps[i].size() != n)
            return false;
        for (std::size_t p = 0; p < n; ++p) {
            const bool in_subset = std::binary_search(subset.begin(), subset.end(), p);
            const PochhammerValue& v = t.upper_maps[i][p];
            if (in_subset) {
                const auto* step = std::get_if<FromStep>(&v);
                if (!step || step->element < 1 || step->element > b || step->step < 1 || step->step > p)
                    return false;
            } else {
                const auto* plain = std::get_if<FromUpper>(&v);
                if (!plain || plain->element < 1 || plain->element > a)
                    return false;
            }
        }
    }
    for (std::size_t j = 0; j < params.lower.size(); ++j) {
        if (t.lower_maps[j].size() != n)
            return false;
        for (std::uint64_t value : t.lower_maps[j])
            if (value < 1 || value > params.lower[j].denominator)
                return false;
    }
    return true;
}

Integer count_H_objects(const HyperParams& params, std::size_t n) {
    Integer count = 1;
    for (const PositiveFraction& p : params.upper)
        count *= Integer(static_cast<unsigned long>(component_counts().upper(p.numerator, p.denominator, n)));
    for (const PositiveFraction& p : params.lower)
        count *= Integer(static_cast<unsigned long>(component_counts().lower(p.denominator, n)));
    return count;
}

std::vector<TripleObject> explicit_H_objects(const HyperParams& params, std::size_t n, const ResourceCaps& caps) {
    const Integer count = count_H_objects(params, n);
    if (count > Integer(static_cast<unsigned long>(caps.max_objects)))
        throw ResourceLimitExceeded("triple count " + count.get_str() + " exceeds cap " +
                                    std::to_string(caps.max_objects));

    std::vector<std::vector<UpperComponent>> uppers;
    for (const PositiveFraction& p : params.upper)
        uppers.push_back(upper_components(p.numerator, p.denominator, n));
    std::vector<std::vector<std::vector<std::uint64_t>>> lowers;
    for (const PositiveFraction& p : params.lower)
        lowers.push_back(lower_components(p.denominator, n));

    const std::size_t k = uppers.size();
    const std::size_t slots = k + lowers.size();
    auto radix = [&](std::size_t s) { return s < k ? uppers[s].size() : lowers[s - k].size(); };

    std::vector<TripleObject> out;
    out.reserve(count.get_ui());
    std::vector<std::size_t> index(slots, 0);
    while (true) {
        TripleObject t;
        t.subsets.reserve(k);
        t.upper_maps.reserve(k);
        t.lower_maps.reserve(lowers.size());
        for (std::size_t i = 0; i < k; ++i) {
            t.subsets.push_back(uppers[i][index[i]].first);
            t.upper_maps.push_back(uppers[i][index[i]].second);
        }
        for (std::size_t j = 0; j < lowers.size(); ++j)
            t.lower_maps.push_back(lowers[j][index[k + j]]);
        out.push_back(std::move(t));
        std::size_t s = slots;
        while (s > 0 && ++index[s - 1] == radix(s - 1))
            index[--s] = 0;
        if (s == 0)
            break;
    }
    return out;
}

bool VerificationReport::passed() const {
    if (overflow)
        return false;
    for (const VerificationRow& row : rows)
        if (!row.pass)
            return false;
    return true;
}

const VerificationRow* VerificationReport::first_failure() const {
    for (const VerificationRow& row : rows)
        if (!row.pass)
            return &row;
    return nullptr;
}

namespace {

// The factor values of H(params)[n], upper then lower, as species_H builds them.
std::vector<GroupoidExpr> factor_values(const HyperParams& params, std::size_t n, Interpretation interpretation) {
    std::vector<GroupoidExpr> values;
    for (const PositiveFraction& p : params.upper)
        values.push_back(interpretation == Interpretation::Product
                             ? species_H_upper(p.numerator, p.denominator).value(n)
                             : species_H_upper_alt(p.numerator, p.denominator).value(n));
    for (const PositiveFraction& p : params.lower)
        values.push_back(species_H_lower(p.numerator, p.denominator).value(n));
    return values;
}

ExplicitGroupoid realize_alternative(const HyperParams& params, std::size_t n, const std::vector<GroupoidExpr>& factors,
                                     const ResourceCaps& caps) {
    std::vector<ExplicitGroupoid> parts;
    for (const PositiveFraction& p : params.upper)
        parts.push_back(alt_pochhammer_groupoid(p.numerator, p.denominator, n, caps));
    for (std::size_t j = params.upper.size(); j < factors.size(); ++j)
        parts.push_back(realize(factors[j], caps));
    return ExplicitGroupoid::product(parts);
}

Rational alternative_upper_cardinality(const PositiveFraction& p, std::size_t n, const GroupoidExpr& factor,
                                       const VerifyOptions& options) {
    ExplicitCardinalityCache* cache = options.cache ? &options.cache->alternative : nullptr;
    if (const Rational* hit = cache ? cache->find(factor) : nullptr)
        return *hit;
    Rational total(1);
    if (options.strategy == VerifyStrategy::Factored && !options.caps.admits(factor.size())) {
        for (std::size_t i = 0; i < n; ++i)
            total *= cardinality_explicit(alt_pochhammer_coordinate(p.numerator, p.denominator, i)).total;
    } else {
        total = cardinality_explicit(alt_pochhammer_groupoid(p.numerator, p.denominator, n, options.caps)).total;
    }
    if (cache)
        cache->insert(factor, total);
    return total;
}

ExplicitEvaluation explicit_side(const HyperParams& params, std::size_t n, Interpretation interpretation,
                                 const GroupoidExpr& value, const VerifyOptions& options) {
    const std::vector<GroupoidExpr> factors = factor_values(params, n, interpretation);
    const ResourceCaps& caps = options.caps;
    const ResourceCaps& whole_caps = options.whole_value_caps ? *options.whole_value_caps : caps;
    if (options.strategy == VerifyStrategy::Whole || (whole_caps.admits(value.size()) && caps.admits(value.size()))) {
        check_caps(value.size(), caps);
        const ExplicitGroupoid whole = interpretation == Interpretation::Product
                                           ? realize(value, caps)
                                           : realize_alternative(params, n, factors, caps);
        return {cardinality_explicit(whole).total, false};
    }

    // Factor by factor. Factor species are interned, so their values are the
    // shared nodes worth caching.
    const ExplicitStrategy within =
        options.strategy == VerifyStrategy::Factored ? ExplicitStrategy::Factored : ExplicitStrategy::Whole;
    ExplicitEvaluation result{Rational(1), true};
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (interpretation == Interpretation::Alternative && i < params.upper.size())
            result.total *= alternative_upper_cardinality(params.upper[i], n, factors[i], options);
        else
            result.total *= explicit_cardinality(factors[i], caps, within,
                                                 options.cache ? &options.cache->realized : nullptr)
                                .total;
    }
    return result;
}

}  // namespace

VerificationReport verify_theorem(const HyperParams& params, std::size_t order, Interpretation interpretation,
                                  const VerifyOptions& options) {
    const Species species = species_H(params, interpretation);
    const std::vector<Rational> upper = params.upper_values();
    const std::vector<Rational> lower = params.lower_values();

    VerificationReport report;
    for (std::size_t n = 0; n <= order; ++n) {
        VerificationRow row;
        row.n = n;
        try {
            const GroupoidExpr value = species.value(n);
            row.symbolic = cardinality_expr(value);
            row.analytic = hyper_coefficient(upper, lower, n);
            const ExplicitEvaluation evaluation = explicit_side(params, n, interpretation, value, options);
            row.explicit_value = evaluation.total;
            row.factored = evaluation.factored;
        } catch (const ResourceLimitExceeded& e) {
            report.overflow = ResourceOverflow{n, e.what()};
            break;
        }
        row.pass = row.explicit_value == row.symbolic && row.symbolic == row.analytic;
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace gpd
