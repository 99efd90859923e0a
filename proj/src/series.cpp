#include "gpd/series.hpp"

#include "gpd/arith.hpp"
#include "gpd/error.hpp"
#include "gpd/partitions.hpp"

namespace gpd {

namespace {

void require_same_order(const EgfSeries& f, const EgfSeries& g) {
    if (f.order() != g.order())
        throw OrderMismatch(f.order(), g.order());
}

}  // namespace

EgfSeries::EgfSeries(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
    if (coefficients_.empty())
        throw Error("a series needs at least the constant coefficient");
}

EgfSeries EgfSeries::zero(std::size_t order) { return EgfSeries(std::vector<Rational>(order + 1)); }

EgfSeries EgfSeries::one(std::size_t order) {
    std::vector<Rational> c(order + 1);
    c[0] = 1;
    return EgfSeries(std::move(c));
}

EgfSeries EgfSeries::exp(std::size_t order) { return EgfSeries(std::vector<Rational>(order + 1, Rational(1))); }

EgfSeries EgfSeries::x(std::size_t order) {
    std::vector<Rational> c(order + 1);
    if (order >= 1)
        c[1] = 1;
    return EgfSeries(std::move(c));
}

std::vector<Rational> EgfSeries::ordinary() const {
    std::vector<Rational> out;
    out.reserve(coefficients_.size());
    for (std::size_t n = 0; n < coefficients_.size(); ++n)
        out.push_back(coefficients_[n] / Rational(factorial(n)));
    return out;
}

EgfSeries add(const EgfSeries& f, const EgfSeries& g) {
    require_same_order(f, g);
    std::vector<Rational> c(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n)
        c[n] = f[n] + g[n];
    return EgfSeries(std::move(c));
}

EgfSeries hadamard(const EgfSeries& f, const EgfSeries& g) {
    require_same_order(f, g);
    std::vector<Rational> c(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n)
        c[n] = f[n] * g[n];
    return EgfSeries(std::move(c));
}

EgfSeries cauchy_product(const EgfSeries& f, const EgfSeries& g) {
    require_same_order(f, g);
    std::vector<Rational> c(f.order() + 1);
    for (std::size_t n = 0; n <= f.order(); ++n)
        for (std::size_t k = 0; k <= n; ++k)
            c[n] += Rational(binomial(n, k)) * f[k] * g[n - k];
    return EgfSeries(std::move(c));
}

EgfSeries compose(const EgfSeries& f, const EgfSeries& g) {
    require_same_order(f, g);
    if (!g[0].is_zero())
        throw CompositionRequiresZeroConstant();
    const std::size_t order = f.order();
    std::vector<Integer> fact(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        fact[n] = factorial(n);

    std::vector<Rational> c(order + 1);
    c[0] = f[0];
    for (std::size_t n = 1; n <= order; ++n) {
        // Group the set partitions of [n] by block-size type: a type with m_j
        // blocks of size j covers n! / prod_j (j!^m_j m_j!) set partitions.
        for_each_integer_partition(n, [&](const std::vector<std::size_t>& mult) {
            std::size_t blocks = 0;
            Integer denominator = 1;
            Rational weight(1);
            for (std::size_t j = 1; j <= n; ++j) {
                if (mult[j] == 0)
                    continue;
                blocks += mult[j];
                Integer power;
                mpz_pow_ui(power.get_mpz_t(), fact[j].get_mpz_t(), mult[j]);
                denominator *= power * fact[mult[j]];
                weight *= g[j].pow(static_cast<unsigned>(mult[j]));
            }
            if (weight.is_zero() || f[blocks].is_zero())
                return;
            c[n] += Rational(fact[n], denominator) * f[blocks] * weight;
        });
    }
    return EgfSeries(std::move(c));
}

EgfSeries hypergeometric_series(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t order) {
    std::vector<Rational> c;
    c.reserve(order + 1);
    for (std::size_t n = 0; n <= order; ++n)
        c.push_back(hyper_coefficient(upper, lower, n));
    return EgfSeries(std::move(c));
}

}  // namespace gpd
