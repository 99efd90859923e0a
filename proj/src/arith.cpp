#include "gpd/arith.hpp"

#include "gpd/error.hpp"

namespace gpd {

Rational pochhammer_step(const Rational& a, std::size_t n, const Rational& k) {
    Rational result(1);
    Rational term = a;
    for (std::size_t i = 0; i < n; ++i) {
        result *= term;
        term += k;
    }
    return result;
}

Integer binomial(std::size_t n, std::size_t r) {
    Integer result;
    if (r > n)
        return result;
    mpz_bin_uiui(result.get_mpz_t(), n, r);
    return result;
}

Integer factorial(std::size_t n) {
    Integer result;
    mpz_fac_ui(result.get_mpz_t(), n);
    return result;
}

Rational hyper_coefficient(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t n) {
    for (const Rational& b : lower)
        if (b.sign() <= 0)
            throw NonPositiveLowerParameter(b.to_string());
    Rational numerator(1);
    for (const Rational& a : upper)
        numerator *= pochhammer(a, n);
    Rational denominator(1);
    for (const Rational& b : lower)
        denominator *= pochhammer(b, n);
    return numerator / denominator;
}

}  // namespace gpd
