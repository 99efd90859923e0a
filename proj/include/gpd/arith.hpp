#pragma once

#include <cstddef>
#include <span>

#include "gpd/rational.hpp"

namespace gpd {

// a (a + k) (a + 2k) ... (a + (n-1)k); k = 1 gives the rising factorial (a)_n.
Rational pochhammer_step(const Rational& a, std::size_t n, const Rational& k);

inline Rational pochhammer(const Rational& a, std::size_t n) { return pochhammer_step(a, n, Rational(1)); }

Integer binomial(std::size_t n, std::size_t r);
Integer factorial(std::size_t n);

// prod_i (upper_i)_n / prod_j (lower_j)_n. Lower entries must be strictly
// positive; NonPositiveLowerParameter otherwise.
Rational hyper_coefficient(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t n);

}  // namespace gpd
