#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gpd/rational.hpp"

namespace gpd {

// Truncated exponential generating function sum_{n <= order} a_n x^n / n!.
// Coefficients are stored in the x^n/n! basis. Binary operations require
// equal orders and never truncate silently.
class EgfSeries {
public:
    // `coefficients` holds a_0..a_order and must be nonempty.
    explicit EgfSeries(std::vector<Rational> coefficients);

    static EgfSeries zero(std::size_t order);
    static EgfSeries one(std::size_t order);
    // e^x: every a_n = 1.
    static EgfSeries exp(std::size_t order);
    // x: a_1 = 1.
    static EgfSeries x(std::size_t order);

    std::size_t order() const { return coefficients_.size() - 1; }
    const std::vector<Rational>& coefficients() const { return coefficients_; }
    const Rational& operator[](std::size_t n) const { return coefficients_.at(n); }

    // a_n / n!, the coefficients of x^n.
    std::vector<Rational> ordinary() const;

    friend bool operator==(const EgfSeries&, const EgfSeries&) = default;

private:
    std::vector<Rational> coefficients_;
};

EgfSeries add(const EgfSeries& f, const EgfSeries& g);
// Coefficientwise product in the x^n/n! basis.
EgfSeries hadamard(const EgfSeries& f, const EgfSeries& g);
// Binomial convolution c_n = sum_k C(n,k) a_k b_{n-k}.
EgfSeries cauchy_product(const EgfSeries& f, const EgfSeries& g);
// f(g(x)) for g with zero constant term (Faa di Bruno).
EgfSeries compose(const EgfSeries& f, const EgfSeries& g);

// a_n = prod_i (upper_i)_n / prod_j (lower_j)_n.
EgfSeries hypergeometric_series(std::span<const Rational> upper, std::span<const Rational> lower, std::size_t order);

}  // namespace gpd
