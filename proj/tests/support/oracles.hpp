#pragma once

// Reference computations that share no code with the library beyond Rational.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "gpd/rational.hpp"

namespace oracle {

using gpd::Integer;
using gpd::Rational;

// (p/q)(p/q + 1)...(p/q + n - 1) as prod (p + i q) / q^n, in integers.
inline Rational rising(std::int64_t p, std::int64_t q, std::size_t n) {
    Integer num = 1, den = 1;
    for (std::size_t i = 0; i < n; ++i) {
        num *= Integer(p) + Integer(q) * Integer(static_cast<unsigned long>(i));
        den *= q;
    }
    return Rational(num, den);
}

inline Integer factorial(std::size_t n) {
    Integer r = 1;
    for (std::size_t i = 2; i <= n; ++i)
        r *= static_cast<unsigned long>(i);
    return r;
}

// Rows 0..n of Pascal's triangle.
inline std::vector<std::vector<Integer>> pascal(std::size_t n) {
    std::vector<std::vector<Integer>> rows;
    for (std::size_t i = 0; i <= n; ++i) {
        std::vector<Integer> row(i + 1, 1);
        for (std::size_t j = 1; j < i; ++j)
            row[j] = rows[i - 1][j - 1] + rows[i - 1][j];
        rows.push_back(row);
    }
    return rows;
}

using Block = std::vector<int>;
using SetPartition = std::vector<Block>;

// All set partitions of {1..n}, built by placing element m into each block of
// every partition of {1..m-1} or into a new block of its own.
inline std::vector<SetPartition> set_partitions(int n) {
    std::vector<SetPartition> current{SetPartition{}};
    for (int m = 1; m <= n; ++m) {
        std::vector<SetPartition> next;
        for (const SetPartition& p : current) {
            for (std::size_t b = 0; b < p.size(); ++b) {
                SetPartition q = p;
                q[b].push_back(m);
                next.push_back(q);
            }
            SetPartition q = p;
            q.push_back({m});
            next.push_back(q);
        }
        current = std::move(next);
    }
    return current;
}

// n! [x^n] (1 - x)^(-a/b) = n! C(a/b + n - 1, n), the binomial coefficient
// taken as a falling factorial over n!.
inline Rational generalized_binomial_egf(std::int64_t a, std::int64_t b, std::size_t n) {
    const Rational top = Rational(a, b) + Rational(static_cast<std::int64_t>(n)) - Rational(1);
    Rational falling(1);
    for (std::size_t i = 0; i < n; ++i)
        falling *= top - Rational(static_cast<std::int64_t>(i));
    const Rational choose = falling / Rational(factorial(n));
    return choose * Rational(factorial(n));
}

// Truncated ordinary power series helpers.
using Poly = std::vector<Rational>;

inline Poly poly_mul(const Poly& f, const Poly& g) {
    Poly out(f.size(), Rational(0));
    for (std::size_t i = 0; i < f.size(); ++i)
        for (std::size_t j = 0; i + j < out.size() && j < g.size(); ++j)
            out[i + j] += f[i] * g[j];
    return out;
}

// f(g(x)) by expanding sum_k f_k g^k; g must have g_0 = 0.
inline Poly poly_compose(const Poly& f, const Poly& g) {
    Poly out(f.size(), Rational(0));
    Poly power(f.size(), Rational(0));
    power[0] = Rational(1);
    for (std::size_t k = 0; k < f.size(); ++k) {
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] += f[k] * power[i];
        power = poly_mul(power, g);
    }
    return out;
}

inline Poly to_ordinary(const std::vector<Rational>& egf) {
    Poly out;
    for (std::size_t n = 0; n < egf.size(); ++n)
        out.push_back(egf[n] / Rational(factorial(n)));
    return out;
}

inline std::vector<Rational> to_egf(const Poly& ordinary) {
    std::vector<Rational> out;
    for (std::size_t n = 0; n < ordinary.size(); ++n)
        out.push_back(ordinary[n] * Rational(factorial(n)));
    return out;
}

}  // namespace oracle
