#pragma once

// Reference computations used only by the tests. They avoid the library's
// code paths: binomials come from Pascal's triangle, folds from a cyclic
// Pascal recurrence in Z[x]/(x^N - 1).

#include "lagcut/rational.hpp"

#include <vector>

namespace oracle {

using lagcut::BigInt;

inline std::vector<BigInt> pascal_row(int d)
{
    std::vector<BigInt> row{1};
    for (int i = 0; i < d; ++i) {
        std::vector<BigInt> next(row.size() + 1, 0);
        for (std::size_t k = 0; k < row.size(); ++k) {
            next[k] += row[k];
            next[k + 1] += row[k];
        }
        row = std::move(next);
    }
    return row;
}

/// Coefficients of (1 + x)^d reduced mod x^N - 1, built by multiplying by
/// (1 + x) d times.
inline std::vector<BigInt> cyclic_binomial(int d, int modulus)
{
    std::vector<BigInt> c(static_cast<std::size_t>(modulus), 0);
    c[0] = 1;
    for (int i = 0; i < d; ++i) {
        std::vector<BigInt> next(c.size(), 0);
        for (int j = 0; j < modulus; ++j) {
            next[static_cast<std::size_t>(j)] += c[static_cast<std::size_t>(j)];
            next[static_cast<std::size_t>((j + 1) % modulus)] += c[static_cast<std::size_t>(j)];
        }
        c = std::move(next);
    }
    return c;
}

/// Σ_{k=1}^{N-1} (1 + ζ^k)^d for ζ = exp(2πi/N), exactly: the sum over all
/// N-th roots of unity of a polynomial picks out N times its x^0 coefficient
/// mod x^N - 1, and the k = 0 term is 2^d.
inline BigInt roots_of_unity_sum(int d, int modulus)
{
    return BigInt(modulus) * cyclic_binomial(d, modulus)[0] - (BigInt(1) << d);
}

inline std::vector<BigInt> fold(const std::vector<BigInt>& betti, int modulus)
{
    std::vector<BigInt> out(static_cast<std::size_t>(modulus), 0);
    for (std::size_t k = 0; k < betti.size(); ++k)
        out[k % static_cast<std::size_t>(modulus)] += betti[k];
    return out;
}

inline bool two_periodic(const std::vector<BigInt>& s)
{
    const std::size_t n = s.size();
    for (std::size_t j = 0; j < n; ++j)
        if (s[j] != s[(j + 2) % n])
            return false;
    return true;
}

inline std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    std::vector<BigInt> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    return out;
}

inline std::vector<long> divisors(long n)
{
    std::vector<long> out;
    for (long k = 1; k <= n; ++k)
        if (n % k == 0)
            out.push_back(k);
    return out;
}

inline bool is_prime(long n)
{
    if (n < 2)
        return false;
    for (long k = 2; k * k <= n; ++k)
        if (n % k == 0)
            return false;
    return true;
}

}  // namespace oracle
