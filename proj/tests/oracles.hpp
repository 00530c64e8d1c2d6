#pragma once

// Test-only brute-force oracles. These deliberately avoid Lucas' theorem and the digit
// formulas used by the library: binomials mod p come from Pascal's triangle.

#include <cstdint>
#include <vector>

#include "ppt/rational.hpp"

namespace oracle {

/// pascal[r][k] = C(r, k) mod p for r <= rmax.
inline std::vector<std::vector<std::uint32_t>> pascal_mod(std::uint64_t rmax, std::uint64_t p) {
    std::vector<std::vector<std::uint32_t>> t(rmax + 1);
    for (std::uint64_t r = 0; r <= rmax; ++r) {
        t[r].assign(r + 1, 1);
        for (std::uint64_t k = 1; k < r; ++k) t[r][k] = static_cast<std::uint32_t>((t[r - 1][k - 1] + t[r - 1][k]) % p);
    }
    return t;
}

inline std::uint64_t ipow(std::uint64_t p, std::uint64_t e) {
    std::uint64_t q = 1;
    while (e--) q *= p;
    return q;
}

/// Exhaustive nu for y^a + x^b: every r and k up to the degree bound.
inline std::uint64_t nu_binomial(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t e) {
    const std::uint64_t q = ipow(p, e);
    const std::uint64_t rmax = (q - 1) / a + (q - 1) / b;
    const auto t = pascal_mod(rmax, p);
    std::uint64_t best = 0;
    for (std::uint64_t r = 0; r <= rmax; ++r)
        for (std::uint64_t k = 0; k <= r; ++k)
            if (a * k <= q - 1 && b * (r - k) <= q - 1 && t[r][k] != 0) best = r;
    return best;
}

/// Exhaustive nu for t x (t - x).
inline std::uint64_t nu_three_lines(std::uint64_t p, std::uint64_t e) {
    const std::uint64_t q = ipow(p, e);
    const auto t = pascal_mod(q, p);
    std::uint64_t best = 0;
    for (std::uint64_t r = 0; r < q; ++r)
        for (std::uint64_t k = 0; k <= r; ++k)
            if (2 * r - k <= q - 1 && r + k <= q - 1 && t[r][k] != 0) best = r;
    return best;
}

/// Largest k/p^e < lambda by enumeration over k.
inline ppt::Rational rho_by_enumeration(const ppt::Rational& lambda, std::uint64_t e, std::uint64_t p) {
    const std::uint64_t q = ipow(p, e);
    ppt::Rational best(-1);
    for (std::uint64_t k = 0;; ++k) {
        ppt::Rational x(static_cast<std::int64_t>(k), static_cast<std::int64_t>(q));
        if (!(x < lambda)) break;
        best = x;
    }
    return best;
}

}  // namespace oracle
