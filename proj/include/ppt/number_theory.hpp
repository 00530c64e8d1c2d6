#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ppt {

namespace detail {

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

}  // namespace detail

/// Deterministic Miller-Rabin for all 64-bit inputs.
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        std::uint64_t x = detail::pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = detail::mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

inline void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw std::domain_error(std::to_string(p) + " is not prime");
}

/// Sieve of Eratosthenes, odd numbers only.
inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    if (bound < 2) return out;
    out.push_back(2);
    const std::uint64_t half = (bound - 1) / 2;  // index i <-> 2i+1, i >= 1
    std::vector<bool> composite(half + 1, false);
    for (std::uint64_t i = 1; i <= half; ++i) {
        if (composite[i]) continue;
        const std::uint64_t n = 2 * i + 1;
        out.push_back(n);
        for (std::uint64_t m = n * n; m <= bound; m += 2 * n) composite[(m - 1) / 2] = true;
    }
    return out;
}

inline std::uint64_t lcm_u64(std::uint64_t a, std::uint64_t b) { return a / std::gcd(a, b) * b; }

/// Order of p in (Z/n)^x; n = 1 gives 1.
inline std::uint64_t multiplicative_order(std::uint64_t p, std::uint64_t n) {
    if (std::gcd(p, n) != 1) throw std::domain_error("multiplicative_order: p and n not coprime");
    if (n == 1) return 1;
    std::uint64_t x = p % n;
    std::uint64_t k = 1;
    while (x != 1) {
        x = detail::mul_mod(x, p, n);
        ++k;
    }
    return k;
}

/// p^e if it fits in 63 bits.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t p, std::uint64_t e) {
    std::uint64_t q = 1;
    constexpr std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() / 2;
    for (std::uint64_t i = 0; i < e; ++i) {
        if (q > limit / p) return std::nullopt;
        q *= p;
    }
    return q;
}

/// C(r, k) != 0 mod p, by comparing base-p digits (Lucas).
inline bool lucas_nonzero(std::uint64_t r, std::uint64_t k, std::uint64_t p) {
    if (k > r) throw std::domain_error("lucas_nonzero: k > r");
    while (k) {
        if (k % p > r % p) return false;
        k /= p;
        r /= p;
    }
    return true;
}

/// Largest k <= hi whose base-p digits are all <= those of r (so C(r,k) != 0 mod p).
/// k = 0 always qualifies, so the result exists whenever hi >= 0.
inline std::uint64_t lucas_floor(std::uint64_t r, std::uint64_t hi, std::uint64_t p) {
    if (hi >= r) return r;
    std::uint64_t rd[64], hd[64];
    int len = 0;
    for (std::uint64_t x = r, y = hi; x || y; x /= p, y /= p, ++len) {
        rd[len] = x % p;
        hd[len] = y % p;
    }
    std::uint64_t k = 0;
    bool tight = true;
    for (int j = len - 1; j >= 0; --j) {
        std::uint64_t d;
        if (!tight) {
            d = rd[j];
        } else if (rd[j] < hd[j]) {
            d = rd[j];
            tight = false;
        } else {
            d = hd[j];
        }
        k = k * p + d;
    }
    return k;
}

/// Whether some k in [lo, hi] (clamped to [0, r]) has C(r,k) != 0 mod p.
inline bool lucas_hit_in_range(std::uint64_t r, std::int64_t lo, std::int64_t hi, std::uint64_t p) {
    if (lo < 0) lo = 0;
    if (hi < 0 || static_cast<std::uint64_t>(lo) > r) return false;
    const std::uint64_t top = std::min<std::uint64_t>(static_cast<std::uint64_t>(hi), r);
    if (static_cast<std::uint64_t>(lo) > top) return false;
    return lucas_floor(r, top, p) >= static_cast<std::uint64_t>(lo);
}

}  // namespace ppt
