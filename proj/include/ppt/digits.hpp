#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "rational.hpp"

namespace ppt {

/// Eventually periodic base-p expansion 0.(preperiod)(period)(period)...
struct DigitExpansion {
    std::uint64_t base = 2;
    std::vector<std::uint64_t> preperiod;
    std::vector<std::uint64_t> period;

    /// Digit at position i >= 1 (weight p^-i).
    std::uint64_t digit(std::size_t i) const {
        if (i == 0) throw std::out_of_range("digit positions start at 1");
        if (i <= preperiod.size()) return preperiod[i - 1];
        return period[(i - 1 - preperiod.size()) % period.size()];
    }

    /// Exact value as a finite geometric sum.
    Rational value() const {
        BigInt head = 0;
        for (auto d : preperiod) head = head * base + d;
        BigInt cycle = 0;
        for (auto d : period) cycle = cycle * base + d;
        BigInt cycle_den = big_pow(base, period.size()) - 1;
        Rational tail(cycle, cycle_den);
        return (Rational(head) + tail) * inverse_power(base, preperiod.size());
    }

    friend bool operator==(const DigitExpansion&, const DigitExpansion&) = default;
};

namespace detail {

// Long division with cycle detection on the remainder. With `lower` set, remainders live in
// (0, den] instead of [0, den), which yields the non-terminating expansion of p-adic fractions.
inline DigitExpansion expand(const Rational& q, std::uint64_t p, bool lower) {
    if (p < 2) throw std::domain_error("base must be at least 2");
    if (q.sign() <= 0 || q > Rational(1))
        throw std::domain_error("digit expansion needs 0 < q <= 1, got " + q.str());

    const BigInt& den = q.denominator();
    BigInt rem = q.numerator();
    // q = 1 has no expansion with digits < p other than 0.(p-1)(p-1)...
    if (!lower && rem == den) lower = true;

    std::map<BigInt, std::size_t> seen;
    std::vector<std::uint64_t> digits;
    while (true) {
        auto [it, fresh] = seen.emplace(rem, digits.size());
        if (!fresh) {
            DigitExpansion out;
            out.base = p;
            out.preperiod.assign(digits.begin(), digits.begin() + static_cast<std::ptrdiff_t>(it->second));
            out.period.assign(digits.begin() + static_cast<std::ptrdiff_t>(it->second), digits.end());
            return out;
        }
        BigInt scaled = rem * p;
        BigInt d = scaled / den;
        BigInt r = scaled - d * den;
        if (lower && r == 0) {
            d -= 1;
            r = den;
        }
        digits.push_back(d.convert_to<std::uint64_t>());
        rem = std::move(r);
    }
}

}  // namespace detail

/// Canonical base-p expansion of q in (0,1]; p-adic fractions terminate (period [0]).
inline DigitExpansion base_p_digits(const Rational& q, std::uint64_t p) { return detail::expand(q, p, false); }

/// Expansion that never terminates: p-adic fractions end in a run of (p-1) digits.
/// This is the expansion whose truncations are exactly the p-adic fractions strictly below q.
inline DigitExpansion lower_base_p_digits(const Rational& q, std::uint64_t p) { return detail::expand(q, p, true); }

}  // namespace ppt
