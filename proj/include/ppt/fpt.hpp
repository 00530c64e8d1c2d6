#pragma once

// F-pure thresholds of diagonal binomials y^a + x^b over F_p.

#include <cstdint>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "digits.hpp"
#include "number_theory.hpp"
#include "rational.hpp"

namespace ppt {

/// Validated (p, a, b): p prime, a, b >= 2.
struct BinomialPair {
    std::uint64_t p;
    std::uint64_t a;
    std::uint64_t b;

    static BinomialPair make(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
        require_prime(p);
        if (a < 2 || b < 2) throw std::domain_error("exponents a, b must be at least 2");
        return {p, a, b};
    }

    bool coprime() const { return std::gcd(p, a * b) == 1; }

    std::string str() const {
        std::ostringstream os;
        os << "(p=" << p << ", a=" << a << ", b=" << b << ")";
        return os.str();
    }
};

/// 1/a + 1/b, the log canonical threshold of y^a + x^b.
inline Rational lct(std::uint64_t a, std::uint64_t b) {
    return Rational(static_cast<std::int64_t>(a + b), static_cast<std::int64_t>(a * b));
}

enum class FptKind { LctEqual, Truncated };
enum class FptMethod { DigitFormula, OracleStabilization };

inline const char* to_string(FptKind k) { return k == FptKind::LctEqual ? "lct" : "truncated"; }
inline const char* to_string(FptMethod m) {
    return m == FptMethod::DigitFormula ? "digit-formula" : "oracle-stabilization";
}

/// First digit position at which 1/a + 1/b carries; nullopt means it never does.
using CarryIndex = std::optional<std::uint64_t>;

struct CarryData {
    std::uint64_t x;  // p^m mod a
    std::uint64_t y;  // p^m mod b
    friend bool operator==(const CarryData&, const CarryData&) = default;
};

struct FptResult {
    Rational value;
    FptKind kind = FptKind::LctEqual;
    std::optional<std::uint64_t> carry_index;
    std::optional<CarryData> carry_data;
    std::optional<std::uint64_t> e_min;
    FptMethod method = FptMethod::DigitFormula;
};

/// The oracle could not pin the threshold down within the level cap; fpt lies in (lower, upper].
class ComputationIncomplete : public std::runtime_error {
public:
    ComputationIncomplete(BinomialPair pair, std::uint64_t level, Rational lower, Rational upper)
        : std::runtime_error("computation incomplete for " + pair.str() + ": fpt in (" + lower.str() + ", " +
                             upper.str() + "] at level e=" + std::to_string(level)),
          pair_(pair), level_(level), lower_(std::move(lower)), upper_(std::move(upper)) {}

    const BinomialPair& pair() const { return pair_; }
    std::uint64_t level() const { return level_; }
    const Rational& lower() const { return lower_; }
    const Rational& upper() const { return upper_; }

private:
    BinomialPair pair_;
    std::uint64_t level_;
    Rational lower_;
    Rational upper_;
};

struct FptOptions {
    std::uint64_t oracle_level_cap = 14;
};

/// r in [1, n-1] with r = p^i mod n, by repeated modular multiplication.
inline std::uint64_t standard_rep(std::uint64_t p, std::uint64_t i, std::uint64_t n) {
    if (n < 2) throw std::domain_error("standard_rep: modulus must be at least 2");
    if (std::gcd(p, n) != 1) throw std::domain_error("standard_rep: p and n are not coprime");
    std::uint64_t r = 1;
    const std::uint64_t step = p % n;
    for (std::uint64_t j = 0; j < i; ++j) r = detail::mul_mod(r, step, n);
    return r;
}

namespace detail {

struct Carry {
    std::uint64_t index;
    CarryData data;
};

// Scans one full period of (u^i mod a, u^i mod b), i >= 1, for the first i with
// x_i/a + y_i/b > 1. The pair sequence is purely periodic of period ord(u mod lcm(a,b)).
inline std::optional<Carry> first_carry(std::uint64_t u, std::uint64_t a, std::uint64_t b) {
    const std::uint64_t period = multiplicative_order(u % lcm_u64(a, b), lcm_u64(a, b));
    std::uint64_t x = 1, y = 1;
    for (std::uint64_t i = 1; i <= period; ++i) {
        x = mul_mod(x, u % a, a);
        y = mul_mod(y, u % b, b);
        if (x * b + y * a > a * b) return Carry{i, {x, y}};
    }
    return std::nullopt;
}

inline void require_coprime(const BinomialPair& pr) {
    if (!pr.coprime()) throw std::domain_error("p must be coprime to ab for " + pr.str());
}

}  // namespace detail

inline CarryIndex carry_index(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    auto pr = BinomialPair::make(p, a, b);
    detail::require_coprime(pr);
    if (auto c = detail::first_carry(p, a, b)) return c->index;
    return std::nullopt;
}

/// Closed form for gcd(p, ab) = 1: 1/a + 1/b - (x_m/a + y_m/b - 1)/p^m, or the lct when no carry occurs.
inline FptResult fpt_coprime(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    auto pr = BinomialPair::make(p, a, b);
    detail::require_coprime(pr);
    FptResult out;
    out.method = FptMethod::DigitFormula;
    auto carry = detail::first_carry(p, a, b);
    if (!carry) {
        out.value = lct(a, b);
        out.kind = FptKind::LctEqual;
        return out;
    }
    const Rational excess = Rational(static_cast<std::int64_t>(carry->data.x), static_cast<std::int64_t>(a)) +
                            Rational(static_cast<std::int64_t>(carry->data.y), static_cast<std::int64_t>(b)) -
                            Rational(1);
    out.value = lct(a, b) - excess * inverse_power(p, carry->index);
    out.kind = FptKind::Truncated;
    out.carry_index = carry->index;
    out.carry_data = carry->data;
    out.e_min = static_cast<std::uint64_t>(p_power_exponent(out.value, p));
    return out;
}

/// Result of truncating 1/a + 1/b at its first base-p carry.
struct CarryFreeTruncation {
    Rational value;
    CarryIndex carry_index;  // m: digits 1..m add without carry, digit m+1 carries
};

/// Supremum of alpha + beta over p-adic fractions alpha < 1/a, beta < 1/b whose base-p digits
/// add without carrying. By Lucas' theorem this is lim nu_e / p^e for every prime p, including
/// p | ab; the expansions used are the non-terminating ones.
inline CarryFreeTruncation carry_free_truncation(std::uint64_t p, std::uint64_t a, std::uint64_t b) {
    auto pr = BinomialPair::make(p, a, b);
    const auto u = lower_base_p_digits(Rational(1, static_cast<std::int64_t>(pr.a)), p);
    const auto v = lower_base_p_digits(Rational(1, static_cast<std::int64_t>(pr.b)), p);
    const std::size_t horizon = std::max(u.preperiod.size(), v.preperiod.size()) +
                                lcm_u64(u.period.size(), v.period.size());
    BigInt prefix = 0;
    for (std::size_t i = 1; i <= horizon; ++i) {
        const std::uint64_t s = u.digit(i) + v.digit(i);
        if (s >= p) {
            // digits 1..i-1 as they are, then (p-1) at i and (p-1) forever on one side: + 1/p^(i-1)
            return {Rational(BigInt(prefix + 1), big_pow(p, i - 1)), i - 1};
        }
        prefix = prefix * p + s;
    }
    return {lct(a, b), std::nullopt};
}

/// max{ r : (y^a + x^b)^r not in (y^q, x^q) }, q = p^e, by descending search from the
/// degree bound floor((q-1)/a) + floor((q-1)/b).
inline std::uint64_t nu_binomial(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t e) {
    auto pr = BinomialPair::make(p, a, b);
    if (e < 1) throw std::domain_error("nu_binomial: e must be at least 1");
    const auto q = checked_pow(p, e);
    if (!q) throw std::overflow_error("nu_binomial: p^e exceeds 63 bits");
    const std::uint64_t A = (*q - 1) / pr.a;
    const std::uint64_t B = (*q - 1) / pr.b;
    for (std::uint64_t r = A + B;; --r) {
        if (lucas_hit_in_range(r, static_cast<std::int64_t>(r) - static_cast<std::int64_t>(B),
                               static_cast<std::int64_t>(A), p))
            return r;
        if (r == 0) break;
    }
    return 0;
}

/// nu_1, ..., nu_levels for y^a + x^b. Uses p*nu_e <= nu_{e+1} <= p*nu_e + p - 1 to search a
/// window of p candidates per level. Stops early (shorter result) once p^e no longer fits in 63 bits.
inline std::vector<std::uint64_t> nu_binomial_levels(std::uint64_t p, std::uint64_t a, std::uint64_t b,
                                                     std::uint64_t levels) {
    auto pr = BinomialPair::make(p, a, b);
    std::vector<std::uint64_t> out;
    std::uint64_t prev = 0;
    for (std::uint64_t e = 1; e <= levels; ++e) {
        const auto q = checked_pow(p, e);
        if (!q) break;
        const std::uint64_t A = (*q - 1) / pr.a;
        const std::uint64_t B = (*q - 1) / pr.b;
        const std::uint64_t floor_r = p * prev;
        const std::uint64_t top = std::min(A + B, floor_r + p - 1);
        bool found = false;
        for (std::uint64_t r = top + 1; r-- > floor_r;) {
            if (lucas_hit_in_range(r, static_cast<std::int64_t>(r) - static_cast<std::int64_t>(B),
                                   static_cast<std::int64_t>(A), p)) {
                prev = r;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("nu window empty for " + pr.str());
        out.push_back(prev);
    }
    return out;
}

/// F-pure threshold of y^a + x^b over F_p.
///
/// Coprime case: the closed digit formula. When p divides ab the candidate comes from
/// carry_free_truncation and must be confirmed by the nu oracle: every level brackets it,
/// nu_e/p^e < fpt <= (nu_e + 1)/p^e, and (nu_e + 1)/p^e equals it at e_min and e_min + 1.
/// Throws ComputationIncomplete when e_min + 1 is past the level cap.
inline FptResult fpt_binomial(std::uint64_t p, std::uint64_t a, std::uint64_t b, const FptOptions& opts = {}) {
    auto pr = BinomialPair::make(p, a, b);
    if (pr.coprime()) return fpt_coprime(p, a, b);
    if (opts.oracle_level_cap < 2) throw std::domain_error("oracle level cap must be at least 2");

    const auto cand = carry_free_truncation(p, a, b);
    const Rational top = lct(a, b);
    const bool is_lct = !cand.carry_index.has_value();
    const std::uint64_t e_min = is_lct ? 0 : static_cast<std::uint64_t>(p_power_exponent(cand.value, p));
    const std::uint64_t wanted = is_lct ? opts.oracle_level_cap : std::min(opts.oracle_level_cap, e_min + 1);

    const auto nus = nu_binomial_levels(p, a, b, wanted);
    if (nus.empty()) throw std::overflow_error("nu oracle cannot run for " + pr.str());
    for (std::size_t i = 0; i < nus.size(); ++i) {
        const BigInt q = big_pow(p, i + 1);
        const Rational lo(BigInt(nus[i]), q);
        const Rational hi(BigInt(nus[i] + 1), q);
        if (!(lo < cand.value && cand.value <= hi))
            throw std::logic_error("nu oracle contradicts digit truncation for " + pr.str());
    }

    FptResult out;
    if (is_lct) {
        out.value = top;
        out.kind = FptKind::LctEqual;
        out.method = FptMethod::DigitFormula;
        return out;
    }
    if (nus.size() < e_min + 1) {
        const std::uint64_t E = nus.size();
        const BigInt q = big_pow(p, E);
        throw ComputationIncomplete(pr, E, Rational(BigInt(nus.back()), q), Rational(BigInt(nus.back() + 1), q));
    }
    // The bracket at e_min and e_min + 1 already forces equality with the candidate.
    out.value = cand.value;
    out.kind = FptKind::Truncated;
    out.carry_index = cand.carry_index;
    out.e_min = e_min;
    out.method = FptMethod::OracleStabilization;
    return out;
}

/// fpt = 1/a + 1/b - C/p^m for every prime p > ab in the class of `rep` mod ab.
struct ResidueClassEntry {
    std::uint64_t class_rep;
    CarryIndex m;  // nullopt = infinity
    Rational C;
};

inline std::vector<ResidueClassEntry> class_constants(std::uint64_t a, std::uint64_t b) {
    if (a < 2 || b < 2) throw std::domain_error("exponents a, b must be at least 2");
    const std::uint64_t n = a * b;
    std::vector<ResidueClassEntry> out;
    for (std::uint64_t i = 1; i < n; ++i) {
        if (std::gcd(i, n) != 1) continue;
        auto carry = detail::first_carry(i, a, b);
        if (!carry) {
            out.push_back({i, std::nullopt, Rational(0)});
            continue;
        }
        Rational C = Rational(static_cast<std::int64_t>(carry->data.x), static_cast<std::int64_t>(a)) +
                     Rational(static_cast<std::int64_t>(carry->data.y), static_cast<std::int64_t>(b)) - Rational(1);
        out.push_back({i, carry->index, std::move(C)});
    }
    return out;
}

/// Whether (u^ell + x^ell)^N has a surviving term outside (u^floor(q/a), x^floor(q/b)), q = p^e.
inline bool freg_level_check(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t ell, std::uint64_t N,
                             std::uint64_t e) {
    auto pr = BinomialPair::make(p, a, b);
    if (e < 1 || ell < 1) throw std::domain_error("freg_level_check: e and ell must be positive");
    const auto q = checked_pow(p, e);
    if (!q) throw std::overflow_error("freg_level_check: p^e exceeds 63 bits");
    const std::uint64_t X = *q / pr.a;
    const std::uint64_t Y = *q / pr.b;
    if (X == 0 || Y == 0) return false;
    const auto hi = static_cast<std::int64_t>((X - 1) / ell);
    const auto lo = static_cast<std::int64_t>(N) - static_cast<std::int64_t>((Y - 1) / ell);
    return lucas_hit_in_range(N, lo, hi, p);
}

/// Largest N accepted by freg_level_check at level e.
inline std::uint64_t freg_max_power(std::uint64_t p, std::uint64_t a, std::uint64_t b, std::uint64_t ell,
                                    std::uint64_t e) {
    const auto q = checked_pow(p, e);
    if (!q) throw std::overflow_error("freg_max_power: p^e exceeds 63 bits");
    const std::uint64_t X = *q / a, Y = *q / b;
    if (X == 0 || Y == 0) throw std::domain_error("freg_max_power: no admissible power at this level");
    for (std::uint64_t N = (X - 1) / ell + (Y - 1) / ell;; --N) {
        if (freg_level_check(p, a, b, ell, N, e)) return N;
        if (N == 0) break;
    }
    return 0;
}

/// max{ r : (t x (t - x))^r not in (t^q, x^q) }, q = p^e; the terms are C(r,k) t^(2r-k) x^(r+k).
inline std::uint64_t nu_three_lines(std::uint64_t p, std::uint64_t e) {
    require_prime(p);
    if (e < 1) throw std::domain_error("nu_three_lines: e must be at least 1");
    const auto q = checked_pow(p, e);
    if (!q) throw std::overflow_error("nu_three_lines: p^e exceeds 63 bits");
    const auto Q = static_cast<std::int64_t>(*q);
    for (std::int64_t r = (2 * Q - 2) / 3; r >= 0; --r) {
        if (lucas_hit_in_range(static_cast<std::uint64_t>(r), 2 * r - (Q - 1), Q - 1 - r, p))
            return static_cast<std::uint64_t>(r);
    }
    return 0;
}

}  // namespace ppt
