#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "certify.hpp"
#include "number_theory.hpp"

namespace ppt {

/// Evaluates fn(0..n-1) on `jobs` threads with a static strided partition. Results come back
/// in index order, and the lowest-index exception (if any) is rethrown, so the output does not
/// depend on the thread count.
template <class Fn>
auto parallel_map(std::size_t n, unsigned jobs, Fn fn) -> std::vector<decltype(fn(std::size_t{}))> {
    using T = decltype(fn(std::size_t{}));
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
    auto work = [&](unsigned w) {
        for (std::size_t i = w; i < n; i += jobs) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (jobs == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) pool.emplace_back(work, w);
    }
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

// ---------------------------------------------------------------------------------------------
// Table of primes where ppt(p^a + x^b) = fpt(y^a + x^b) is known, 2 <= a, b <= 5.

/// Congruence description of one cell: all primes except `excluded_primes` and except those
/// congruent to one of `excluded_residues` mod `modulus` (modulus 0 means no congruence clause).
struct Table1Rule {
    std::uint64_t a;
    std::uint64_t b;
    std::vector<std::uint64_t> excluded_primes;
    std::uint64_t modulus;
    std::vector<std::uint64_t> excluded_residues;
    std::string text;

    bool contains(std::uint64_t p) const {
        if (std::find(excluded_primes.begin(), excluded_primes.end(), p) != excluded_primes.end()) return false;
        if (modulus == 0) return true;
        return std::find(excluded_residues.begin(), excluded_residues.end(), p % modulus) == excluded_residues.end();
    }
};

inline const std::vector<Table1Rule>& table1_rules() {
    static const std::vector<Table1Rule> rules = {
        {2, 2, {}, 0, {}, "All p"},
        {2, 3, {}, 0, {}, "All p"},
        {2, 4, {}, 0, {}, "All p"},
        {2, 5, {}, 0, {}, "All p"},
        {3, 2, {2}, 0, {}, "All p ≠ 2"},
        {3, 3, {3}, 0, {}, "All p ≠ 3"},
        {3, 4, {3}, 12, {11}, "All p ≠ 3 with p ≢ 11 mod 12"},
        {3, 5, {3, 5}, 15, {14}, "All p ≠ 3, 5 with p ≢ 14 mod 15"},
        {4, 2, {}, 0, {}, "All p"},
        {4, 3, {3}, 12, {11}, "All p ≠ 3 with p ≢ 11 mod 12"},
        {4, 4, {2}, 4, {3}, "All p ≠ 2 with p ≢ 3 mod 4"},
        {4, 5, {2}, 20, {3, 19}, "All p ≠ 2 with p ≢ 3, 19 mod 20"},
        {5, 2, {2, 5}, 10, {7, 9}, "All p ≠ 2, 5 with p ≢ 7, 9 mod 10"},
        {5, 3, {3, 5}, 15, {8, 14}, "All p ≠ 3, 5 with p ≢ 8, 14 mod 15"},
        {5, 4, {2}, 20, {3, 19}, "All p ≠ 2 with p ≢ 3, 19 mod 20"},
        {5, 5, {5}, 5, {2, 4}, "All p ≠ 5 with p ≢ 2, 4 mod 5"},
    };
    return rules;
}

/// Membership in the table: certified through the squeeze or the criterion. The p = 2, b = 2
/// family is proven separately and does not count.
inline bool counts_for_table1(const CertOutcome& o) {
    return o.verdict == Verdict::CertifiedEqualLct || o.verdict == Verdict::CertifiedEqualFpt;
}

struct Table1Entry {
    std::uint64_t p;
    CertOutcome outcome;
    bool expected;  // per the transcribed congruence description
};

struct Table1Cell {
    Table1Rule rule;
    std::vector<Table1Entry> entries;  // ascending p

    std::vector<std::uint64_t> certified_primes() const {
        std::vector<std::uint64_t> out;
        for (const auto& e : entries)
            if (counts_for_table1(e.outcome)) out.push_back(e.p);
        return out;
    }
    std::vector<std::uint64_t> mismatches() const {
        std::vector<std::uint64_t> out;
        for (const auto& e : entries)
            if (counts_for_table1(e.outcome) != e.expected) out.push_back(e.p);
        return out;
    }
};

inline std::vector<Table1Cell> gen_table1(std::uint64_t prime_bound, const CertConfig& config = {}, unsigned jobs = 1) {
    if (prime_bound < 2) throw std::domain_error("prime bound must be at least 2");
    const auto primes = primes_up_to(prime_bound);
    const auto& rules = table1_rules();
    const std::size_t per_cell = primes.size();
    auto outcomes = parallel_map(rules.size() * per_cell, jobs, [&](std::size_t i) {
        const auto& r = rules[i / per_cell];
        return certify_ppt(primes[i % per_cell], r.a, r.b, config);
    });
    std::vector<Table1Cell> cells;
    for (std::size_t c = 0; c < rules.size(); ++c) {
        Table1Cell cell{rules[c], {}};
        for (std::size_t j = 0; j < per_cell; ++j)
            cell.entries.push_back({primes[j], std::move(outcomes[c * per_cell + j]), rules[c].contains(primes[j])});
        cells.push_back(std::move(cell));
    }
    return cells;
}

// ---------------------------------------------------------------------------------------------
// Scatter of (a, b) for a fixed p.

enum class Category { LCT, CERT, SPORADIC, UNKNOWN };

inline const char* to_string(Category c) {
    switch (c) {
        case Category::LCT: return "LCT";
        case Category::CERT: return "CERT";
        case Category::SPORADIC: return "SPORADIC";
        case Category::UNKNOWN: return "UNKNOWN";
    }
    return "?";
}

inline Category categorize(const CertOutcome& o) {
    switch (o.verdict) {
        case Verdict::CertifiedEqualLct: return Category::LCT;
        case Verdict::CertifiedEqualFpt: return Category::CERT;
        case Verdict::CertifiedSporadic: return Category::SPORADIC;
        case Verdict::Undetermined: return Category::UNKNOWN;
    }
    return Category::UNKNOWN;
}

struct ScatterPoint {
    std::uint64_t a;
    std::uint64_t b;
    Category category;
    CertOutcome outcome;
};

/// Every (a, b) in [2, max_ab]^2, ordered by a then b.
inline std::vector<ScatterPoint> gen_scatter(std::uint64_t p, std::uint64_t max_ab, const CertConfig& config = {},
                                             unsigned jobs = 1) {
    require_prime(p);
    if (max_ab < 2) throw std::domain_error("max_ab must be at least 2");
    const std::uint64_t side = max_ab - 1;
    return parallel_map(side * side, jobs, [&](std::size_t i) {
        const std::uint64_t a = 2 + i / side;
        const std::uint64_t b = 2 + i % side;
        auto o = certify_ppt(p, a, b, config);
        return ScatterPoint{a, b, categorize(o), std::move(o)};
    });
}

}  // namespace ppt
