#include <numeric>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ppt/certify.hpp"

using ppt::Rational;
using ppt::Verdict;

TEST(Criterion, GeneralExamples) {
    EXPECT_TRUE(ppt::criterion_general(5, 2, 3, Rational(4, 5), 1, 2));
    EXPECT_FALSE(ppt::criterion_general(11, 3, 4, Rational(6, 11), 1, 3));
    EXPECT_FALSE(ppt::criterion_general(2, 3, 2, Rational(1, 2), 1, 2));
}

TEST(Criterion, SimpleExamples) {
    EXPECT_TRUE(ppt::criterion_simple(5, 2, 3, Rational(4, 5), 1));
    EXPECT_FALSE(ppt::criterion_simple(11, 3, 4, Rational(6, 11), 1));
    EXPECT_FALSE(ppt::criterion_simple(2, 3, 2, Rational(1, 2), 1));
}

TEST(Criterion, Preconditions) {
    // c below a - floor(a/p)
    EXPECT_THROW(ppt::criterion_general(5, 2, 3, Rational(4, 5), 1, 1), std::domain_error);
    // p^e * fpt not integral
    EXPECT_THROW(ppt::criterion_general(5, 2, 3, Rational(4, 7), 1, 2), std::domain_error);
    EXPECT_THROW(ppt::criterion_simple(5, 2, 3, Rational(4, 25), 1), std::domain_error);
    // fpt = lct
    EXPECT_THROW(ppt::criterion_simple(7, 2, 3, Rational(5, 6), 1), std::domain_error);
}

TEST(Certify, Examples) {
    auto a = ppt::certify_ppt(5, 2, 3);
    EXPECT_EQ(a.verdict, Verdict::CertifiedEqualFpt);
    EXPECT_EQ(a.value, Rational(4, 5));
    EXPECT_EQ(a.witness, (ppt::Witness{1, 2}));

    auto b = ppt::certify_ppt(7, 2, 3);
    EXPECT_EQ(b.verdict, Verdict::CertifiedEqualLct);
    EXPECT_EQ(b.value, Rational(5, 6));

    auto c = ppt::certify_ppt(2, 5, 2);
    EXPECT_EQ(c.verdict, Verdict::CertifiedSporadic);
    EXPECT_EQ(c.value, Rational(1, 2));
    EXPECT_EQ(c.rule_id, std::string("prop-2a-x2"));

    auto d = ppt::certify_ppt(11, 3, 4);
    EXPECT_EQ(d.verdict, Verdict::Undetermined);
    EXPECT_EQ(d.lower, Rational(6, 11));
    EXPECT_EQ(d.upper, Rational(7, 12));
    EXPECT_FALSE(d.value.has_value());
}

TEST(Certify, CriterionBeforeSporadicRule) {
    // y^4 + x^2 at p = 2 is covered by the criterion itself (c = 2).
    auto r = ppt::certify_ppt(2, 4, 2);
    EXPECT_EQ(r.verdict, Verdict::CertifiedEqualFpt);
    EXPECT_EQ(r.witness, (ppt::Witness{1, 2}));
    EXPECT_EQ(ppt::certify_ppt(2, 3, 2).verdict, Verdict::CertifiedSporadic);
}

TEST(Certify, OpenCaseStaysUndetermined) {
    auto r = ppt::certify_ppt(3, 3, 3);
    EXPECT_EQ(r.verdict, Verdict::Undetermined);
    EXPECT_EQ(r.lower, Rational(1, 3));
    EXPECT_EQ(r.upper, Rational(2, 3));
}

TEST(Certify, IncompleteOracleGivesBoundsOnly) {
    auto r = ppt::certify_ppt(2, 3, 8, ppt::CertConfig{3, std::nullopt});
    EXPECT_EQ(r.verdict, Verdict::Undetermined);
    EXPECT_FALSE(r.fpt_exact);
    EXPECT_EQ(r.lower, Rational(1, 4));
    EXPECT_EQ(r.upper, ppt::lct(3, 8));
}

TEST(Certify, COverrideFallsBackToSimpleForm) {
    // an empty c range leaves only the simple criterion, reported with c = a
    auto r = ppt::certify_ppt(5, 2, 3, ppt::CertConfig{14, 1});
    EXPECT_EQ(r.verdict, Verdict::CertifiedEqualFpt);
    EXPECT_EQ(r.witness, (ppt::Witness{1, 2}));
}

TEST(Certify, SimpleImpliesGeneral) {
    for (auto p : ppt::primes_up_to(50)) {
        for (std::uint64_t a = 2; a <= 6; ++a) {
            for (std::uint64_t b = 2; b <= 6; ++b) {
                if (std::gcd(p, a * b) != 1) continue;
                const auto f = ppt::fpt_binomial(p, a, b);
                if (f.kind == ppt::FptKind::LctEqual) continue;
                for (std::uint64_t e = *f.e_min; e <= *f.e_min + 2; ++e) {
                    if (ppt::criterion_simple(p, a, b, f.value, e)) {
                        ASSERT_TRUE(ppt::criterion_general(p, a, b, f.value, e, a)) << p << a << b << e;
                    }
                }
            }
        }
    }
}

TEST(Certify, SearchBoundIsSound) {
    std::mt19937_64 rng(7);
    const auto primes = ppt::primes_up_to(60);
    int checked = 0;
    for (int trial = 0; trial < 3000; ++trial) {
        const std::uint64_t p = primes[rng() % primes.size()];
        const std::uint64_t a = 2 + rng() % 15, b = 2 + rng() % 15;
        const auto f = ppt::fpt_binomial(p, a, b);
        if (f.kind == ppt::FptKind::LctEqual) continue;
        const std::uint64_t e = *f.e_min;
        const std::uint64_t bound = ppt::c_search_bound(p, a, b, f.value, e);
        const std::uint64_t lo = std::max<std::uint64_t>(1, a - a / p);
        for (std::uint64_t c = std::max(bound, lo); c <= std::max(bound, lo) + 3; ++c)
            ASSERT_FALSE(ppt::criterion_general(p, a, b, f.value, e, c)) << p << " " << a << " " << b << " c=" << c;
        ++checked;
    }
    EXPECT_GT(checked, 1000);
}

TEST(Certify, VerdictSoundness) {
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17}) {
        for (std::uint64_t a = 2; a <= 12; ++a) {
            for (std::uint64_t b = 2; b <= 12; ++b) {
                const auto o = ppt::certify_ppt(p, a, b);
                const auto f = ppt::fpt_binomial(p, a, b);
                switch (o.verdict) {
                    case Verdict::CertifiedEqualLct:
                        ASSERT_EQ(f.value, ppt::lct(a, b));
                        ASSERT_EQ(o.value, ppt::lct(a, b));
                        break;
                    case Verdict::CertifiedEqualFpt:
                        ASSERT_EQ(o.value, f.value);
                        ASSERT_TRUE(o.witness.has_value());
                        ASSERT_GE(o.witness->c, a - a / p);
                        ASSERT_TRUE((f.value * Rational(ppt::big_pow(p, o.witness->e))).is_integer());
                        ASSERT_TRUE(ppt::criterion_general(p, a, b, f.value, o.witness->e, o.witness->c));
                        break;
                    case Verdict::CertifiedSporadic:
                        ASSERT_EQ(p, 2u);
                        ASSERT_EQ(b, 2u);
                        ASSERT_EQ(o.value, Rational(1, 2));
                        ASSERT_EQ(f.value, Rational(1, 2));
                        break;
                    case Verdict::Undetermined:
                        ASSERT_LT(*o.lower, *o.upper);
                        ASSERT_EQ(*o.lower, f.value);
                        break;
                }
            }
        }
    }
}

TEST(ThreeLines, ClosedForm) {
    EXPECT_EQ(ppt::three_lines_threshold(3).fpt, Rational(2, 3));
    EXPECT_EQ(ppt::three_lines_threshold(5).fpt, Rational(3, 5));
    EXPECT_EQ(ppt::three_lines_threshold(7).fpt, Rational(2, 3));
    EXPECT_EQ(ppt::three_lines_threshold(2).fpt, Rational(1, 2));
    EXPECT_EQ(ppt::three_lines_threshold(5).ppt, ppt::three_lines_threshold(5).fpt);
    EXPECT_THROW(ppt::three_lines_threshold(9), std::domain_error);
}

TEST(ThreeLines, OracleIdentity) {
    for (auto p : ppt::primes_up_to(13)) {
        const Rational v = ppt::three_lines_threshold(p).fpt;
        for (std::uint64_t e = 1; oracle::ipow(p, e) <= 2500; ++e) {
            const ppt::BigInt q = ppt::big_pow(p, e);
            EXPECT_EQ(ppt::BigInt(ppt::nu_three_lines(p, e) + 1), (v * Rational(q)).ceil()) << p << " " << e;
        }
    }
}

TEST(Certify, DeepDenominatorNeedsHigherCap) {
    // fpt has denominator 3^16
    EXPECT_FALSE(ppt::certify_ppt(3, 24, 55).fpt_exact);
    const auto r = ppt::certify_ppt(3, 24, 55, ppt::CertConfig{18, std::nullopt});
    EXPECT_EQ(r.verdict, Verdict::CertifiedEqualFpt);
    EXPECT_EQ(r.value, Rational(2576281, 43046721));
}
