#include "polarspec/constructions.hpp"
#include "polarspec/error.hpp"
#include "polarspec/polar_core.hpp"
#include "polarspec/spectrum.hpp"
#include "support/naive.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace polarspec;

namespace {

mpz_class pow2z(std::size_t e)
{
    mpz_class v;
    mpz_setbit(v.get_mpz_t(), e);
    return v;
}

// E[N_d] by averaging the exact spectrum over every dense T with free upper entries in the
// information rows. Exact: returns the sum over T and the number of transforms.
std::vector<std::uint64_t> naive_ensemble_sum(const std::vector<std::size_t>& info, int m, std::uint64_t& transforms)
{
    const std::size_t n = std::size_t{1} << m;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (auto i : info)
        for (std::size_t j = i + 1; j <= n; ++j)
            free.emplace_back(i - 1, j - 1);
    transforms = std::uint64_t{1} << free.size();
    std::vector<std::uint64_t> sum(n + 1, 0);
    for (std::uint64_t mask = 0; mask < transforms; ++mask) {
        auto t = naive::identity(n);
        for (std::size_t e = 0; e < free.size(); ++e)
            t[free[e].first][free[e].second] = (mask >> e) & 1u;
        const auto h = naive::code_weights(info, t, m);
        for (std::size_t d = 0; d <= n; ++d)
            sum[d] += h[d];
    }
    return sum;
}

} // namespace

TEST(CosetSpectrum, Examples)
{
    auto a = coset_spectrum(1, 1, 2);
    EXPECT_EQ(a.counts, (std::vector<mpz_class>{0, 2, 0}));
    a = coset_spectrum(2, 1, 4);
    EXPECT_EQ(a.counts, (std::vector<mpz_class>{0, 4, 0, 4, 0}));
    a = coset_spectrum(2, 2, 4);
    EXPECT_EQ(a.counts, (std::vector<mpz_class>{0, 0, 4, 0, 0}));
}

TEST(CosetSpectrum, MatchesBruteForceEnumeration)
{
    for (int m = 1; m <= 5; ++m) {
        const std::size_t n = std::size_t{1} << m;
        for (std::size_t i = 1; i <= n; ++i) {
            if (n - i > 16)
                continue;
            const auto expected = naive::coset_weights(m, i);
            const auto got = coset_spectrum(m, i, n);
            for (std::size_t d = 0; d <= n; ++d) {
                const auto it = expected.find(d);
                const std::uint64_t want = it == expected.end() ? 0 : it->second;
                ASSERT_EQ(got.counts[d], static_cast<unsigned long>(want)) << "m=" << m << " i=" << i << " d=" << d;
            }
        }
    }
}

TEST(CosetSpectrum, TruncationDoesNotChangeLowWeights)
{
    const auto full = coset_spectrum(7, 20, 128);
    for (std::size_t cap : {0u, 5u, 16u, 33u, 64u}) {
        const auto part = coset_spectrum(7, 20, cap);
        ASSERT_EQ(part.counts.size(), cap + 1);
        for (std::size_t d = 0; d <= cap; ++d)
            EXPECT_EQ(part.counts[d], full.counts[d]);
    }
}

TEST(CosetSpectrum, RangeErrors)
{
    EXPECT_THROW(coset_spectrum(2, 0, 4), RangeError);
    EXPECT_THROW(coset_spectrum(2, 5, 4), RangeError);
    EXPECT_THROW(coset_spectrum(2, 1, 5), RangeError);
}

TEST(CosetSpectrum, InvariantsForAllSmallLengths)
{
    for (int m = 1; m <= 7; ++m) {
        const std::size_t n = std::size_t{1} << m;
        std::vector<std::size_t> all(n);
        for (std::size_t i = 0; i < n; ++i)
            all[i] = i + 1;
        const CosetTable table(m, all, n);
        for (std::size_t i = 1; i <= n; ++i) {
            const auto& counts = table.counts(i);
            mpz_class total = 0;
            for (const auto& c : counts)
                total += c;
            ASSERT_EQ(total, pow2z(n - i)) << "normalization m=" << m << " i=" << i;
            const std::size_t w = row_weight(m, i);
            for (std::size_t d = 0; d < w; ++d)
                ASSERT_EQ(counts[d], 0) << "mass below row weight m=" << m << " i=" << i << " d=" << d;
            for (std::size_t d = 0; d <= n; ++d) {
                const bool must_vanish = i == 1 ? d % 2 == 0 : d % 2 == 1;
                if (must_vanish)
                    ASSERT_EQ(counts[d], 0) << "parity m=" << m << " i=" << i << " d=" << d;
            }
        }
    }
}

TEST(PExact, Examples)
{
    EXPECT_EQ(p_exact(1, 1, 1), DyadicRational::from_int(1));
    EXPECT_EQ(p_exact(1, 2, 2), DyadicRational::from_int(1));
    EXPECT_EQ(p_exact(2, 3, 2), DyadicRational::from_int(1));
    for (int m = 1; m <= 6; ++m)
        for (std::size_t d = 0; d <= (std::size_t{1} << m); d += 2)
            EXPECT_TRUE(p_exact(m, 1, d).is_zero());
}

TEST(PMin, Examples)
{
    EXPECT_EQ(p_min(1, 1), DyadicRational::from_int(1));
    EXPECT_EQ(p_min(1, 2), DyadicRational::from_int(1));
    EXPECT_EQ(p_min(2, 4), DyadicRational::from_int(1));
    EXPECT_EQ(p_min(2, 1), DyadicRational::pow2(-1));
    // Cross-check: A_1 of the coset at (2,1) is 4 of 8.
    EXPECT_EQ(coset_spectrum(2, 1, 4).counts[1], 4);
}

TEST(PMin, AgreesWithPExactAtRowWeight)
{
    for (int m = 1; m <= 7; ++m)
        for (std::size_t i = 1; i <= (std::size_t{1} << m); ++i)
            ASSERT_EQ(p_min(m, i), p_exact(m, i, row_weight(m, i))) << "m=" << m << " i=" << i;
}

TEST(AvgSpectrum, SmallHandExample)
{
    const auto s = avg_spectrum(CodeConfig(2, {3, 4}), 4);
    EXPECT_TRUE(s.at(1).is_zero());
    EXPECT_EQ(s.at(2), DyadicRational::from_int(2));
    EXPECT_TRUE(s.at(3).is_zero());
    EXPECT_EQ(s.at(4), DyadicRational::from_int(1));
    EXPECT_THROW(s.at(0), RangeError);
    EXPECT_THROW(s.at(5), RangeError);
    EXPECT_THROW(avg_spectrum(CodeConfig(2, {3, 4}), 5), RangeError);
}

TEST(AvgSpectrum, MatchesNaiveEnsembleEnumeration)
{
    // Every information set on N = 4, and a spread of sets on N = 8.
    std::vector<std::pair<int, std::vector<std::size_t>>> cases;
    for (unsigned mask = 1; mask < 16; ++mask) {
        std::vector<std::size_t> info;
        for (std::size_t b = 0; b < 4; ++b)
            if ((mask >> b) & 1u)
                info.push_back(b + 1);
        cases.emplace_back(2, info);
    }
    cases.push_back({3, {4, 6, 7, 8}});
    cases.push_back({3, {5, 6, 8}});
    cases.push_back({3, {2, 8}});
    cases.push_back({3, {6, 7, 8}});
    cases.push_back({3, {3, 7}});

    for (const auto& [m, info] : cases) {
        std::uint64_t transforms = 0;
        const auto sum = naive_ensemble_sum(info, m, transforms);
        const CodeConfig config(m, info);
        const auto s = avg_spectrum(config, config.n());
        const auto log2t = static_cast<std::uint64_t>(std::countr_zero(transforms));
        for (std::size_t d = 1; d <= config.n(); ++d)
            ASSERT_EQ(s.at(d), DyadicRational(mpz_class(static_cast<unsigned long>(sum[d])), log2t))
                << "m=" << m << " d=" << d;
    }
}

TEST(AvgSpectrum, TotalMassIsAllNonzeroMessages)
{
    for (std::size_t n : {8u, 32u, 128u})
        for (std::size_t k : {1u, 3u, 8u}) {
            for (const auto& config : {construct_rm(n, k), construct_pw(n, k)}) {
                const auto s = avg_spectrum(config, n);
                EXPECT_EQ(s.total(), DyadicRational(pow2z(k) - 1));
                for (std::size_t d = 1; d < min_row_weight(config); ++d)
                    EXPECT_TRUE(s.at(d).is_zero());
            }
        }
}

TEST(AvgSpectrum, ReedMuller128Regression)
{
    const auto s = avg_spectrum(construct_rm(128, 64), 20);
    // Exact values produced by the recursion; their roundings are 2766.9, 393.5 and 80182.
    EXPECT_EQ(s.at(16).to_decimal(), "2766.90625");
    EXPECT_EQ(s.at(18).to_decimal(), "393.5");
    EXPECT_EQ(s.at(20).to_decimal(), "80182.25");
    EXPECT_EQ(s.at(16).to_decimal(1), "2766.9");
    for (std::size_t d = 1; d < 16; ++d)
        EXPECT_TRUE(s.at(d).is_zero());
    EXPECT_TRUE(s.at(17).is_zero());
}

TEST(AvgSpectrum, Pw128Regression)
{
    const auto s = avg_spectrum(construct_pw(128, 64), 16);
    EXPECT_EQ(s.at(8), DyadicRational::from_int(272));
    EXPECT_TRUE(s.at(10).is_zero());
    EXPECT_EQ(s.at(12), DyadicRational::from_int(896));
    EXPECT_TRUE(s.at(14).is_zero());
    EXPECT_EQ(s.at(16).to_decimal(), "77110.5");
}

TEST(AvgNmin, MatchesGeneralSpectrumAtMinimumWeight)
{
    for (const auto& config : {construct_rm(128, 64), construct_pw(128, 64), construct_pw(64, 20),
                               construct_rm(256, 37), CodeConfig(3, {2, 7, 8})}) {
        const auto nm = avg_nmin(config);
        EXPECT_EQ(nm.d_min, min_row_weight(config));
        EXPECT_EQ(nm.value, avg_spectrum(config, nm.d_min).at(nm.d_min));
    }
}

TEST(AvgNmin, ReferenceValues)
{
    const auto rm = avg_nmin(construct_rm(128, 64));
    EXPECT_EQ(rm.d_min, 16u);
    EXPECT_EQ(rm.value.to_decimal(1), "2766.9");
    const auto pw = avg_nmin(construct_pw(128, 64));
    EXPECT_EQ(pw.d_min, 8u);
    EXPECT_EQ(pw.value, DyadicRational::from_int(272));
    const auto rm512 = avg_nmin(construct_rm(512, 256));
    EXPECT_EQ(rm512.d_min, 32u);
    EXPECT_NEAR(rm512.value.to_double(), 1.5936e4, 1.5936e4 * 1e-3);
}
