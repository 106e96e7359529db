#include "polarspec/constructions.hpp"
#include "polarspec/error.hpp"
#include "polarspec/oracle.hpp"
#include "polarspec/pretransform.hpp"
#include "polarspec/spectrum.hpp"
#include "support/naive.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace polarspec;

namespace {

std::vector<std::uint64_t> hist(std::initializer_list<std::pair<std::size_t, std::uint64_t>> entries, std::size_t n)
{
    std::vector<std::uint64_t> out(n + 1, 0);
    for (auto [d, c] : entries)
        out[d] = c;
    return out;
}

} // namespace

TEST(ExactSpectrum, SmallExamples)
{
    const CodeConfig config(2, {3, 4});
    EXPECT_EQ(exact_spectrum(config, identity_transform(config)).counts, hist({{0, 1}, {2, 2}, {4, 1}}, 4));
    PreTransform t(2, {3, 4});
    t.set_entry(3, 4, true);
    EXPECT_EQ(exact_spectrum(config, t).counts, hist({{0, 1}, {2, 2}, {4, 1}}, 4));
    const CodeConfig full(1, {1, 2});
    EXPECT_EQ(exact_spectrum(full, identity_transform(full)).counts, hist({{0, 1}, {1, 2}, {2, 1}}, 2));
}

TEST(ExactSpectrum, MatchesDenseEnumerationAndKeepsMinimumDistance)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto config = seed % 2 ? construct_pw(32, 11) : construct_rm(32, 9 + seed % 5);
        const auto t = random_transform(config, seed);
        const auto got = exact_spectrum(config, t);
        EXPECT_EQ(got.total(), std::uint64_t{1} << config.k());
        EXPECT_EQ(got.counts[0], 1u);
        for (std::size_t d = 1; d < min_row_weight(config); ++d)
            EXPECT_EQ(got.counts[d], 0u);

        auto dense = naive::identity(config.n());
        for (auto i : config.info_set())
            for (std::size_t j = i + 1; j <= config.n(); ++j)
                dense[i - 1][j - 1] = t.entry(i, j);
        const std::vector<std::size_t> info(config.info_set().begin(), config.info_set().end());
        EXPECT_EQ(got.counts, naive::code_weights(info, dense, config.m()));
    }
}

TEST(ExactSpectrum, ThreadCountDoesNotChangeTheResult)
{
    const auto config = construct_pw(64, 18);
    const auto t = random_transform(config, 5);
    const auto one = exact_spectrum(config, t, 1);
    EXPECT_EQ(exact_spectrum(config, t, 3).counts, one.counts);
    EXPECT_EQ(exact_spectrum(config, t, 8).counts, one.counts);
}

TEST(ExactSpectrum, BudgetExceeded)
{
    const auto config = construct_rm(128, 64);
    EXPECT_THROW(exact_spectrum(config, identity_transform(config)), BudgetError);
}

TEST(EnsembleAverageExact, Examples)
{
    const auto a = ensemble_average_exact(CodeConfig(2, {3, 4}));
    EXPECT_EQ(a.transforms, 2u);
    EXPECT_EQ(a.mean[2], DyadicRational::from_int(2));
    EXPECT_EQ(a.mean[4], DyadicRational::from_int(1));
    EXPECT_TRUE(a.mean[1].is_zero());
    EXPECT_TRUE(a.mean[3].is_zero());

    const auto b = ensemble_average_exact(CodeConfig(1, {2}));
    EXPECT_EQ(b.transforms, 1u);
    EXPECT_EQ(b.mean[2], DyadicRational::from_int(1));
}

TEST(EnsembleAverageExact, EqualsRecursionOnPw8)
{
    const CodeConfig config(3, {4, 6, 7, 8});
    const auto oracle = ensemble_average_exact(config);
    EXPECT_EQ(oracle.transforms, 128u);
    const auto rec = avg_spectrum(config, 8);
    for (std::size_t d = 1; d <= 8; ++d)
        EXPECT_EQ(oracle.mean[d], rec.at(d)) << "d=" << d;
}

TEST(EnsembleAverageExact, BudgetExceeded)
{
    EXPECT_THROW(ensemble_average_exact(construct_pw(16, 8)), BudgetError);
}

TEST(EnsembleAverageMc, BruteAgreesWithExactOracle)
{
    const CodeConfig config(3, {4, 6, 7, 8});
    const auto exact = ensemble_average_exact(config);
    const auto mc = ensemble_average_mc(config, 11, 4000, BruteMethod{});
    EXPECT_EQ(mc.samples, 4000u);
    for (std::size_t d = 1; d <= 8; ++d) {
        const long double target = exact.mean[d].to_long_double();
        const long double se = mc.standard_error(d);
        if (se == 0.0L)
            EXPECT_EQ(mc.mean[d], target) << "d=" << d;
        else
            EXPECT_LE(std::fabs(mc.mean[d] - target), 4 * se) << "d=" << d;
    }
}

TEST(EnsembleAverageMc, IndependentOfThreadCount)
{
    const auto config = construct_pw(32, 8);
    const auto one = ensemble_average_mc(config, 3, 37, BruteMethod{}, 1);
    const auto four = ensemble_average_mc(config, 3, 37, BruteMethod{}, 4);
    EXPECT_EQ(one.mean, four.mean);
    EXPECT_EQ(one.variance, four.variance);
    const auto scl_one = ensemble_average_mc(config, 3, 9, SclMethod{64}, 1);
    const auto scl_three = ensemble_average_mc(config, 3, 9, SclMethod{64}, 3);
    EXPECT_EQ(scl_one.mean, scl_three.mean);
}

TEST(EnsembleAverageMc, MeanIsStableWhenSamplesDouble)
{
    const auto config = construct_pw(32, 10);
    const auto small = ensemble_average_mc(config, 99, 500, BruteMethod{});
    const auto large = ensemble_average_mc(config, 99, 1000, BruteMethod{});
    for (std::size_t d = 1; d <= 32; ++d) {
        const long double se = small.standard_error(d);
        EXPECT_LE(std::fabs(large.mean[d] - small.mean[d]), 6 * se + 1e-12L) << "d=" << d;
    }
}

TEST(EnsembleAverageMc, Errors)
{
    const auto config = construct_pw(32, 10);
    EXPECT_THROW(ensemble_average_mc(config, 1, 0, BruteMethod{}), RangeError);
    EXPECT_THROW(ensemble_average_mc(construct_pw(128, 64), 1, 1, BruteMethod{}), BudgetError);
    EXPECT_THROW(ensemble_average_mc(config, 1, 1, SclMethod{0}), RangeError);
}
