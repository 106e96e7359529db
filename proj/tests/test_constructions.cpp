#include "polarspec/constructions.hpp"
#include "polarspec/error.hpp"
#include "polarspec/polar_core.hpp"

#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include <unistd.h>

using namespace polarspec;

namespace {

std::vector<std::size_t> as_vector(const CodeConfig& c)
{
    return {c.info_set().begin(), c.info_set().end()};
}

class TempFile {
public:
    explicit TempFile(const std::string& content)
    {
        path_ = std::filesystem::temp_directory_path() /
                ("polarspec_info_" + std::to_string(counter_++) + "_" + std::to_string(::getpid()) + ".txt");
        std::ofstream(path_, std::ios::binary) << content;
    }
    ~TempFile() { std::filesystem::remove(path_); }
    const std::filesystem::path& path() const { return path_; }

private:
    static inline int counter_ = 0;
    std::filesystem::path path_;
};

} // namespace

TEST(CodeConfig, ValidatesInformationSet)
{
    EXPECT_NO_THROW(CodeConfig(2, {3, 4}));
    EXPECT_THROW(CodeConfig(2, {4, 3}), RangeError);
    EXPECT_THROW(CodeConfig(2, {3, 3}), RangeError);
    EXPECT_THROW(CodeConfig(2, {0}), RangeError);
    EXPECT_THROW(CodeConfig(2, {5}), RangeError);
    EXPECT_THROW(CodeConfig(2, {}), RangeError);
    const CodeConfig c(3, {2, 5, 8});
    EXPECT_EQ(c.frozen_set(), (std::vector<std::size_t>{1, 3, 4, 6, 7}));
}

TEST(ConstructRm, Examples)
{
    const auto rm = construct_rm(128, 64);
    ASSERT_EQ(rm.k(), 64u);
    for (auto i : rm.info_set())
        EXPECT_GE(row_weight(7, i), 16u);
    std::size_t heavy = 0;
    for (std::size_t i = 1; i <= 128; ++i)
        heavy += std::popcount(i - 1) >= 4;
    EXPECT_EQ(heavy, 64u);

    EXPECT_EQ(as_vector(construct_rm(2, 2)), (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(as_vector(construct_rm(8, 1)), (std::vector<std::size_t>{8}));
}

TEST(ConstructRm, BinomialPrefixDimensionsGiveExactReedMullerSets)
{
    for (int m = 1; m <= 9; ++m) {
        const std::size_t n = std::size_t{1} << m;
        for (int r = m; r >= 0; --r) {
            std::vector<std::size_t> expected;
            for (std::size_t i = 1; i <= n; ++i)
                if (std::popcount(i - 1) >= r)
                    expected.push_back(i);
            EXPECT_EQ(as_vector(construct_rm(n, expected.size())), expected) << "m=" << m << " r=" << r;
        }
    }
}

TEST(ConstructRm, TiesAtTheBoundaryFollowPwOrder)
{
    // N = 8, K = 2: one weight-8 row plus the best of the weight-4 rows {4, 6, 7} by PW score.
    EXPECT_EQ(as_vector(construct_rm(8, 2)), (std::vector<std::size_t>{7, 8}));
}

TEST(ConstructPw, Examples)
{
    EXPECT_EQ(as_vector(construct_pw(2, 1)), (std::vector<std::size_t>{2}));
    EXPECT_EQ(as_vector(construct_pw(8, 4)), (std::vector<std::size_t>{4, 6, 7, 8}));
    EXPECT_EQ(min_row_weight(construct_pw(128, 64)), 8u);
}

TEST(ConstructPw, FullDimensionIsEverything)
{
    for (std::size_t n : {2u, 4u, 16u, 128u}) {
        std::vector<std::size_t> all(n);
        std::iota(all.begin(), all.end(), std::size_t{1});
        EXPECT_EQ(as_vector(construct_pw(n, n)), all);
        EXPECT_EQ(as_vector(construct_rm(n, n)), all);
    }
}

TEST(PwScore, ExactComparisonAgreesWithFloatingPointAwayFromTies)
{
    for (std::size_t a = 1; a <= 512; ++a)
        for (std::size_t b = 1; b <= 512; b += 7) {
            const double diff = pw_score(a) - pw_score(b);
            const int cmp = compare_pw_score(a, b);
            if (a == b)
                EXPECT_EQ(cmp, 0);
            else if (std::abs(diff) > 1e-9)
                EXPECT_EQ(cmp, diff > 0 ? 1 : -1) << a << " vs " << b;
            else
                ADD_FAILURE() << "distinct indices " << a << ", " << b << " with equal score";
        }
}

TEST(PwScore, RespectsBitwiseDomination)
{
    for (std::size_t a = 1; a <= 256; ++a)
        for (std::size_t b = 1; b <= 256; ++b)
            if (((a - 1) & (b - 1)) == (b - 1))
                EXPECT_GE(compare_pw_score(a, b), 0) << a << " dominates " << b;
}

TEST(ConstructErrors, DimensionAndLength)
{
    EXPECT_THROW(construct_rm(8, 0), RangeError);
    EXPECT_THROW(construct_pw(8, 9), RangeError);
    EXPECT_THROW(construct_pw(12, 4), RangeError);
}

TEST(LoadInfoSet, ParsesPlainFile)
{
    TempFile f("3\n4\n");
    const auto c = load_info_set(f.path(), 4);
    EXPECT_EQ(c.m(), 2);
    EXPECT_EQ(c.k(), 2u);
    EXPECT_EQ(as_vector(c), (std::vector<std::size_t>{3, 4}));
}

TEST(LoadInfoSet, AcceptsCommentsCrlfAndMissingTrailingNewline)
{
    TempFile f("# reliability order\r\n8\r\n\r\n6\r\n7");
    EXPECT_EQ(as_vector(load_info_set(f.path(), 8)), (std::vector<std::size_t>{6, 7, 8}));
}

TEST(LoadInfoSet, Errors)
{
    TempFile dup("4\n4\n");
    EXPECT_THROW(load_info_set(dup.path(), 4), ParseError);
    TempFile range("129\n");
    EXPECT_THROW(load_info_set(range.path(), 128), RangeError);
    TempFile junk("12a\n");
    EXPECT_THROW(load_info_set(junk.path(), 128), ParseError);
    EXPECT_THROW(load_info_set("/nonexistent/polarspec/info.txt", 128), Error);
}

TEST(MinRowWeight, Examples)
{
    EXPECT_EQ(min_row_weight(construct_rm(128, 64)), 16u);
    EXPECT_EQ(min_row_weight(construct_pw(128, 64)), 8u);
    EXPECT_EQ(min_row_weight(CodeConfig(1, {1, 2})), 1u);
}
