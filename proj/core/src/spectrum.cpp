#include "polarspec/spectrum.hpp"

#include "polarspec/error.hpp"
#include "polarspec/polar_core.hpp"

#include <algorithm>
#include <string>

namespace polarspec {

namespace {

void check_coset_args(int m, std::size_t i)
{
    if (m < 1 || m > 20)
        throw RangeError("spectrum order m out of range: " + std::to_string(m));
    if (i < 1 || i > (std::size_t{1} << m))
        throw RangeError("coset index " + std::to_string(i) + " outside [1, 2^" + std::to_string(m) + "]");
}

// Rows 0..max_n of Pascal's triangle, each truncated to k <= max_k.
std::vector<std::vector<mpz_class>> pascal(std::size_t max_n, std::size_t max_k)
{
    std::vector<std::vector<mpz_class>> rows(max_n + 1);
    for (std::size_t n = 0; n <= max_n; ++n) {
        const std::size_t width = std::min(n, max_k) + 1;
        rows[n].resize(width);
        rows[n][0] = 1;
        for (std::size_t k = 1; k < width; ++k) {
            rows[n][k] = rows[n - 1][k - 1];
            if (k < rows[n - 1].size())
                rows[n][k] += rows[n - 1][k];
        }
    }
    return rows;
}

} // namespace

CosetTable::CosetTable(int m, std::span<const std::size_t> indices, std::size_t d_max) : m_(m), d_max_(d_max)
{
    if (m < 1 || m > 20)
        throw RangeError("spectrum order m out of range: " + std::to_string(m));
    const std::size_t n = std::size_t{1} << m;
    if (d_max > n)
        throw RangeError("weight bound " + std::to_string(d_max) + " exceeds code length " + std::to_string(n));
    for (auto i : indices)
        check_coset_args(m, i);

    // needed[l][i-1]: whether level l must hold A_d(l, i).
    std::vector<std::vector<char>> needed(static_cast<std::size_t>(m) + 1);
    needed[static_cast<std::size_t>(m)].assign(n, 0);
    for (auto i : indices)
        needed[static_cast<std::size_t>(m)][i - 1] = 1;
    for (int l = m; l > 1; --l) {
        const std::size_t half = std::size_t{1} << (l - 1);
        auto& below = needed[static_cast<std::size_t>(l - 1)];
        below.assign(half, 0);
        for (std::size_t i = 1; i <= 2 * half; ++i)
            if (needed[static_cast<std::size_t>(l)][i - 1])
                below[(i <= half ? i : i - half) - 1] = 1;
    }

    const std::size_t max_k = d_max / 2;
    const auto binom = pascal(n / 2, max_k);

    // Level 1: cosets {(1,0),(0,1)} and {(1,1)}.
    std::vector<std::vector<mpz_class>> level(2);
    {
        const std::size_t cap = std::min<std::size_t>(d_max, 2);
        for (std::size_t i = 1; i <= 2; ++i) {
            if (!needed[1][i - 1])
                continue;
            level[i - 1].assign(cap + 1, 0);
            if (i == 1 && cap >= 1)
                level[0][1] = 2;
            if (i == 2 && cap >= 2)
                level[1][2] = 1;
        }
    }

    std::vector<mpz_class> shifted;
    for (int l = 2; l <= m; ++l) {
        const std::size_t half = std::size_t{1} << (l - 1);
        const std::size_t cap = std::min(d_max, 2 * half);
        std::vector<std::vector<mpz_class>> next(2 * half);
        for (std::size_t i = 1; i <= 2 * half; ++i) {
            if (!needed[static_cast<std::size_t>(l)][i - 1])
                continue;
            auto& out = next[i - 1];
            out.assign(cap + 1, 0);
            if (i > half) {
                // Row i is [r, r] with r a row of the half-length transform: weights double.
                const auto& src = level[i - half - 1];
                for (std::size_t e = 0; 2 * e <= cap && e < src.size(); ++e)
                    out[2 * e] = src[e];
                continue;
            }
            // A_d(l,i) = sum_{d' = d mod 2} A_d'(l-1,i) * 2^d' * C(half - d', (d - d')/2).
            const auto& src = level[i - 1];
            const std::size_t w = row_weight(l - 1, i);
            shifted.assign(src.size(), 0);
            for (std::size_t dp = w; dp < src.size(); ++dp)
                if (src[dp] != 0)
                    mpz_mul_2exp(shifted[dp].get_mpz_t(), src[dp].get_mpz_t(), dp);
            for (std::size_t d = w; d <= cap; ++d) {
                mpz_ptr acc = out[d].get_mpz_t();
                const std::size_t top = std::min(d, src.size() - 1);
                for (std::size_t dp = w + ((d - w) & 1u); dp <= top; dp += 2) {
                    const std::size_t k = (d - dp) / 2;
                    const auto& brow = binom[half - dp];
                    if (k >= brow.size() || shifted[dp] == 0)
                        continue;
                    mpz_addmul(acc, shifted[dp].get_mpz_t(), brow[k].get_mpz_t());
                }
            }
        }
        level = std::move(next);
    }
    top_ = std::move(level);
}

const std::vector<mpz_class>& CosetTable::counts(std::size_t i) const
{
    if (i < 1 || i > top_.size() || top_[i - 1].empty())
        throw RangeError("coset index " + std::to_string(i) + " was not computed in this table");
    return top_[i - 1];
}

CosetSpectrum coset_spectrum(int m, std::size_t i, std::size_t d_max)
{
    check_coset_args(m, i);
    const std::size_t idx[] = {i};
    CosetTable table(m, idx, d_max);
    return CosetSpectrum{m, i, table.counts(i)};
}

DyadicRational p_exact(int m, std::size_t i, std::size_t d)
{
    const auto spec = coset_spectrum(m, i, d);
    const std::size_t n = std::size_t{1} << m;
    return DyadicRational(spec.counts[d], n - i);
}

DyadicRational p_min(int m, std::size_t i)
{
    check_coset_args(m, i);
    // log2 of 1/P(m,i), accumulated while walking down to level 1.
    std::uint64_t exponent = 0;
    for (int l = m; l > 1; --l) {
        const std::size_t half = std::size_t{1} << (l - 1);
        if (i <= half)
            exponent += half - row_weight(l, i);
        else
            i -= half;
    }
    return DyadicRational(mpz_class(1), exponent);
}

AverageSpectrum::AverageSpectrum(CodeConfig config, std::vector<DyadicRational> entries)
    : config_(std::move(config)), entries_(std::move(entries))
{
    if (entries_.empty())
        entries_.resize(1);
}

const DyadicRational& AverageSpectrum::at(std::size_t d) const
{
    if (d < 1 || d >= entries_.size())
        throw RangeError("weight " + std::to_string(d) + " outside [1, " + std::to_string(d_max()) + "]");
    return entries_[d];
}

DyadicRational AverageSpectrum::total() const
{
    DyadicRational sum;
    for (std::size_t d = 1; d < entries_.size(); ++d)
        sum += entries_[d];
    return sum;
}

AverageSpectrum avg_spectrum(const CodeConfig& config, std::size_t d_max)
{
    const std::size_t n = config.n();
    if (d_max < 1 || d_max > n)
        throw RangeError("weight bound " + std::to_string(d_max) + " outside [1, " + std::to_string(n) + "]");
    const auto info = config.info_set();
    const std::size_t k = info.size();
    CosetTable table(config.m(), info, d_max);

    // Term j contributes 2^(K-j) * A_d(I_j) / 2^(N - I_j) = A_d(I_j) * 2^(K - j - N + I_j).
    std::vector<std::int64_t> shift(k);
    std::int64_t min_shift = 0;
    for (std::size_t j = 1; j <= k; ++j) {
        shift[j - 1] = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(j) - static_cast<std::int64_t>(n) +
                       static_cast<std::int64_t>(info[j - 1]);
        min_shift = std::min(min_shift, shift[j - 1]);
    }

    std::vector<DyadicRational> entries(d_max + 1);
    mpz_class acc;
    mpz_class term;
    for (std::size_t d = 1; d <= d_max; ++d) {
        acc = 0;
        for (std::size_t j = 1; j <= k; ++j) {
            if (row_weight(config.m(), info[j - 1]) > d)
                continue;
            const auto& a = table.counts(info[j - 1])[d];
            if (a == 0)
                continue;
            mpz_mul_2exp(term.get_mpz_t(), a.get_mpz_t(), static_cast<mp_bitcnt_t>(shift[j - 1] - min_shift));
            acc += term;
        }
        entries[d] = DyadicRational(acc, 0).scaled(min_shift);
    }
    return AverageSpectrum(config, std::move(entries));
}

NminResult avg_nmin(const CodeConfig& config)
{
    NminResult result;
    result.d_min = min_row_weight(config);
    const auto info = config.info_set();
    const std::size_t k = info.size();
    for (std::size_t j = 1; j <= k; ++j) {
        if (row_weight(config.m(), info[j - 1]) != result.d_min)
            continue;
        result.value += p_min(config.m(), info[j - 1]).scaled(static_cast<std::int64_t>(k - j));
    }
    return result;
}

} // namespace polarspec
