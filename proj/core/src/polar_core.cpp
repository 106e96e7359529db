#include "polarspec/polar_core.hpp"

#include "polarspec/error.hpp"

#include <array>
#include <string>

namespace polarspec {

namespace {

void check_index(int m, std::size_t i)
{
    if (m < 1 || m > 30)
        throw RangeError("order m out of range: " + std::to_string(m));
    if (i < 1 || i > (std::size_t{1} << m))
        throw RangeError("row index " + std::to_string(i) + " outside [1, 2^" + std::to_string(m) + "]");
}

// Bits j with (j & h) == 0 inside a 64-bit word, for h = 1, 2, ..., 32.
constexpr std::array<std::uint64_t, 6> kLowHalfMask = {
    0x5555555555555555ull, 0x3333333333333333ull, 0x0F0F0F0F0F0F0F0Full,
    0x00FF00FF00FF00FFull, 0x0000FFFF0000FFFFull, 0x00000000FFFFFFFFull,
};

} // namespace

BitRow kron_row(int m, std::size_t i)
{
    check_index(m, i);
    const std::size_t n = std::size_t{1} << m;
    const std::size_t mask = i - 1;
    BitRow row(n);
    // Column j is set iff the bits of j-1 are a subset of the bits of i-1.
    for (std::size_t j = 0; j < n; ++j)
        if ((j & mask) == j)
            row.set(j + 1);
    return row;
}

std::size_t row_weight(int m, std::size_t i)
{
    check_index(m, i);
    return std::size_t{1} << std::popcount(i - 1);
}

void polar_transform(BitRow& v) noexcept
{
    // x = [a ^ b, b] recursively, i.e. x_j ^= x_{j+h} for every j with (j & h) == 0.
    auto words = v.words();
    const std::size_t n = v.size();
    for (std::size_t level = 0; level < 6 && (std::size_t{1} << level) < n; ++level) {
        const unsigned h = 1u << level;
        for (auto& w : words)
            w ^= (w >> h) & kLowHalfMask[level];
    }
    for (std::size_t hw = 1; hw < words.size(); hw <<= 1)
        for (std::size_t base = 0; base < words.size(); base += 2 * hw)
            for (std::size_t w = base; w < base + hw; ++w)
                words[w] ^= words[w + hw];
}

BitRow encode(const BitRow& u, const PreTransform& t)
{
    if (u.size() != t.length())
        throw RangeError("message length " + std::to_string(u.size()) + " does not match transform length " +
                         std::to_string(t.length()));
    BitRow v = u;
    const auto indices = t.indices();
    std::size_t k = 0;
    for (std::size_t i = 1; i <= u.size(); ++i) {
        const bool is_info = k < indices.size() && indices[k] == i;
        if (u.get(i)) {
            if (!is_info)
                throw Error("nonzero input at frozen position " + std::to_string(i));
            v ^= t.offdiag_row(k);
        }
        if (is_info)
            ++k;
    }
    polar_transform(v);
    return v;
}

} // namespace polarspec
