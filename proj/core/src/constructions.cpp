#include "polarspec/constructions.hpp"

#include "polarspec/error.hpp"
#include "polarspec/polar_core.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <string>

namespace polarspec {

CodeConfig::CodeConfig(int m, std::vector<std::size_t> info_set) : m_(m), info_set_(std::move(info_set))
{
    if (m < 1 || m > 30)
        throw RangeError("code order m out of range: " + std::to_string(m));
    if (info_set_.empty())
        throw RangeError("information set must not be empty");
    for (std::size_t k = 0; k < info_set_.size(); ++k) {
        if (info_set_[k] < 1 || info_set_[k] > n())
            throw RangeError("information index " + std::to_string(info_set_[k]) + " outside [1, " +
                             std::to_string(n()) + "]");
        if (k > 0 && info_set_[k] <= info_set_[k - 1])
            throw RangeError("information set must be strictly increasing");
    }
}

std::vector<std::size_t> CodeConfig::frozen_set() const
{
    std::vector<std::size_t> frozen;
    frozen.reserve(n() - k());
    for (std::size_t i = 1; i <= n(); ++i)
        if (!is_info(i))
            frozen.push_back(i);
    return frozen;
}

bool CodeConfig::is_info(std::size_t i) const noexcept
{
    return std::binary_search(info_set_.begin(), info_set_.end(), i);
}

int order_of(std::size_t n)
{
    if (n < 2 || !std::has_single_bit(n) || n > (std::size_t{1} << 30))
        throw RangeError("code length must be a power of two in [2, 2^30], got " + std::to_string(n));
    return std::countr_zero(n);
}

namespace {

using i64 = std::int64_t;

// Sign of x + y*sqrt(2) for integers x, y.
int sign_sqrt2(i64 x, i64 y)
{
    const int sx = (x > 0) - (x < 0);
    const int sy = (y > 0) - (y < 0);
    if (sx == 0)
        return sy;
    if (sy == 0 || sx == sy)
        return sx;
    // Opposite signs: compare x^2 with 2 y^2.
    const i64 lhs = x * x;
    const i64 rhs = 2 * y * y;
    if (lhs == rhs)
        return 0; // unreachable for integers unless both vanish
    return lhs > rhs ? sx : sy;
}

// Coefficients of the score in the basis {1, b, b^2, b^3}, b = 2^(1/4):
// bit j = 4q + r of (index - 1) contributes 2^q to coefficient r.
std::array<i64, 4> pw_coefficients(std::size_t index)
{
    std::array<i64, 4> c{};
    std::size_t bits = index - 1;
    for (int j = 0; bits != 0; ++j, bits >>= 1)
        if (bits & 1u)
            c[static_cast<std::size_t>(j % 4)] += i64{1} << (j / 4);
    return c;
}

// Sign of a + b*beta + c*beta^2 + d*beta^3 with beta^4 = 2.
// Written as P + beta*Q with P = a + c*sqrt2, Q = b + d*sqrt2.
int sign_quartic(i64 a, i64 b, i64 c, i64 d)
{
    const int sp = sign_sqrt2(a, c);
    const int sq = sign_sqrt2(b, d);
    if (sp == 0)
        return sq;
    if (sq == 0 || sp == sq)
        return sp;
    // |P| vs beta*|Q|: sign of P^2 - sqrt2*Q^2 = (a^2 + 2c^2 - 4bd) + (2ac - b^2 - 2d^2) sqrt2.
    const int s = sign_sqrt2(a * a + 2 * c * c - 4 * b * d, 2 * a * c - b * b - 2 * d * d);
    return s >= 0 ? sp : sq;
}

void check_dimension(std::size_t n, std::size_t k)
{
    if (k < 1 || k > n)
        throw RangeError("dimension K=" + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
}

// true if a ranks strictly above b under PW score, larger index on ties.
bool pw_before(std::size_t a, std::size_t b)
{
    const int cmp = compare_pw_score(a, b);
    return cmp != 0 ? cmp > 0 : a > b;
}

CodeConfig take_top(int m, std::vector<std::size_t> order, std::size_t k)
{
    order.resize(k);
    std::sort(order.begin(), order.end());
    return CodeConfig(m, std::move(order));
}

} // namespace

int compare_pw_score(std::size_t a, std::size_t b)
{
    const auto ca = pw_coefficients(a);
    const auto cb = pw_coefficients(b);
    return sign_quartic(ca[0] - cb[0], ca[1] - cb[1], ca[2] - cb[2], ca[3] - cb[3]);
}

double pw_score(std::size_t i)
{
    double score = 0.0;
    std::size_t bits = i - 1;
    for (int j = 0; bits != 0; ++j, bits >>= 1)
        if (bits & 1u)
            score += std::pow(2.0, j / 4.0);
    return score;
}

CodeConfig construct_rm(std::size_t n, std::size_t k)
{
    const int m = order_of(n);
    check_dimension(n, k);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::sort(order.begin(), order.end(), [](std::size_t a, std::size_t b) {
        const int pa = std::popcount(a - 1);
        const int pb = std::popcount(b - 1);
        return pa != pb ? pa > pb : pw_before(a, b);
    });
    return take_top(m, std::move(order), k);
}

CodeConfig construct_pw(std::size_t n, std::size_t k)
{
    const int m = order_of(n);
    check_dimension(n, k);
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::sort(order.begin(), order.end(), pw_before);
    return take_top(m, std::move(order), k);
}

CodeConfig load_info_set(const std::filesystem::path& path, std::size_t n)
{
    const int m = order_of(n);
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open information set file: " + path.string());

    std::vector<std::size_t> indices;
    std::vector<bool> seen(n + 1, false);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#')
            continue;
        const auto last = line.find_last_not_of(" \t");
        const char* begin = line.data() + first;
        const char* end = line.data() + last + 1;
        std::size_t value = 0;
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end)
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": malformed index '" + line + "'");
        if (value < 1 || value > n)
            throw RangeError(path.string() + ":" + std::to_string(line_no) + ": index " + std::to_string(value) +
                             " outside [1, " + std::to_string(n) + "]");
        if (seen[value])
            throw ParseError(path.string() + ":" + std::to_string(line_no) + ": duplicate index " +
                             std::to_string(value));
        seen[value] = true;
        indices.push_back(value);
    }
    if (indices.empty())
        throw ParseError(path.string() + ": no indices found");
    std::sort(indices.begin(), indices.end());
    return CodeConfig(m, std::move(indices));
}

std::size_t min_row_weight(const CodeConfig& config)
{
    std::size_t best = config.n();
    for (auto i : config.info_set())
        best = std::min(best, row_weight(config.m(), i));
    return best;
}

} // namespace polarspec
