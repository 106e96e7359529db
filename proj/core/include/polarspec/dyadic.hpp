#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace polarspec {

// Exact non-negative rational num / 2^exp, kept normalized: num odd, or num = 0 with exp = 0.
class DyadicRational {
public:
    DyadicRational() = default;
    DyadicRational(mpz_class num, std::uint64_t exp);
    // Integer value.
    explicit DyadicRational(mpz_class value) : DyadicRational(std::move(value), 0) {}
    static DyadicRational from_int(std::uint64_t value) { return DyadicRational(mpz_class(static_cast<unsigned long>(value))); }
    // 2^e for any signed e.
    static DyadicRational pow2(std::int64_t e);

    const mpz_class& num() const noexcept { return num_; }
    std::uint64_t exp() const noexcept { return exp_; }
    bool is_zero() const noexcept { return num_ == 0; }
    bool is_integer() const noexcept { return exp_ == 0; }

    DyadicRational& operator+=(const DyadicRational& rhs);
    friend DyadicRational operator+(DyadicRational lhs, const DyadicRational& rhs)
    {
        lhs += rhs;
        return lhs;
    }
    DyadicRational& operator*=(const DyadicRational& rhs);
    friend DyadicRational operator*(DyadicRational lhs, const DyadicRational& rhs)
    {
        lhs *= rhs;
        return lhs;
    }
    // Multiplies by 2^e.
    DyadicRational scaled(std::int64_t e) const;

    friend bool operator==(const DyadicRational& a, const DyadicRational& b)
    {
        return a.exp_ == b.exp_ && a.num_ == b.num_;
    }
    friend std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b);

    long double to_long_double() const;
    double to_double() const { return static_cast<double>(to_long_double()); }

    // Exact decimal expansion (every dyadic rational has one).
    std::string to_decimal() const;
    // Rounded to `digits` fractional digits, round-half-to-even; trailing zeros kept.
    std::string to_decimal(unsigned digits) const;
    // Nearest integer, round-half-to-even.
    mpz_class round_to_integer() const;

private:
    void normalize();

    mpz_class num_ = 0;
    std::uint64_t exp_ = 0;
};

} // namespace polarspec
