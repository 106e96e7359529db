#include "polarspec/dyadic.hpp"

#include "polarspec/error.hpp"

#include <cmath>

namespace polarspec {

namespace {

// floor(a / 2^e) rounded half-to-even.
mpz_class round_shift(const mpz_class& a, std::uint64_t e)
{
    if (e == 0)
        return a;
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), a.get_mpz_t(), e);
    mpz_class r;
    mpz_fdiv_r_2exp(r.get_mpz_t(), a.get_mpz_t(), e);
    mpz_class half;
    mpz_setbit(half.get_mpz_t(), e - 1);
    const int cmp = mpz_cmp(r.get_mpz_t(), half.get_mpz_t());
    if (cmp > 0 || (cmp == 0 && mpz_odd_p(q.get_mpz_t())))
        ++q;
    return q;
}

std::string with_point(std::string digits, unsigned frac)
{
    if (frac == 0)
        return digits;
    if (digits.size() <= frac)
        digits.insert(0, frac - digits.size() + 1, '0');
    digits.insert(digits.size() - frac, ".");
    return digits;
}

} // namespace

DyadicRational::DyadicRational(mpz_class num, std::uint64_t exp) : num_(std::move(num)), exp_(exp)
{
    if (num_ < 0)
        throw RangeError("dyadic rationals here are non-negative");
    normalize();
}

DyadicRational DyadicRational::pow2(std::int64_t e)
{
    if (e >= 0) {
        mpz_class v;
        mpz_setbit(v.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return DyadicRational(v);
    }
    return DyadicRational(mpz_class(1), static_cast<std::uint64_t>(-e));
}

void DyadicRational::normalize()
{
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    const auto tz = mpz_scan1(num_.get_mpz_t(), 0);
    const auto shift = std::min<std::uint64_t>(tz, exp_);
    if (shift > 0) {
        mpz_tdiv_q_2exp(num_.get_mpz_t(), num_.get_mpz_t(), shift);
        exp_ -= shift;
    }
}

DyadicRational& DyadicRational::operator+=(const DyadicRational& rhs)
{
    if (rhs.is_zero())
        return *this;
    if (exp_ >= rhs.exp_) {
        mpz_class t;
        mpz_mul_2exp(t.get_mpz_t(), rhs.num_.get_mpz_t(), exp_ - rhs.exp_);
        num_ += t;
    } else {
        mpz_mul_2exp(num_.get_mpz_t(), num_.get_mpz_t(), rhs.exp_ - exp_);
        num_ += rhs.num_;
        exp_ = rhs.exp_;
    }
    normalize();
    return *this;
}

DyadicRational& DyadicRational::operator*=(const DyadicRational& rhs)
{
    num_ *= rhs.num_;
    exp_ += rhs.exp_;
    normalize();
    return *this;
}

DyadicRational DyadicRational::scaled(std::int64_t e) const
{
    DyadicRational out = *this;
    if (out.is_zero())
        return out;
    if (e >= 0) {
        const auto down = std::min<std::uint64_t>(out.exp_, static_cast<std::uint64_t>(e));
        out.exp_ -= down;
        mpz_mul_2exp(out.num_.get_mpz_t(), out.num_.get_mpz_t(), static_cast<std::uint64_t>(e) - down);
    } else {
        out.exp_ += static_cast<std::uint64_t>(-e);
    }
    out.normalize();
    return out;
}

std::strong_ordering operator<=>(const DyadicRational& a, const DyadicRational& b)
{
    mpz_class lhs = a.num_;
    mpz_class rhs = b.num_;
    if (a.exp_ > b.exp_)
        mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), a.exp_ - b.exp_);
    else
        mpz_mul_2exp(lhs.get_mpz_t(), lhs.get_mpz_t(), b.exp_ - a.exp_);
    const int c = cmp(lhs, rhs);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

long double DyadicRational::to_long_double() const
{
    if (is_zero())
        return 0.0L;
    // Keep 64 significant bits, then scale.
    const auto bits = mpz_sizeinbase(num_.get_mpz_t(), 2);
    mpz_class top = num_;
    long shift = 0;
    if (bits > 64) {
        shift = static_cast<long>(bits - 64);
        mpz_tdiv_q_2exp(top.get_mpz_t(), top.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
    }
    long double mant = 0.0L;
    const auto str = top.get_str(16);
    for (char ch : str)
        mant = mant * 16.0L + static_cast<long double>(ch <= '9' ? ch - '0' : ch - 'a' + 10);
    return std::ldexp(mant, static_cast<int>(shift - static_cast<long>(exp_)));
}

std::string DyadicRational::to_decimal() const
{
    // num / 2^e = num * 5^e / 10^e.
    mpz_class scaled_num;
    mpz_ui_pow_ui(scaled_num.get_mpz_t(), 5, exp_);
    scaled_num *= num_;
    return with_point(scaled_num.get_str(), static_cast<unsigned>(exp_));
}

std::string DyadicRational::to_decimal(unsigned digits) const
{
    mpz_class ten_pow;
    mpz_ui_pow_ui(ten_pow.get_mpz_t(), 10, digits);
    const mpz_class rounded = round_shift(num_ * ten_pow, exp_);
    return with_point(rounded.get_str(), digits);
}

mpz_class DyadicRational::round_to_integer() const
{
    return round_shift(num_, exp_);
}

} // namespace polarspec
