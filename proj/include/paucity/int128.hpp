#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <string>
#include <type_traits>

#include "paucity/errors.hpp"

namespace paucity {

// Signed 128-bit integer with mandatory overflow detection. Every
// operation either yields the mathematically exact result or throws
// OverflowError; silent wraparound cannot happen.
class Int128 {
public:
    constexpr Int128() = default;
    template <typename T>
        requires std::is_integral_v<T>
    constexpr Int128(T v) : v_(v) {}

    static constexpr Int128 from_raw(__int128 v) {
        Int128 r;
        r.v_ = v;
        return r;
    }
    constexpr __int128 raw() const { return v_; }

    static constexpr Int128 max() {
        return from_raw(~(static_cast<__int128>(1) << 127));
    }
    static constexpr Int128 min() {
        return from_raw(static_cast<__int128>(1) << 127);
    }

    friend Int128 operator+(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_add_overflow(a.v_, b.v_, &r))
            throw OverflowError("Int128 addition overflow");
        return from_raw(r);
    }
    friend Int128 operator-(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_sub_overflow(a.v_, b.v_, &r))
            throw OverflowError("Int128 subtraction overflow");
        return from_raw(r);
    }
    friend Int128 operator*(Int128 a, Int128 b) {
        __int128 r;
        if (__builtin_mul_overflow(a.v_, b.v_, &r))
            throw OverflowError("Int128 multiplication overflow");
        return from_raw(r);
    }
    Int128 operator-() const {
        __int128 r;
        if (__builtin_sub_overflow(static_cast<__int128>(0), v_, &r))
            throw OverflowError("Int128 negation overflow");
        return from_raw(r);
    }

    // Truncating division; exactness-sensitive callers use divides()/div_exact().
    friend Int128 operator/(Int128 a, Int128 b) {
        check_division(a, b);
        return from_raw(a.v_ / b.v_);
    }
    friend Int128 operator%(Int128 a, Int128 b) {
        check_division(a, b);
        return from_raw(a.v_ % b.v_);
    }

    Int128& operator+=(Int128 b) { return *this = *this + b; }
    Int128& operator-=(Int128 b) { return *this = *this - b; }
    Int128& operator*=(Int128 b) { return *this = *this * b; }

    friend constexpr bool operator==(Int128 a, Int128 b) { return a.v_ == b.v_; }
    friend constexpr std::strong_ordering operator<=>(Int128 a, Int128 b) {
        if (a.v_ < b.v_) return std::strong_ordering::less;
        if (a.v_ > b.v_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

    constexpr bool is_zero() const { return v_ == 0; }
    constexpr int signum() const { return v_ > 0 ? 1 : (v_ < 0 ? -1 : 0); }

    Int128 abs() const {
        if (v_ < 0) return -*this;
        return *this;
    }

    // True iff *this divides b (division by zero divides only zero... it does not).
    bool divides(Int128 b) const {
        if (v_ == 0) return b.v_ == 0;
        if (v_ == -1) return true; // avoid min/-1 trap
        return b.v_ % v_ == 0;
    }

    // Quotient of an exact division; throws Error if the division has remainder.
    Int128 div_exact(Int128 b) const {
        check_division(*this, b);
        if (v_ % b.v_ != 0)
            throw Error("div_exact: inexact division");
        return from_raw(v_ / b.v_);
    }

    // Nearest double; only used for logarithmic fits and progress ratios.
    double approx_double() const { return static_cast<double>(v_); }

    bool fits_int64() const {
        return v_ >= std::numeric_limits<std::int64_t>::min() &&
               v_ <= std::numeric_limits<std::int64_t>::max();
    }
    std::int64_t to_int64() const {
        if (!fits_int64())
            throw OverflowError("Int128 value does not fit in 64 bits");
        return static_cast<std::int64_t>(v_);
    }

    std::string str() const;
    static Int128 parse(const std::string& text); // throws ParseError

private:
    static void check_division(Int128 a, Int128 b) {
        if (b.v_ == 0)
            throw Error("Int128 division by zero");
        if (b.v_ == -1 && a == min())
            throw OverflowError("Int128 division overflow");
    }

    __int128 v_ = 0;
};

std::ostream& operator<<(std::ostream& os, Int128 v);

Int128 gcd(Int128 a, Int128 b);

// base^exp with overflow checking; exp >= 0.
Int128 pow_checked(Int128 base, int exp);

// C(n, k), exact; n >= 0, k >= 0.
Int128 binomial(Int128 n, int k);

} // namespace paucity

template <>
struct std::hash<paucity::Int128> {
    std::size_t operator()(const paucity::Int128& v) const noexcept {
        auto u = static_cast<unsigned __int128>(v.raw());
        std::uint64_t lo = static_cast<std::uint64_t>(u);
        std::uint64_t hi = static_cast<std::uint64_t>(u >> 64);
        return std::hash<std::uint64_t>{}(lo ^ (hi * 0x9e3779b97f4a7c15ULL));
    }
};
