#include "paucity/int128.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>

namespace paucity {

std::string Int128::str() const {
    if (v_ == 0) return "0";
    unsigned __int128 u;
    bool neg = v_ < 0;
    if (neg) {
        // two's complement: |min| is representable unsigned
        u = static_cast<unsigned __int128>(-(v_ + 1)) + 1;
    } else {
        u = static_cast<unsigned __int128>(v_);
    }
    std::string digits;
    while (u != 0) {
        digits.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int128 Int128::parse(const std::string& text) {
    std::size_t i = 0;
    bool neg = false;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
        neg = text[i] == '-';
        ++i;
    }
    if (i >= text.size())
        throw ParseError("empty integer literal: '" + text + "'");
    Int128 value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("bad integer literal: '" + text + "'");
        int d = text[i] - '0';
        try {
            value = value * 10 + (neg ? Int128(-d) : Int128(d));
        } catch (const OverflowError&) {
            throw ParseError("integer literal out of range: '" + text + "'");
        }
    }
    return value;
}

std::ostream& operator<<(std::ostream& os, Int128 v) { return os << v.str(); }

Int128 gcd(Int128 a, Int128 b) {
    // Euclid on magnitudes; gcd(min(), x) stays representable because we
    // reduce before taking abs.
    __int128 x = a.raw(), y = b.raw();
    while (y != 0) {
        __int128 t = x % y;
        x = y;
        y = t;
    }
    if (x == Int128::min().raw())
        throw OverflowError("gcd magnitude overflow");
    return x < 0 ? Int128::from_raw(-x) : Int128::from_raw(x);
}

Int128 pow_checked(Int128 base, int exp) {
    if (exp < 0) throw Error("pow_checked: negative exponent");
    Int128 acc = 1;
    for (int i = 0; i < exp; ++i) acc *= base;
    return acc;
}

Int128 binomial(Int128 n, int k) {
    if (k < 0 || n < Int128(0)) throw Error("binomial: negative argument");
    if (Int128(k) > n) return 0;
    Int128 acc = 1;
    for (int i = 1; i <= k; ++i) {
        acc = (acc * (n - Int128(i - 1))).div_exact(Int128(i));
    }
    return acc;
}

} // namespace paucity
