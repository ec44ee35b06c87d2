#include "paucity/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace paucity {

Poly Poly::monomial(Int128 c, int n) {
    if (n < 0) throw std::invalid_argument("monomial: negative exponent");
    if (c.is_zero()) return Poly();
    std::vector<Int128> v(static_cast<std::size_t>(n) + 1, Int128(0));
    v.back() = c;
    return Poly(std::move(v));
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Int128> v(std::max(a.c_.size(), b.c_.size()), Int128(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(static_cast<int>(i)) + b.coeff(static_cast<int>(i));
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) {
    std::vector<Int128> v(std::max(a.c_.size(), b.c_.size()), Int128(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        v[i] = a.coeff(static_cast<int>(i)) - b.coeff(static_cast<int>(i));
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Int128> v(a.c_.size() + b.c_.size() - 1, Int128(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            v[i + j] += a.c_[i] * b.c_[j];
    return Poly(std::move(v));
}

Poly Poly::operator-() const {
    std::vector<Int128> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = -c_[i];
    return Poly(std::move(v));
}

Poly Poly::scaled(Int128 s) const {
    std::vector<Int128> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = c_[i] * s;
    return Poly(std::move(v));
}

Int128 Poly::eval(Int128 t0) const {
    Int128 acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t0 + c_[i];
    return acc;
}

Int128 Poly::content() const {
    Int128 g = 0;
    for (const Int128& c : c_) g = gcd(g, c);
    return g;
}

std::optional<Poly> Poly::divided_by(Int128 s) const {
    std::vector<Int128> v(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!s.divides(c_[i])) return std::nullopt;
        v[i] = c_[i] / s;
    }
    return Poly(std::move(v));
}

std::optional<Poly> Poly::deflated(Int128 root) const {
    if (is_zero()) return std::nullopt;
    // p(t) = (t - root) q(t) + rem
    std::vector<Int128> q(c_.size() - 1, Int128(0));
    Int128 carry = 0;
    for (std::size_t i = c_.size(); i-- > 1;) {
        carry = c_[i] + carry * root;
        q[i - 1] = carry;
    }
    Int128 rem = c_[0] + carry * root;
    if (!rem.is_zero()) return std::nullopt;
    return Poly(std::move(q));
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        Int128 c = coeff(i);
        if (c.is_zero()) continue;
        if (!out.empty()) {
            out += c.signum() < 0 ? " - " : " + ";
            c = c.abs();
        } else if (c.signum() < 0) {
            out += "-";
            c = c.abs();
        }
        bool unit = c == Int128(1);
        if (i == 0) {
            out += c.str();
        } else {
            if (!unit) out += c.str() + "*";
            out += i == 1 ? "t" : "t^" + std::to_string(i);
        }
    }
    return out;
}

SigmaVector elementary_symmetric(std::span<const std::int64_t> z) {
    if (z.size() > 16)
        throw std::invalid_argument("elementary_symmetric: k > 16");
    // sigma[j] after i factors = sigma_j(z_1..z_i)
    SigmaVector sigma(z.size() + 1, Int128(0));
    sigma[0] = 1;
    for (std::size_t i = 0; i < z.size(); ++i) {
        Int128 zi{static_cast<long long>(z[i])};
        for (std::size_t j = i + 2; j-- > 1;) sigma[j] += sigma[j - 1] * zi;
    }
    return sigma;
}

Poly poly_from_roots(std::span<const std::int64_t> negated_roots) {
    SigmaVector sigma = elementary_symmetric(negated_roots);
    // prod(t + z_i) = sum_j sigma_j t^(k-j)
    std::vector<Int128> coeffs(sigma.rbegin(), sigma.rend());
    return Poly(std::move(coeffs));
}

} // namespace paucity
