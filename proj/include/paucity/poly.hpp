#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paucity/int128.hpp"

namespace paucity {

// Dense integer polynomial in one variable t, exact arithmetic throughout.
// Canonical form: no trailing zero coefficients; the zero polynomial stores
// nothing and reports degree kDegreeNegInf.
class Poly {
public:
    // Degree reported for the zero polynomial ("minus infinity").
    static constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

    Poly() = default;
    explicit Poly(std::vector<Int128> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<Int128> coeffs) : c_(coeffs) { trim(); }

    static Poly constant(Int128 v) { return Poly({v}); }
    // c * t^n
    static Poly monomial(Int128 c, int n);

    bool is_zero() const { return c_.empty(); }
    int degree() const {
        return c_.empty() ? kDegreeNegInf : static_cast<int>(c_.size()) - 1;
    }
    Int128 coeff(int i) const {
        if (i < 0 || static_cast<std::size_t>(i) >= c_.size()) return 0;
        return c_[static_cast<std::size_t>(i)];
    }
    Int128 leading() const { return c_.empty() ? Int128(0) : c_.back(); }
    const std::vector<Int128>& coeffs() const { return c_; }

    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly operator-() const;
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    Poly scaled(Int128 s) const;

    // Horner evaluation, exact.
    Int128 eval(Int128 t0) const;

    // gcd of all coefficients (0 for the zero polynomial).
    Int128 content() const;

    // Coefficient-wise exact division; nullopt if any coefficient resists.
    std::optional<Poly> divided_by(Int128 s) const;

    // Synthetic division by (t - root); nullopt unless root is an exact root.
    std::optional<Poly> deflated(Int128 root) const;

    // Human-readable form for diagnostics, e.g. "t^2 + 7*t + 6".
    std::string str() const;

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Int128> c_; // c_[i] = coefficient of t^i
};

// Coefficients (sigma_0, ..., sigma_k) of prod(t + z_i) read off the
// generating identity; sigma_0 = 1.
using SigmaVector = std::vector<Int128>;

// Elementary symmetric function values of a k-tuple, 1 <= k <= 16,
// computed by iterated multiplication by (t + z_i).
SigmaVector elementary_symmetric(std::span<const std::int64_t> z);

// prod(t + z_i) as a polynomial of degree exactly z.size().
Poly poly_from_roots(std::span<const std::int64_t> negated_roots);

} // namespace paucity
