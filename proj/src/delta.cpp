#include "paucity/delta.hpp"

#include <algorithm>
#include <stdexcept>

#include "paucity/errors.hpp"

namespace paucity {

FreeValues::FreeValues(int kk, std::int64_t box_, std::vector<int> degrees_,
                       std::vector<Int128> values_)
    : k(kk), box(box_), degrees(std::move(degrees_)), values(std::move(values_)) {
    if (degrees.size() != values.size())
        throw std::invalid_argument("free values and degrees disagree in length");
    if (box < 1) throw std::invalid_argument("box must be >= 1");
    for (std::size_t m = 0; m < degrees.size(); ++m) {
        Int128 limit = pow_checked(2, k) * pow_checked(Int128(box), degrees[m]);
        if (values[m].abs() > limit)
            throw std::invalid_argument("free value exceeds its box bound");
    }
}

Int128 FreeValues::at(int degree) const {
    auto it = std::lower_bound(degrees.begin(), degrees.end(), degree);
    if (it == degrees.end() || *it != degree)
        throw std::invalid_argument("degree is not free in this system");
    return values[static_cast<std::size_t>(it - degrees.begin())];
}

bool FreeValues::all_zero() const {
    return std::all_of(values.begin(), values.end(),
                       [](const Int128& v) { return v.is_zero(); });
}

FreeValues FreeValues::negated() const {
    std::vector<Int128> neg;
    neg.reserve(values.size());
    for (const Int128& v : values) neg.push_back(-v);
    return FreeValues(k, box, degrees, std::move(neg));
}

namespace {

std::int64_t infer_box(std::span<const std::int64_t> x,
                       std::span<const std::int64_t> y) {
    std::int64_t box = 1;
    for (std::int64_t v : x) box = std::max(box, v);
    for (std::int64_t v : y) box = std::max(box, v);
    return box;
}

} // namespace

FreeValues sigma_deltas(std::span<const std::int64_t> x,
                        std::span<const std::int64_t> y,
                        const NormalizedSystem& sys) {
    if (static_cast<int>(x.size()) != sys.k() || static_cast<int>(y.size()) != sys.k())
        throw std::invalid_argument("tuple length must equal k");
    SigmaVector sx = elementary_symmetric(x);
    SigmaVector sy = elementary_symmetric(y);
    std::vector<Int128> vals;
    vals.reserve(sys.free_degrees().size());
    for (int l : sys.free_degrees())
        vals.push_back(sx[static_cast<std::size_t>(l)] - sy[static_cast<std::size_t>(l)]);
    return FreeValues(sys.k(), infer_box(x, y), sys.free_degrees(), std::move(vals));
}

FreeValues sigma_at_free_degrees(std::span<const std::int64_t> z,
                                 const NonlinearSystem& sys) {
    if (static_cast<int>(z.size()) != sys.k())
        throw std::invalid_argument("tuple length must equal k");
    SigmaVector s = elementary_symmetric(z);
    std::vector<Int128> vals;
    vals.reserve(sys.free_degrees().size());
    for (int l : sys.free_degrees()) vals.push_back(s[static_cast<std::size_t>(l)]);
    return FreeValues(sys.k(), infer_box(z, z), sys.free_degrees(), std::move(vals));
}

DeltaPoly::DeltaPoly(Poly p, Source s, int k) : poly(std::move(p)), source(s) {
    if (poly.degree() > k - 1)
        throw Error("delta polynomial exceeds degree k-1");
}

DeltaPoly delta_poly(const NormalizedSystem& sys, const FreeValues& deltas) {
    if (deltas.degrees != sys.free_degrees())
        throw std::invalid_argument("free values indexed by the wrong degrees");
    Poly acc;
    for (std::size_t m = 0; m < deltas.values.size(); ++m) {
        if (deltas.values[m].is_zero()) continue;
        acc = acc + sys.delta_basis()[m].scaled(deltas.values[m]);
    }
    return DeltaPoly(std::move(acc), DeltaPoly::Source::LinearDeltas, sys.k());
}

DeltaPoly delta_poly(const NonlinearSystem& sys, const FreeValues& sigmas) {
    if (sigmas.degrees != sys.free_degrees())
        throw std::invalid_argument("free values indexed by the wrong degrees");
    Poly acc;
    const Int128 product = sys.leading_product();
    for (std::size_t m = 0; m < sigmas.values.size(); ++m) {
        if (sigmas.values[m].is_zero()) continue;
        acc = acc + Poly::monomial(product * sigmas.values[m],
                                   sys.k() - sys.free_degrees()[m]);
    }
    for (int j = 0; j < sys.equation_count(); ++j) {
        Int128 corr = sys.correction_value(j, sigmas.values);
        if (corr.is_zero()) continue;
        acc = acc + Poly::monomial(sys.cofactors()[static_cast<std::size_t>(j)] * corr,
                                   sys.k() - sys.degrees()[static_cast<std::size_t>(j)]);
    }
    return DeltaPoly(std::move(acc), DeltaPoly::Source::NonlinearSigmas, sys.k());
}

namespace {

IdentityCheck compare_sides(const Poly& lhs, const Poly& rhs) {
    if (lhs == rhs) return {true, -1};
    int top = std::max(lhs.degree(), rhs.degree());
    for (int i = 0; i <= top; ++i)
        if (!(lhs.coeff(i) == rhs.coeff(i))) return {false, i};
    return {true, -1}; // unreachable
}

Poly scaled_product_difference(std::span<const std::int64_t> x,
                               std::span<const std::int64_t> y,
                               Int128 leading_product) {
    Poly px = poly_from_roots(x);
    Poly py = poly_from_roots(y);
    return (px - py).scaled(leading_product);
}

} // namespace

IdentityCheck check_product_identity(std::span<const std::int64_t> x,
                                     std::span<const std::int64_t> y,
                                     const NormalizedSystem& sys) {
    Poly lhs = scaled_product_difference(x, y, sys.leading_product());
    DeltaPoly rhs = delta_poly(sys, sigma_deltas(x, y, sys));
    return compare_sides(lhs, rhs.poly);
}

IdentityCheck check_product_identity(std::span<const std::int64_t> x,
                                     std::span<const std::int64_t> y,
                                     const NonlinearSystem& sys) {
    Poly lhs = scaled_product_difference(x, y, sys.leading_product());
    DeltaPoly dx = delta_poly(sys, sigma_at_free_degrees(x, sys));
    DeltaPoly dy = delta_poly(sys, sigma_at_free_degrees(y, sys));
    return compare_sides(lhs, dx.poly - dy.poly);
}

std::pair<Int128, Int128> substitution_sides(std::span<const std::int64_t> x,
                                             std::int64_t v,
                                             Int128 leading_product,
                                             const DeltaPoly& delta) {
    Int128 lhs = leading_product;
    for (std::int64_t xi : x) lhs *= Int128(xi) - Int128(v);
    Int128 rhs = delta.poly.eval(Int128(-v));
    return {lhs, rhs};
}

} // namespace paucity
