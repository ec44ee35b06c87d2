#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "paucity/system.hpp"

namespace paucity {

// Integer values attached to a system's free degrees, together with the box
// parameter X used to bound them: |value at degree l| <= 2^k X^l. For the
// linear theory these are sigma differences; for the non-linear theory they
// are raw sigma values of one side.
struct FreeValues {
    FreeValues(int k, std::int64_t box, std::vector<int> degrees,
               std::vector<Int128> values);

    Int128 at(int degree) const;
    bool all_zero() const;
    FreeValues negated() const;

    int k;
    std::int64_t box;
    std::vector<int> degrees; // sorted, matches the owning system
    std::vector<Int128> values;
};

// sigma_l(x) - sigma_l(y) at each free degree; box taken as the largest
// entry so the bound check is the sharpest provable one.
FreeValues sigma_deltas(std::span<const std::int64_t> x,
                        std::span<const std::int64_t> y,
                        const NormalizedSystem& sys);

// sigma_l(z) at each free degree (non-linear side data).
FreeValues sigma_at_free_degrees(std::span<const std::int64_t> z,
                                 const NonlinearSystem& sys);

// The polynomial that equals A*(prod(t+x_i) - prod(t+y_i)) whenever the
// attached values come from a solution pair. Integral coefficients, degree
// at most k-1 (checked on construction).
struct DeltaPoly {
    enum class Source { LinearDeltas, NonlinearSigmas };

    DeltaPoly(Poly p, Source s, int k);

    Poly poly;
    Source source;
};

// Linear build: sum over free degrees of value_l * basis_l(t).
DeltaPoly delta_poly(const NormalizedSystem& sys, const FreeValues& deltas);

// Non-linear build: A sum_m e_m t^(k-m) + sum_j c_j t^(k-k_j) correction_j(e).
DeltaPoly delta_poly(const NonlinearSystem& sys, const FreeValues& sigmas);

// Result of a coefficient-exact identity check; on failure, mismatch_power
// is the exponent of t at the first disagreeing coefficient.
struct IdentityCheck {
    bool holds;
    int mismatch_power;
};

// Does A*(prod(t+x_i) - prod(t+y_i)) match the delta polynomial built from
// (x, y)? Holds exactly when (x, y) solves the system, which makes this the
// solution test the enumerators share.
IdentityCheck check_product_identity(std::span<const std::int64_t> x,
                                     std::span<const std::int64_t> y,
                                     const NormalizedSystem& sys);

// Non-linear counterpart with right side Delta(t; sigma(x)) - Delta(t; sigma(y)).
IdentityCheck check_product_identity(std::span<const std::int64_t> x,
                                     std::span<const std::int64_t> y,
                                     const NonlinearSystem& sys);

// Both sides of the identity specialized at t = -v:
// (A prod(x_i - v), delta(-v)). Equal whenever v occurs in the y-side of a
// solution with this delta polynomial.
std::pair<Int128, Int128> substitution_sides(std::span<const std::int64_t> x,
                                             std::int64_t v,
                                             Int128 leading_product,
                                             const DeltaPoly& delta);

} // namespace paucity
