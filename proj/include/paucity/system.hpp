#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "paucity/poly.hpp"

namespace paucity {

// A system of r <= k equations phi_j(x) = phi_j(y) where each phi_j is an
// integer linear combination of the elementary symmetric functions
// sigma_1..sigma_k of its k arguments. rows[j][l-1] is the coefficient of
// sigma_l in phi_j. Zero rows are pruned at construction.
struct SymmetricSystem {
    SymmetricSystem(int k, std::vector<std::vector<Int128>> coefficient_rows);

    int k = 0;
    std::vector<std::vector<Int128>> rows;
};

// Echelonized form: equation j pins degree k_j with positive leading
// coefficient a_j, and its remaining terms live on the free degrees
//   phi_j = a_j sigma_{k_j} - sum_{l in free, l < k_j} b_{jl} sigma_l.
// The free degrees are {1..k} minus the pinned ones; the weight is their
// sum, which drives how large the enumeration boxes get.
class NormalizedSystem {
public:
    NormalizedSystem(int k, std::vector<int> degrees, std::vector<Int128> leading,
                     std::vector<std::vector<std::pair<int, Int128>>> offdiag);

    int k() const { return k_; }
    int equation_count() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<Int128>& leading() const { return leading_; }
    // Per equation j: sorted (l, b_jl) pairs with l free and l < k_j.
    const std::vector<std::vector<std::pair<int, Int128>>>& offdiag() const {
        return offdiag_;
    }
    const std::vector<int>& free_degrees() const { return free_degrees_; }
    int weight() const { return weight_; }
    // Product of the leading coefficients and its per-equation cofactors.
    Int128 leading_product() const { return leading_product_; }
    const std::vector<Int128>& cofactors() const { return cofactors_; }

    // Basis polynomial attached to free degree index m (aligned with
    // free_degrees()): A t^(k-l) + sum_{k_j > l} c_j b_{jl} t^(k-k_j).
    const std::vector<Poly>& delta_basis() const { return delta_basis_; }

    // Equation values phi_j from a full sigma vector (sigma_0..sigma_k).
    std::vector<Int128> phi_values(const SigmaVector& sigma) const;

    // Coefficient rows of the equivalent SymmetricSystem.
    SymmetricSystem to_symmetric() const;

private:
    int k_;
    std::vector<int> degrees_;
    std::vector<Int128> leading_;
    std::vector<std::vector<std::pair<int, Int128>>> offdiag_;
    std::vector<int> free_degrees_;
    int weight_;
    Int128 leading_product_;
    std::vector<Int128> cofactors_;
    std::vector<Poly> delta_basis_;
};

// Generalization where each equation subtracts an integer polynomial in the
// sigma values at the free degrees:
//   phi_j = a_j sigma_{k_j} - correction_j(sigma_{l_1}, ..., sigma_{l_R}).
struct CorrectionTerm {
    Int128 coeff;
    std::vector<int> exponents; // one per free degree, >= 0
};
using CorrectionPoly = std::vector<CorrectionTerm>;

class NonlinearSystem {
public:
    NonlinearSystem(int k, std::vector<int> degrees, std::vector<Int128> leading,
                    std::vector<CorrectionPoly> corrections);

    int k() const { return k_; }
    int equation_count() const { return static_cast<int>(degrees_.size()); }
    const std::vector<int>& degrees() const { return degrees_; }
    const std::vector<Int128>& leading() const { return leading_; }
    const std::vector<CorrectionPoly>& corrections() const { return corrections_; }
    const std::vector<int>& free_degrees() const { return free_degrees_; }
    int weight() const { return weight_; }
    Int128 leading_product() const { return leading_product_; }
    const std::vector<Int128>& cofactors() const { return cofactors_; }

    // correction_j evaluated term by term at the given free-degree values.
    Int128 correction_value(int j, std::span<const Int128> free_values) const;

    std::vector<Int128> phi_values(const SigmaVector& sigma) const;

private:
    int k_;
    std::vector<int> degrees_;
    std::vector<Int128> leading_;
    std::vector<CorrectionPoly> corrections_;
    std::vector<int> free_degrees_;
    int weight_;
    Int128 leading_product_;
    std::vector<Int128> cofactors_;
};

// Integer row reduction of the reversed coefficient matrix to echelon form.
// Throws DegenerateSystemError when no nonzero rows remain. The solution set
// in every box is preserved (rows are recombined invertibly over Q, then
// made primitive with positive pivot).
NormalizedSystem normalize(const SymmetricSystem& sys);

// Upper bound on the magnitude of any intermediate the enumeration and
// identity machinery can form at box size X. Throws CapacityError when the
// bound reaches 2^120 (or cannot itself be computed exactly).
Int128 capacity_bound(const NormalizedSystem& sys, std::int64_t X);
Int128 capacity_bound(const NonlinearSystem& sys, std::int64_t X);

// System with rows phi_j = sigma_j + sum_{l<=k-r} a[j][l-1] sigma_l for
// j = k-r+1..k; a has r rows of k-r entries (ignored when r == k).
SymmetricSystem corollary_system(int k, int r,
                                 const std::vector<std::vector<Int128>>& a);

// The d simultaneous equations induced by prod(x_i + theta) = prod(y_i + theta)
// for an algebraic integer theta with the given monic minimal polynomial of
// degree d <= k: expand, reduce powers of theta, match basis coefficients.
// Constant terms cancel between the sides and are dropped.
SymmetricSystem theta_system(const Poly& minpoly, int k);

} // namespace paucity
