#include "paucity/system.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "paucity/errors.hpp"

namespace paucity {

namespace {

void check_k(int k) {
    if (k < 1 || k > 16)
        throw std::invalid_argument("k must lie in [1,16]");
}

bool all_zero(const std::vector<Int128>& row) {
    return std::all_of(row.begin(), row.end(),
                       [](const Int128& v) { return v.is_zero(); });
}

// Divide a row by the gcd of its entries and make its first nonzero entry
// (the pivot, once in echelon form) positive. No-op on zero rows.
void make_primitive(std::vector<Int128>& row) {
    Int128 g = 0;
    for (const Int128& v : row) g = gcd(g, v);
    if (g.is_zero()) return;
    for (const Int128& v : row) {
        if (v.is_zero()) continue;
        if (v.signum() < 0) g = -g;
        break;
    }
    for (Int128& v : row) v = v / g;
}

} // namespace

SymmetricSystem::SymmetricSystem(int kk, std::vector<std::vector<Int128>> coefficient_rows)
    : k(kk) {
    check_k(k);
    for (auto& row : coefficient_rows) {
        if (static_cast<int>(row.size()) != k)
            throw std::invalid_argument("system row length must equal k");
        if (!all_zero(row)) rows.push_back(std::move(row));
    }
    if (static_cast<int>(rows.size()) > k)
        throw std::invalid_argument("more independent rows than variables");
}

NormalizedSystem::NormalizedSystem(
    int k, std::vector<int> degrees, std::vector<Int128> leading,
    std::vector<std::vector<std::pair<int, Int128>>> offdiag)
    : k_(k),
      degrees_(std::move(degrees)),
      leading_(std::move(leading)),
      offdiag_(std::move(offdiag)) {
    check_k(k_);
    const std::size_t r = degrees_.size();
    if (r == 0) throw std::invalid_argument("normalized system needs equations");
    if (leading_.size() != r || offdiag_.size() != r)
        throw std::invalid_argument("normalized system field sizes disagree");

    std::vector<bool> pinned(static_cast<std::size_t>(k_) + 1, false);
    int prev = 0;
    for (int d : degrees_) {
        if (d <= prev || d > k_)
            throw std::invalid_argument("degrees must be strictly increasing in [1,k]");
        prev = d;
        pinned[static_cast<std::size_t>(d)] = true;
    }
    weight_ = 0;
    for (int l = 1; l <= k_; ++l)
        if (!pinned[static_cast<std::size_t>(l)]) {
            free_degrees_.push_back(l);
            weight_ += l;
        }

    leading_product_ = 1;
    for (std::size_t j = 0; j < r; ++j) {
        if (leading_[j].is_zero())
            throw std::invalid_argument("leading coefficient must be nonzero");
        leading_product_ *= leading_[j];
    }
    cofactors_.reserve(r);
    for (std::size_t j = 0; j < r; ++j)
        cofactors_.push_back(leading_product_.div_exact(leading_[j]));

    for (std::size_t j = 0; j < r; ++j) {
        auto& terms = offdiag_[j];
        std::sort(terms.begin(), terms.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (const auto& [l, b] : terms) {
            if (b.is_zero()) continue;
            bool is_free = std::binary_search(free_degrees_.begin(),
                                              free_degrees_.end(), l);
            if (!is_free || l >= degrees_[j])
                throw std::invalid_argument(
                    "off-diagonal term must sit on a free degree below the pinned one");
        }
        std::erase_if(terms, [](const auto& t) { return t.second.is_zero(); });
    }

    // Basis polynomial for free degree l:
    //   A t^(k-l) + sum over equations with k_j > l of c_j b_{jl} t^(k-k_j)
    for (int l : free_degrees_) {
        Poly basis = Poly::monomial(leading_product_, k_ - l);
        for (std::size_t j = 0; j < r; ++j) {
            if (degrees_[j] <= l) continue;
            for (const auto& [bl, bv] : offdiag_[j])
                if (bl == l)
                    basis = basis + Poly::monomial(cofactors_[j] * bv, k_ - degrees_[j]);
        }
        delta_basis_.push_back(std::move(basis));
    }
}

std::vector<Int128> NormalizedSystem::phi_values(const SigmaVector& sigma) const {
    std::vector<Int128> out;
    out.reserve(degrees_.size());
    for (std::size_t j = 0; j < degrees_.size(); ++j) {
        Int128 v = leading_[j] * sigma[static_cast<std::size_t>(degrees_[j])];
        for (const auto& [l, b] : offdiag_[j])
            v -= b * sigma[static_cast<std::size_t>(l)];
        out.push_back(v);
    }
    return out;
}

SymmetricSystem NormalizedSystem::to_symmetric() const {
    std::vector<std::vector<Int128>> rows(degrees_.size(),
                                          std::vector<Int128>(k_, Int128(0)));
    for (std::size_t j = 0; j < degrees_.size(); ++j) {
        rows[j][static_cast<std::size_t>(degrees_[j]) - 1] = leading_[j];
        for (const auto& [l, b] : offdiag_[j])
            rows[j][static_cast<std::size_t>(l) - 1] = -b;
    }
    return SymmetricSystem(k_, std::move(rows));
}

NonlinearSystem::NonlinearSystem(int k, std::vector<int> degrees,
                                 std::vector<Int128> leading,
                                 std::vector<CorrectionPoly> corrections)
    : k_(k),
      degrees_(std::move(degrees)),
      leading_(std::move(leading)),
      corrections_(std::move(corrections)) {
    check_k(k_);
    const std::size_t r = degrees_.size();
    if (r == 0) throw std::invalid_argument("system needs equations");
    if (leading_.size() != r || corrections_.size() != r)
        throw std::invalid_argument("system field sizes disagree");

    std::vector<bool> pinned(static_cast<std::size_t>(k_) + 1, false);
    int prev = 0;
    for (int d : degrees_) {
        if (d <= prev || d > k_)
            throw std::invalid_argument("degrees must be strictly increasing in [1,k]");
        prev = d;
        pinned[static_cast<std::size_t>(d)] = true;
    }
    weight_ = 0;
    for (int l = 1; l <= k_; ++l)
        if (!pinned[static_cast<std::size_t>(l)]) {
            free_degrees_.push_back(l);
            weight_ += l;
        }

    leading_product_ = 1;
    for (std::size_t j = 0; j < r; ++j) {
        if (leading_[j].is_zero())
            throw std::invalid_argument("leading coefficient must be nonzero");
        leading_product_ *= leading_[j];
    }
    cofactors_.reserve(r);
    for (std::size_t j = 0; j < r; ++j)
        cofactors_.push_back(leading_product_.div_exact(leading_[j]));

    for (auto& poly : corrections_) {
        for (const auto& term : poly) {
            if (term.exponents.size() != free_degrees_.size())
                throw std::invalid_argument(
                    "correction exponent vector length must match the free degrees");
            for (int e : term.exponents)
                if (e < 0)
                    throw std::invalid_argument("correction exponents must be >= 0");
        }
        std::erase_if(poly, [](const CorrectionTerm& t) { return t.coeff.is_zero(); });
    }
}

Int128 NonlinearSystem::correction_value(int j, std::span<const Int128> free_values) const {
    Int128 total = 0;
    for (const CorrectionTerm& term : corrections_[static_cast<std::size_t>(j)]) {
        Int128 v = term.coeff;
        for (std::size_t m = 0; m < term.exponents.size(); ++m)
            v *= pow_checked(free_values[m], term.exponents[m]);
        total += v;
    }
    return total;
}

std::vector<Int128> NonlinearSystem::phi_values(const SigmaVector& sigma) const {
    std::vector<Int128> free_vals;
    free_vals.reserve(free_degrees_.size());
    for (int l : free_degrees_) free_vals.push_back(sigma[static_cast<std::size_t>(l)]);
    std::vector<Int128> out;
    out.reserve(degrees_.size());
    for (std::size_t j = 0; j < degrees_.size(); ++j) {
        Int128 v = leading_[j] * sigma[static_cast<std::size_t>(degrees_[j])];
        v -= correction_value(static_cast<int>(j), free_vals);
        out.push_back(v);
    }
    return out;
}

NormalizedSystem normalize(const SymmetricSystem& sys) {
    if (sys.rows.empty())
        throw DegenerateSystemError("system has no nonzero rows");
    const int k = sys.k;
    const std::size_t r = sys.rows.size();

    // Reversed matrix: column c holds the coefficient of sigma_(k-c), so
    // echelon form pins the highest remaining degree first.
    std::vector<std::vector<Int128>> m(r, std::vector<Int128>(static_cast<std::size_t>(k)));
    for (std::size_t j = 0; j < r; ++j)
        for (int c = 0; c < k; ++c)
            m[j][static_cast<std::size_t>(c)] =
                sys.rows[j][static_cast<std::size_t>(k - 1 - c)];

    std::size_t pivot_rows = 0;
    std::vector<int> pivot_cols;
    for (int col = 0; col < k && pivot_rows < r; ++col) {
        // smallest nonzero magnitude in this column keeps growth down
        std::size_t best = r;
        for (std::size_t i = pivot_rows; i < r; ++i) {
            const Int128& v = m[i][static_cast<std::size_t>(col)];
            if (v.is_zero()) continue;
            if (best == r ||
                v.abs() < m[best][static_cast<std::size_t>(col)].abs())
                best = i;
        }
        if (best == r) continue;
        std::swap(m[pivot_rows], m[best]);

        const std::size_t pc = static_cast<std::size_t>(col);
        make_primitive(m[pivot_rows]); // positive pivot before cross-scaling
        for (std::size_t i = 0; i < r; ++i) {
            if (i == pivot_rows || m[i][pc].is_zero()) continue;
            Int128 p = m[pivot_rows][pc];
            Int128 q = m[i][pc];
            Int128 g = gcd(p, q);
            Int128 mi = p / g, mp = q / g;
            for (int c = 0; c < k; ++c) {
                auto cc = static_cast<std::size_t>(c);
                m[i][cc] = mi * m[i][cc] - mp * m[pivot_rows][cc];
            }
            make_primitive(m[i]);
        }
        pivot_cols.push_back(col);
        ++pivot_rows;
    }

    if (pivot_rows == 0)
        throw DegenerateSystemError("system reduced to nothing");

    // Pivot rows carry decreasing degrees; emit them ascending.
    std::vector<int> degrees;
    std::vector<Int128> leading;
    std::vector<std::vector<std::pair<int, Int128>>> offdiag;
    for (std::size_t j = pivot_rows; j-- > 0;) {
        int col = pivot_cols[j];
        degrees.push_back(k - col);
        leading.push_back(m[j][static_cast<std::size_t>(col)]);
        std::vector<std::pair<int, Int128>> terms;
        for (int c = col + 1; c < k; ++c) {
            const Int128& v = m[j][static_cast<std::size_t>(c)];
            if (!v.is_zero()) terms.emplace_back(k - c, -v);
        }
        offdiag.push_back(std::move(terms));
    }
    return NormalizedSystem(k, std::move(degrees), std::move(leading),
                            std::move(offdiag));
}

namespace {

constexpr std::int64_t kCapacityBits = 120;

Int128 capacity_limit() { return pow_checked(2, kCapacityBits); }

Int128 guard(Int128 bound) {
    if (bound >= capacity_limit())
        throw CapacityError("worst-case intermediate bound reaches 2^120; shrink X or k");
    return bound;
}

} // namespace

Int128 capacity_bound(const NormalizedSystem& sys, std::int64_t X) {
    if (X < 1) throw std::invalid_argument("X must be >= 1");
    try {
        const int k = sys.k();
        Int128 scale = 1; // 1 + sum |b_jl|
        for (const auto& row : sys.offdiag())
            for (const auto& [l, b] : row) scale += b.abs();
        Int128 bound = sys.leading_product().abs() * scale * Int128(k + 1);
        bound *= pow_checked(Int128(2) * X, k);
        bound *= pow_checked(Int128(4) * X, k);
        return guard(bound);
    } catch (const OverflowError&) {
        throw CapacityError("capacity bound itself overflows 128 bits");
    }
}

Int128 capacity_bound(const NonlinearSystem& sys, std::int64_t X) {
    if (X < 1) throw std::invalid_argument("X must be >= 1");
    try {
        const int k = sys.k();
        // Bound each correction term with sigma_l <= 2^k X^l.
        Int128 correction_sum = 0;
        for (const auto& poly : sys.corrections()) {
            for (const CorrectionTerm& term : poly) {
                Int128 v = term.coeff.abs();
                for (std::size_t mIdx = 0; mIdx < term.exponents.size(); ++mIdx) {
                    int l = sys.free_degrees()[mIdx];
                    Int128 box = pow_checked(2, k) * pow_checked(X, l);
                    v *= pow_checked(box, term.exponents[mIdx]);
                }
                correction_sum += v;
            }
        }
        Int128 per_coeff = pow_checked(Int128(2) * X, k) + correction_sum;
        Int128 bound = sys.leading_product().abs() * per_coeff * Int128(k + 1);
        bound *= pow_checked(2, k);
        bound *= pow_checked(Int128(2) * X, k);
        return guard(bound);
    } catch (const OverflowError&) {
        throw CapacityError("capacity bound itself overflows 128 bits");
    }
}

SymmetricSystem corollary_system(int k, int r,
                                 const std::vector<std::vector<Int128>>& a) {
    check_k(k);
    if (r < 1 || r > k) throw std::invalid_argument("need 1 <= r <= k");
    const int width = k - r;
    if (width > 0) {
        if (static_cast<int>(a.size()) != r)
            throw std::invalid_argument("coefficient matrix needs r rows");
        for (const auto& row : a)
            if (static_cast<int>(row.size()) != width)
                throw std::invalid_argument("coefficient rows need k-r entries");
    }
    std::vector<std::vector<Int128>> rows;
    for (int j = k - r + 1; j <= k; ++j) {
        std::vector<Int128> row(static_cast<std::size_t>(k), Int128(0));
        row[static_cast<std::size_t>(j) - 1] = 1;
        for (int l = 1; l <= width; ++l)
            row[static_cast<std::size_t>(l) - 1] =
                a[static_cast<std::size_t>(j - (k - r + 1))][static_cast<std::size_t>(l) - 1];
        rows.push_back(std::move(row));
    }
    return SymmetricSystem(k, std::move(rows));
}

SymmetricSystem theta_system(const Poly& minpoly, int k) {
    check_k(k);
    const int d = minpoly.degree();
    if (d < 1 || d > k)
        throw std::invalid_argument("minimal polynomial degree must lie in [1,k]");
    if (!(minpoly.leading() == Int128(1)))
        throw InvalidMinpolyError("minimal polynomial must be monic");

    // residues[m][b] = coefficient of theta^b in theta^m reduced mod minpoly
    std::vector<std::vector<Int128>> residues;
    std::vector<Int128> cur(static_cast<std::size_t>(d), Int128(0));
    cur[0] = 1;
    residues.push_back(cur);
    for (int m = 1; m <= k; ++m) {
        std::vector<Int128> next(static_cast<std::size_t>(d), Int128(0));
        for (int b = 0; b + 1 < d; ++b) next[static_cast<std::size_t>(b) + 1] = cur[static_cast<std::size_t>(b)];
        Int128 spill = cur[static_cast<std::size_t>(d) - 1];
        if (!spill.is_zero())
            for (int b = 0; b < d; ++b)
                next[static_cast<std::size_t>(b)] -= spill * minpoly.coeff(b);
        cur = next;
        residues.push_back(cur);
    }

    // Matching theta^b coefficients of sum_l sigma_l theta^(k-l); the sigma_0
    // contribution is constant on both sides and drops out.
    std::vector<std::vector<Int128>> rows(static_cast<std::size_t>(d),
                                          std::vector<Int128>(static_cast<std::size_t>(k), Int128(0)));
    for (int b = 0; b < d; ++b)
        for (int l = 1; l <= k; ++l)
            rows[static_cast<std::size_t>(b)][static_cast<std::size_t>(l) - 1] =
                residues[static_cast<std::size_t>(k - l)][static_cast<std::size_t>(b)];
    return SymmetricSystem(k, std::move(rows));
}

} // namespace paucity
