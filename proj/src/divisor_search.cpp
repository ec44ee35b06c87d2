#include "paucity/divisor_search.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "paucity/errors.hpp"

namespace paucity {

namespace {

// Positive divisors of |n| in increasing order, by trial division.
std::vector<Int128> positive_divisors(Int128 n) {
    Int128 a = n.abs();
    std::vector<Int128> low, high;
    for (Int128 d = 1; d * d <= a; d += 1) {
        if (!d.divides(a)) continue;
        low.push_back(d);
        Int128 q = a / d;
        if (q != d) high.push_back(q);
    }
    low.insert(low.end(), high.rbegin(), high.rend());
    return low;
}

void positive_tuples_rec(Int128 remaining, int slots,
                         const std::vector<Int128>& divisors,
                         std::vector<Int128>& current,
                         std::vector<FactorTuple>& out) {
    if (slots == 1) {
        current.push_back(remaining);
        out.push_back({current});
        current.pop_back();
        return;
    }
    for (const Int128& d : divisors) {
        if (d > remaining) break;
        if (!d.divides(remaining)) continue;
        current.push_back(d);
        positive_tuples_rec(remaining / d, slots - 1, divisors, current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<FactorTuple> ordered_factorizations(Int128 n, int count) {
    if (n.is_zero()) throw ZeroProductError("zero has no factorization into nonzero parts");
    if (count < 1) throw std::invalid_argument("tuple length must be >= 1");

    std::vector<FactorTuple> positive;
    std::vector<Int128> scratch;
    positive_tuples_rec(n.abs(), count, positive_divisors(n), scratch, positive);

    const bool negative_product = n.signum() < 0;
    std::vector<FactorTuple> out;
    for (unsigned mask = 0; mask < (1u << count); ++mask) {
        bool odd = __builtin_popcount(mask) % 2 == 1;
        if (odd != negative_product) continue;
        for (const FactorTuple& tuple : positive) {
            FactorTuple signedTuple = tuple;
            for (int i = 0; i < count; ++i)
                if (mask & (1u << i)) signedTuple.divisors[static_cast<std::size_t>(i)] =
                    -signedTuple.divisors[static_cast<std::size_t>(i)];
            out.push_back(std::move(signedTuple));
        }
    }
    return out;
}

std::vector<std::pair<Int128, int>> integer_roots_in_range(const Poly& p,
                                                           Int128 lo, Int128 hi) {
    if (p.is_zero())
        throw std::invalid_argument("root scan needs a nonzero polynomial");
    std::vector<std::pair<Int128, int>> roots;
    Poly cur = p;
    for (Int128 t0 = lo; t0 <= hi; t0 += 1) {
        if (cur.degree() < 1) break;
        int mult = 0;
        while (cur.eval(t0).is_zero()) {
            ++mult;
            cur = *cur.deflated(t0);
        }
        if (mult > 0) roots.emplace_back(t0, mult);
    }
    return roots;
}

namespace {

// Ordered tuples of nonzero integers in [lo, hi] with the given product,
// enumerated over the positive-divisor lattice with range pruning.
void in_range_tuples_rec(Int128 remaining, int slots, Int128 lo, Int128 hi,
                         Int128 max_abs, const std::vector<Int128>& divisors,
                         std::vector<Int128>& current,
                         std::vector<FactorTuple>& out) {
    if (remaining.abs() > pow_checked(max_abs, slots)) return;
    if (slots == 1) {
        if (remaining >= lo && remaining <= hi && !remaining.is_zero()) {
            current.push_back(remaining);
            out.push_back({current});
            current.pop_back();
        }
        return;
    }
    for (const Int128& d : divisors) {
        if (d > remaining.abs()) break;
        if (!d.divides(remaining)) continue;
        for (int sign = 0; sign < 2; ++sign) {
            Int128 v = sign == 0 ? d : -d;
            if (v < lo || v > hi) continue;
            current.push_back(v);
            in_range_tuples_rec(remaining / v, slots - 1, lo, hi, max_abs,
                                divisors, current, out);
            current.pop_back();
        }
    }
}

std::vector<FactorTuple> factor_tuples_in_range(Int128 n, int count, Int128 lo,
                                                Int128 hi) {
    Int128 max_abs = std::max((-lo).abs(), hi.abs());
    std::vector<FactorTuple> out;
    if (max_abs.is_zero()) return out;
    if (n.abs() > pow_checked(max_abs, count)) return out;
    std::vector<Int128> divisors = positive_divisors(n);
    std::vector<Int128> scratch;
    in_range_tuples_rec(n, count, lo, hi, max_abs, divisors, scratch, out);
    return out;
}

struct SharedSearchState {
    std::atomic<std::int64_t> next_chunk{0};
    std::mutex merge_mutex;
    std::set<CanonicalPair> found;
    Int128 visited = 0;
    std::exception_ptr first_error;
};

// Candidate pipeline shared by both variants: given the delta polynomial for
// the current lattice point and the verifier, recover solutions for each v.
template <typename Verifier>
void scan_v_values(const Poly& delta, std::int64_t X, int k, Int128 leading_product,
                   Int128 theta_bound, const Verifier& verify,
                   std::set<CanonicalPair>& found, std::size_t max_solutions) {
    for (std::int64_t v = 1; v <= X; ++v) {
        DivisorTarget theta(delta.eval(Int128(-v)), theta_bound);
        if (theta.value.is_zero()) continue;
        if (!leading_product.divides(theta.value)) continue;
        Int128 target = theta.value / leading_product;

        for (const FactorTuple& tuple :
             factor_tuples_in_range(target, k, Int128(1 - v), Int128(X - v))) {
            std::vector<std::int64_t> x;
            x.reserve(static_cast<std::size_t>(k));
            for (const Int128& d : tuple.divisors)
                x.push_back((d + Int128(v)).to_int64());
            std::sort(x.begin(), x.end());

            Poly recovery = poly_from_roots(x).scaled(leading_product) - delta;
            std::optional<Poly> monic = recovery.divided_by(leading_product);
            if (!monic) continue;
            auto roots = integer_roots_in_range(*monic, Int128(-X), Int128(-1));
            int total_mult = 0;
            for (const auto& [root, mult] : roots) total_mult += mult;
            if (total_mult != k) continue;
            std::vector<std::int64_t> y;
            y.reserve(static_cast<std::size_t>(k));
            for (const auto& [root, mult] : roots)
                for (int i = 0; i < mult; ++i) y.push_back((-root).to_int64());
            std::sort(y.begin(), y.end());
            if (!std::binary_search(y.begin(), y.end(), v)) continue;

            CanonicalPair candidate{x, y};
            if (found.contains(candidate)) continue;
            if (!verify(x, y)) continue;
            found.insert(candidate);
            found.insert(CanonicalPair{y, x}); // the mirrored orientation
            if (found.size() > max_solutions)
                throw BudgetError("solution list exceeds the configured cap");
        }
    }
}

void require_budget(Int128 projected, std::uint64_t budget) {
    if (projected > Int128(static_cast<unsigned long long>(budget)))
        throw BudgetError("search lattice exceeds the work budget");
    if (projected > Int128(static_cast<long long>(std::int64_t{1} << 62)))
        throw BudgetError("search lattice too large to index");
}

std::vector<SolutionPair> finish(SharedSearchState& state, SearchStats* stats) {
    if (state.first_error) std::rethrow_exception(state.first_error);
    if (stats) stats->visited_pairs = state.visited;
    return expand_ordered(state.found);
}

} // namespace

std::vector<SolutionPair> divisor_search(const NormalizedSystem& sys, std::int64_t X,
                                         const SearchOptions& options,
                                         SearchStats* stats) {
    if (X < 1) throw std::invalid_argument("X must be >= 1");
    capacity_bound(sys, X);
    const int k = sys.k();
    const auto& free_degrees = sys.free_degrees();
    const std::size_t dims = free_degrees.size();
    const Int128 leading_product = sys.leading_product();

    // |delta(-v)| stays within A (2X)^k (k+1) (1 + sum|b|) on the box.
    Int128 offdiag_sum = 1;
    for (const auto& row : sys.offdiag())
        for (const auto& [l, b] : row) offdiag_sum += b.abs();
    const Int128 theta_bound = leading_product.abs() *
                               pow_checked(Int128(2) * X, k) * Int128(k + 1) *
                               offdiag_sum;

    // Box half-widths 2^k X^l per free degree, and the exact lattice volume.
    std::vector<std::int64_t> half_width(dims);
    Int128 volume = X;
    for (std::size_t m = 0; m < dims; ++m) {
        Int128 bound = pow_checked(2, k) * pow_checked(Int128(X), free_degrees[m]);
        volume *= Int128(2) * bound + Int128(1);
        half_width[m] = bound.to_int64();
    }
    require_budget(volume, options.budget);

    const std::int64_t chunk_count = dims == 0 ? 1 : 2 * half_width[0] + 1;
    SharedSearchState state;
    const int workers = std::clamp(options.workers, 1, 256);

    auto worker = [&]() {
        std::set<CanonicalPair> local_found;
        Int128 local_visited = 0;
        std::vector<Int128> delta_coeffs(static_cast<std::size_t>(k), Int128(0));
        std::vector<std::int64_t> h(dims, 0);

        auto verify = [&](const std::vector<std::int64_t>& x,
                          const std::vector<std::int64_t>& y) {
            if (!check_product_identity(x, y, sys).holds) return false;
            return sys.phi_values(elementary_symmetric(x)) ==
                   sys.phi_values(elementary_symmetric(y));
        };

        auto process_point = [&]() {
            local_visited += X;
            bool zero = true;
            for (std::size_t i = 0; i < delta_coeffs.size(); ++i) {
                delta_coeffs[i] = 0;
                for (std::size_t m = 0; m < dims; ++m)
                    if (h[m] != 0)
                        delta_coeffs[i] +=
                            Int128(h[m]) * sys.delta_basis()[m].coeff(static_cast<int>(i));
                if (!delta_coeffs[i].is_zero()) zero = false;
            }
            if (zero) return;
            Poly delta{std::vector<Int128>(delta_coeffs)};
            scan_v_values(delta, X, k, leading_product, theta_bound, verify,
                          local_found, options.max_solutions);
        };

        try {
            while (true) {
                std::int64_t chunk = state.next_chunk.fetch_add(1, std::memory_order_relaxed);
                if (chunk >= chunk_count) break;
                if (dims == 0) {
                    process_point();
                    continue;
                }
                h[0] = chunk - half_width[0];
                // odometer over the remaining dimensions
                for (std::size_t m = 1; m < dims; ++m) h[m] = -half_width[m];
                while (true) {
                    process_point();
                    std::size_t pos = dims - 1;
                    while (pos >= 1 && h[pos] == half_width[pos]) --pos;
                    if (pos < 1) break;
                    ++h[pos];
                    for (std::size_t m = pos + 1; m < dims; ++m) h[m] = -half_width[m];
                }
            }
            std::scoped_lock lock(state.merge_mutex);
            state.visited += local_visited;
            state.found.merge(local_found);
        } catch (...) {
            std::scoped_lock lock(state.merge_mutex);
            if (!state.first_error) state.first_error = std::current_exception();
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return finish(state, stats);
}

std::vector<SolutionPair> divisor_search(const NonlinearSystem& sys, std::int64_t X,
                                         const SearchOptions& options,
                                         SearchStats* stats) {
    if (X < 1) throw std::invalid_argument("X must be >= 1");
    capacity_bound(sys, X);
    const int k = sys.k();
    const auto& free_degrees = sys.free_degrees();
    const std::size_t dims = free_degrees.size();
    const Int128 leading_product = sys.leading_product();

    // Attainable sigma_l range over [1,X]^k: [C(k,l), C(k,l) X^l].
    std::vector<std::int64_t> range_lo(dims), range_hi(dims);
    Int128 side_volume = 1;
    for (std::size_t m = 0; m < dims; ++m) {
        Int128 lo = binomial(Int128(k), free_degrees[m]);
        Int128 hi = lo * pow_checked(Int128(X), free_degrees[m]);
        side_volume *= hi - lo + Int128(1);
        range_lo[m] = lo.to_int64();
        range_hi[m] = hi.to_int64();
    }
    Int128 volume = side_volume * side_volume * Int128(X);
    require_budget(volume, options.budget);

    // Crude but proven: both delta polynomials obey the capacity analysis,
    // so their difference at |t| <= X stays within the capacity bound.
    const Int128 theta_bound = capacity_bound(sys, X);

    const std::int64_t chunk_count =
        dims == 0 ? 1 : range_hi[0] - range_lo[0] + 1;
    SharedSearchState state;
    const int workers = std::clamp(options.workers, 1, 256);

    auto worker = [&]() {
        std::set<CanonicalPair> local_found;
        Int128 local_visited = 0;
        // lattice point: first the x-side sigma values, then the y-side ones
        std::vector<std::int64_t> point(2 * dims, 0);

        auto verify = [&](const std::vector<std::int64_t>& x,
                          const std::vector<std::int64_t>& y) {
            if (!check_product_identity(x, y, sys).holds) return false;
            return sys.phi_values(elementary_symmetric(x)) ==
                   sys.phi_values(elementary_symmetric(y));
        };

        auto build_delta = [&](std::size_t offset) {
            std::vector<Int128> values;
            values.reserve(dims);
            for (std::size_t m = 0; m < dims; ++m)
                values.push_back(Int128(point[offset + m]));
            FreeValues sigmas(k, X, free_degrees, std::move(values));
            return delta_poly(sys, sigmas).poly;
        };

        auto process_point = [&]() {
            local_visited += X;
            Poly delta = build_delta(0) - build_delta(dims);
            if (delta.is_zero()) return;
            scan_v_values(delta, X, k, leading_product, theta_bound, verify,
                          local_found, options.max_solutions);
        };

        try {
            while (true) {
                std::int64_t chunk = state.next_chunk.fetch_add(1, std::memory_order_relaxed);
                if (chunk >= chunk_count) break;
                if (dims == 0) {
                    process_point();
                    continue;
                }
                point[0] = range_lo[0] + chunk;
                auto lo_of = [&](std::size_t i) { return range_lo[i % dims]; };
                auto hi_of = [&](std::size_t i) { return range_hi[i % dims]; };
                for (std::size_t i = 1; i < 2 * dims; ++i) point[i] = lo_of(i);
                while (true) {
                    process_point();
                    std::size_t pos = 2 * dims - 1;
                    while (pos >= 1 && point[pos] == hi_of(pos)) --pos;
                    if (pos < 1) break;
                    ++point[pos];
                    for (std::size_t i = pos + 1; i < 2 * dims; ++i) point[i] = lo_of(i);
                }
            }
            std::scoped_lock lock(state.merge_mutex);
            state.visited += local_visited;
            state.found.merge(local_found);
        } catch (...) {
            std::scoped_lock lock(state.merge_mutex);
            if (!state.first_error) state.first_error = std::current_exception();
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker);
        for (auto& t : threads) t.join();
    }
    return finish(state, stats);
}

} // namespace paucity
