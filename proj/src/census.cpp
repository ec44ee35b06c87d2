#include "paucity/census.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "paucity/errors.hpp"

namespace paucity {

SolutionClass classify(std::span<const std::int64_t> x,
                       std::span<const std::int64_t> y) {
    std::vector<std::int64_t> sx(x.begin(), x.end());
    std::vector<std::int64_t> sy(y.begin(), y.end());
    std::sort(sx.begin(), sx.end());
    std::sort(sy.begin(), sy.end());
    if (sx == sy) return SolutionClass::Trivial;
    sx.erase(std::unique(sx.begin(), sx.end()), sx.end());
    sy.erase(std::unique(sy.begin(), sy.end()), sy.end());
    return sx == sy ? SolutionClass::PotentiallyDiagonal : SolutionClass::NonDiagonal;
}

const char* to_string(SolutionClass cls) {
    switch (cls) {
        case SolutionClass::Trivial: return "trivial";
        case SolutionClass::PotentiallyDiagonal: return "potentially-diagonal";
        case SolutionClass::NonDiagonal: return "non-diagonal";
    }
    return "?";
}

Int128 permutation_count(std::span<const std::int64_t> sorted_tuple) {
    Int128 count = 1;
    Int128 n = 0;
    std::size_t i = 0;
    while (i < sorted_tuple.size()) {
        std::size_t run = i;
        while (run < sorted_tuple.size() && sorted_tuple[run] == sorted_tuple[i]) ++run;
        // multiply by C(n + run_len, run_len) stepwise: n!/(prod m!) built
        // as a product of binomials stays integral throughout
        for (std::size_t j = 1; j <= run - i; ++j) {
            n += 1;
            count = (count * n).div_exact(Int128(static_cast<long long>(j)));
        }
        i = run;
    }
    return count;
}

std::vector<SolutionPair> expand_ordered(const std::set<CanonicalPair>& canon) {
    std::vector<SolutionPair> out;
    for (const auto& [cx, cy] : canon) {
        SolutionClass cls = classify(cx, cy);
        std::vector<std::int64_t> px = cx;
        do {
            std::vector<std::int64_t> py = cy;
            do {
                out.push_back({px, py, cls});
            } while (std::next_permutation(py.begin(), py.end()));
        } while (std::next_permutation(px.begin(), px.end()));
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

constexpr std::uint64_t kBudgetFlushEvery = 1u << 16;
constexpr std::size_t kPhiTableLimit = std::size_t{1} << 23; // Int128 entries

// Cooperative budget meter shared by the census workers.
class BudgetMeter {
public:
    BudgetMeter(std::uint64_t limit) : limit_(limit) {}

    // Registers `n` units from a worker-local tally. Throws when the
    // global consumption passed the limit.
    void add(std::uint64_t n) {
        std::uint64_t seen = used_.fetch_add(n, std::memory_order_relaxed) + n;
        if (seen > limit_) {
            exceeded_.store(true, std::memory_order_relaxed);
            throw BudgetError("work budget exceeded during enumeration");
        }
        if (exceeded_.load(std::memory_order_relaxed))
            throw BudgetError("work budget exceeded during enumeration");
    }

private:
    std::uint64_t limit_;
    std::atomic<std::uint64_t> used_{0};
    std::atomic<bool> exceeded_{false};
};

void require_budget(Int128 projected, std::uint64_t budget, const char* what) {
    if (projected > Int128(static_cast<unsigned long long>(budget)))
        throw BudgetError(std::string(what) + " exceeds the work budget");
}

// Visits every sorted k-tuple over [lo..X] whose smallest entry is exactly
// `first`; calls fn(tuple).
template <typename Fn>
void for_each_sorted_tuple_from(std::int64_t first, std::int64_t X, int k, Fn&& fn) {
    std::vector<std::int64_t> tuple(static_cast<std::size_t>(k), first);
    // odometer over non-decreasing tuples with fixed first entry
    while (true) {
        fn(std::as_const(tuple));
        int pos = k - 1;
        while (pos >= 1 && tuple[static_cast<std::size_t>(pos)] == X) --pos;
        if (pos < 1) return;
        std::int64_t next = tuple[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < k; ++i) tuple[static_cast<std::size_t>(i)] = next;
    }
}

struct CensusAccumulator {
    Int128 total = 0, trivial = 0, potentially_diagonal = 0, non_diagonal = 0;
    std::set<CanonicalPair> canon;

    void merge(CensusAccumulator&& other) {
        total += other.total;
        trivial += other.trivial;
        potentially_diagonal += other.potentially_diagonal;
        non_diagonal += other.non_diagonal;
        canon.merge(other.canon);
    }
};

template <typename System>
CensusReport brute_census_impl(const System& sys, std::int64_t X,
                               const CensusOptions& options) {
    if (X < 1) throw std::invalid_argument("X must be >= 1");
    capacity_bound(sys, X);
    const int k = sys.k();
    const Int128 box_pairs = pow_checked(Int128(X), 2 * k);
    require_budget(box_pairs, options.budget, "X^(2k)");

    const std::size_t r = static_cast<std::size_t>(sys.equation_count());
    const Int128 y_span = pow_checked(Int128(X), k);

    // Precompute phi(y) for every ordered y when it fits; the inner test
    // then reduces to comparing r values.
    std::vector<Int128> phi_table;
    bool tabled = false;
    if (y_span <= Int128(static_cast<long long>(kPhiTableLimit / r))) {
        std::size_t rows = static_cast<std::size_t>(y_span.to_int64());
        phi_table.reserve(rows * r);
        std::vector<std::int64_t> y(static_cast<std::size_t>(k), 1);
        for (std::size_t rank = 0; rank < rows; ++rank) {
            SigmaVector sigma = elementary_symmetric(y);
            for (const Int128& v : sys.phi_values(sigma)) phi_table.push_back(v);
            int pos = k - 1;
            while (pos >= 0 && y[static_cast<std::size_t>(pos)] == X) {
                y[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos >= 0) ++y[static_cast<std::size_t>(pos)];
        }
        tabled = true;
    }

    BudgetMeter meter(options.budget);
    std::atomic<std::int64_t> next_chunk{1};
    const int workers = std::clamp(options.workers, 1, 256);

    std::vector<CensusAccumulator> results(static_cast<std::size_t>(workers));
    std::exception_ptr first_error;
    std::mutex error_mutex;

    auto worker = [&](int wid) {
        CensusAccumulator& acc = results[static_cast<std::size_t>(wid)];
        std::uint64_t local_units = 0;
        std::vector<std::int64_t> y(static_cast<std::size_t>(k));
        try {
            while (true) {
                std::int64_t first = next_chunk.fetch_add(1, std::memory_order_relaxed);
                if (first > X) break;
                for_each_sorted_tuple_from(first, X, k, [&](const std::vector<std::int64_t>& x) {
                    const Int128 weight = permutation_count(x);
                    const std::vector<Int128> phi_x =
                        sys.phi_values(elementary_symmetric(x));
                    auto handle_match = [&](std::span<const std::int64_t> ymatch) {
                        SolutionClass cls = classify(x, ymatch);
                        acc.total += weight;
                        switch (cls) {
                            case SolutionClass::Trivial: acc.trivial += weight; break;
                            case SolutionClass::PotentiallyDiagonal:
                                acc.potentially_diagonal += weight;
                                break;
                            case SolutionClass::NonDiagonal:
                                acc.non_diagonal += weight;
                                break;
                        }
                        if (options.collect_solutions && cls != SolutionClass::Trivial) {
                            std::vector<std::int64_t> sy(ymatch.begin(), ymatch.end());
                            std::sort(sy.begin(), sy.end());
                            acc.canon.emplace(x, std::move(sy));
                            if (acc.canon.size() > options.max_solutions)
                                throw BudgetError("solution list exceeds the configured cap");
                        }
                    };

                    std::fill(y.begin(), y.end(), std::int64_t{1});
                    if (tabled) {
                        const std::size_t rows = phi_table.size() / r;
                        for (std::size_t rank = 0; rank < rows; ++rank) {
                            const Int128* row = &phi_table[rank * r];
                            bool equal = true;
                            for (std::size_t j = 0; j < r; ++j)
                                if (!(row[j] == phi_x[j])) {
                                    equal = false;
                                    break;
                                }
                            if (equal) handle_match(y);
                            if (++local_units == kBudgetFlushEvery) {
                                meter.add(local_units);
                                local_units = 0;
                            }
                            int pos = k - 1;
                            while (pos >= 0 && y[static_cast<std::size_t>(pos)] == X) {
                                y[static_cast<std::size_t>(pos)] = 1;
                                --pos;
                            }
                            if (pos >= 0) ++y[static_cast<std::size_t>(pos)];
                        }
                    } else {
                        Int128 remaining = y_span;
                        while (remaining > Int128(0)) {
                            SigmaVector sigma = elementary_symmetric(y);
                            std::vector<Int128> phi_y = sys.phi_values(sigma);
                            if (phi_y == phi_x) handle_match(y);
                            if (++local_units == kBudgetFlushEvery) {
                                meter.add(local_units);
                                local_units = 0;
                            }
                            remaining -= 1;
                            int pos = k - 1;
                            while (pos >= 0 && y[static_cast<std::size_t>(pos)] == X) {
                                y[static_cast<std::size_t>(pos)] = 1;
                                --pos;
                            }
                            if (pos >= 0) ++y[static_cast<std::size_t>(pos)];
                        }
                    }
                });
            }
            meter.add(local_units);
        } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    };

    if (workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) threads.emplace_back(worker, w);
        for (auto& t : threads) t.join();
    }
    if (first_error) std::rethrow_exception(first_error);

    CensusAccumulator merged;
    for (auto& acc : results) merged.merge(std::move(acc));

    CensusReport report;
    report.box = X;
    report.total = merged.total;
    report.trivial = merged.trivial;
    report.potentially_diagonal = merged.potentially_diagonal;
    report.non_diagonal = merged.non_diagonal;
    report.collected = options.collect_solutions;
    if (options.collect_solutions) report.nontrivial = expand_ordered(merged.canon);
    return report;
}

// Enumerates compositions of k into `parts` positive parts.
template <typename Fn>
void for_each_composition(int k, int parts, std::vector<int>& current, Fn&& fn) {
    if (parts == 1) {
        if (k >= 1) {
            current.push_back(k);
            fn(std::as_const(current));
            current.pop_back();
        }
        return;
    }
    for (int first = 1; first + (parts - 1) <= k; ++first) {
        current.push_back(first);
        for_each_composition(k - first, parts - 1, current, fn);
        current.pop_back();
    }
}

template <typename System>
PotentiallyDiagonalSweep potentially_diagonal_sweep_impl(const System& sys,
                                                         std::int64_t X,
                                                         const CensusOptions& options) {
    if (X < 1) throw std::invalid_argument("X must be >= 1");
    capacity_bound(sys, X);
    const int k = sys.k();

    PotentiallyDiagonalSweep sweep;
    sweep.count = 0;
    std::uint64_t local_units = 0;
    BudgetMeter meter(options.budget);

    // support = sorted distinct values; multisets sharing it are assignments
    // of a composition of k to those values
    std::vector<std::int64_t> support;
    auto visit_supports = [&](auto&& self, std::int64_t next_min, int size_left) -> void {
        if (size_left == 0) {
            const int s = static_cast<int>(support.size());
            std::vector<std::vector<std::int64_t>> multisets;
            std::vector<int> comp;
            for_each_composition(k, s, comp, [&](const std::vector<int>& parts) {
                std::vector<std::int64_t> tuple;
                for (int i = 0; i < s; ++i)
                    tuple.insert(tuple.end(), static_cast<std::size_t>(parts[static_cast<std::size_t>(i)]),
                                 support[static_cast<std::size_t>(i)]);
                multisets.push_back(std::move(tuple));
            });
            std::vector<std::vector<Int128>> values;
            values.reserve(multisets.size());
            for (const auto& tuple : multisets)
                values.push_back(sys.phi_values(elementary_symmetric(tuple)));
            for (std::size_t a = 0; a < multisets.size(); ++a) {
                for (std::size_t b = 0; b < multisets.size(); ++b) {
                    if (a == b) continue;
                    if (++local_units == kBudgetFlushEvery) {
                        meter.add(local_units);
                        local_units = 0;
                    }
                    if (values[a] != values[b]) continue;
                    sweep.count += permutation_count(multisets[a]) *
                                   permutation_count(multisets[b]);
                    sweep.pairs.emplace(multisets[a], multisets[b]);
                    if (sweep.pairs.size() > options.max_solutions)
                        throw BudgetError("solution list exceeds the configured cap");
                }
            }
            return;
        }
        for (std::int64_t v = next_min; v + size_left - 1 <= X; ++v) {
            support.push_back(v);
            self(self, v + 1, size_left - 1);
            support.pop_back();
        }
    };
    for (int s = 2; s <= k; ++s) visit_supports(visit_supports, 1, s);
    meter.add(local_units);
    return sweep;
}

} // namespace

CensusReport brute_census(const NormalizedSystem& sys, std::int64_t X,
                          const CensusOptions& options) {
    return brute_census_impl(sys, X, options);
}

CensusReport brute_census(const NonlinearSystem& sys, std::int64_t X,
                          const CensusOptions& options) {
    return brute_census_impl(sys, X, options);
}

PotentiallyDiagonalSweep potentially_diagonal_sweep(const NormalizedSystem& sys,
                                                    std::int64_t X,
                                                    const CensusOptions& options) {
    return potentially_diagonal_sweep_impl(sys, X, options);
}

PotentiallyDiagonalSweep potentially_diagonal_sweep(const NonlinearSystem& sys,
                                                    std::int64_t X,
                                                    const CensusOptions& options) {
    return potentially_diagonal_sweep_impl(sys, X, options);
}

Int128 count_trivial_exact(int k, std::int64_t X) {
    if (k < 1 || k > 16) throw std::invalid_argument("k must lie in [1,16]");
    if (X < 1) throw std::invalid_argument("X must be >= 1");
    Int128 total = 0;
    for (int s = 1; s <= k; ++s) {
        Int128 supports = binomial(Int128(X), s);
        if (supports.is_zero()) continue;
        Int128 inner = 0;
        std::vector<int> comp;
        for_each_composition(k, s, comp, [&](const std::vector<int>& parts) {
            // multinomial k!/(m_1!...m_s!)
            Int128 ways = 1;
            Int128 n = 0;
            for (int part : parts)
                for (int j = 1; j <= part; ++j) {
                    n += 1;
                    ways = (ways * n).div_exact(Int128(j));
                }
            inner += ways * ways;
        });
        total += supports * inner;
    }
    return total;
}

SolutionPair product_parametrized_solution(
    const std::vector<std::vector<std::int64_t>>& m) {
    const std::size_t k = m.size();
    if (k == 0) throw std::invalid_argument("matrix must be nonempty");
    for (const auto& row : m) {
        if (row.size() != k) throw std::invalid_argument("matrix must be square");
        for (std::int64_t v : row)
            if (v < 1) throw std::invalid_argument("matrix entries must be >= 1");
    }
    std::vector<std::int64_t> x, y;
    for (std::size_t i = 0; i < k; ++i) {
        Int128 rowprod = 1, colprod = 1;
        for (std::size_t j = 0; j < k; ++j) {
            rowprod *= Int128(m[i][j]);
            colprod *= Int128(m[j][i]);
        }
        x.push_back(rowprod.to_int64());
        y.push_back(colprod.to_int64());
    }
    SolutionClass cls = classify(x, y);
    return {std::move(x), std::move(y), cls};
}

FitResult exponent_fit(const std::vector<std::pair<std::int64_t, Int128>>& points) {
    std::int64_t prev = 0;
    for (const auto& [X, count] : points) {
        if (X <= prev)
            throw std::invalid_argument("X values must be strictly increasing");
        if (count < Int128(0)) throw std::invalid_argument("counts must be >= 0");
        prev = X;
    }
    std::vector<std::pair<double, double>> logs;
    FitResult fit;
    for (const auto& [X, count] : points) {
        if (count.is_zero()) {
            ++fit.dropped_zeros;
            continue;
        }
        logs.emplace_back(std::log(static_cast<double>(X)),
                          std::log(count.approx_double()));
    }
    if (logs.size() < 2)
        throw InsufficientDataError("need at least two nonzero points to fit");
    double mx = 0, my = 0;
    for (const auto& [lx, ly] : logs) {
        mx += lx;
        my += ly;
    }
    mx /= static_cast<double>(logs.size());
    my /= static_cast<double>(logs.size());
    double num = 0, den = 0;
    for (const auto& [lx, ly] : logs) {
        num += (lx - mx) * (ly - my);
        den += (lx - mx) * (lx - mx);
    }
    fit.slope = num / den;
    fit.used_points = static_cast<int>(logs.size());
    return fit;
}

} // namespace paucity
