// Acceptance suite: runs each top-level criterion end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>
#include <vector>

#include "paucity/census.hpp"
#include "paucity/cli.hpp"
#include "paucity/delta.hpp"
#include "paucity/divisor_search.hpp"
#include "paucity/io.hpp"
#include "paucity/rng.hpp"
#include "paucity/system.hpp"
#include "paucity/testgen.hpp"

using namespace paucity;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;
std::vector<std::string> notes;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void report(int index, const std::string& name, bool pass, double elapsed,
            double limit) {
    bool in_time = limit <= 0.0 || elapsed <= limit;
    bool ok = pass && in_time;
    std::printf("[%s] criterion %d: %s (%.1f s%s)\n", ok ? "PASS" : "FAIL", index,
                name.c_str(), elapsed,
                in_time ? "" : ", over the runtime limit");
    for (const std::string& note : notes) std::printf("        %s\n", note.c_str());
    notes.clear();
    if (!ok) ++failures;
}

int search_workers() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(8u, hw == 0 ? 1u : hw));
}

NormalizedSystem product2() { return NormalizedSystem(2, {2}, {1}, {{}}); }
NormalizedSystem sigma23() { return NormalizedSystem(3, {2, 3}, {1, 1}, {{}, {}}); }

std::vector<SolutionPair> non_diagonal_only(const std::vector<SolutionPair>& pairs) {
    std::vector<SolutionPair> out;
    for (const SolutionPair& p : pairs)
        if (p.cls == SolutionClass::NonDiagonal) out.push_back(p);
    return out;
}

// Every ordered solution pair of sys in [1,X]^(2k): the trivial ones are the
// permutation orbits of each multiset, the rest come from the census list.
template <typename System, typename Fn>
bool for_each_ordered_solution(const System& sys, std::int64_t X, Fn&& fn) {
    CensusReport report = brute_census(sys, X);
    bool ok = true;
    for (const SolutionPair& p : report.nontrivial) ok = ok && fn(p.x, p.y);
    const int k = sys.k();
    std::vector<std::int64_t> m(static_cast<std::size_t>(k), 1);
    while (true) {
        std::vector<std::int64_t> px = m;
        do {
            std::vector<std::int64_t> py = m;
            do {
                ok = ok && fn(px, py);
            } while (std::next_permutation(py.begin(), py.end()));
        } while (std::next_permutation(px.begin(), px.end()));
        // next non-decreasing multiset
        int pos = k - 1;
        while (pos >= 0 && m[static_cast<std::size_t>(pos)] == X) --pos;
        if (pos < 0) break;
        std::int64_t next = m[static_cast<std::size_t>(pos)] + 1;
        for (int i = pos; i < k; ++i) m[static_cast<std::size_t>(i)] = next;
    }
    return ok;
}

// --------------------------------------------------------------- criterion 1

void criterion_identity_suite() {
    auto start = Clock::now();
    bool ok = true;

    SplitMix64 rng(2026);
    for (int i = 0; i < 1000 && ok; ++i) {
        int k = static_cast<int>(rng.range(1, 8));
        auto z = random_tuple(rng, k, -50, 50);
        SigmaVector sigma = elementary_symmetric(z);
        Poly p = poly_from_roots(z);
        for (int j = 0; j <= k; ++j)
            if (!(p.coeff(k - j) == sigma[static_cast<std::size_t>(j)])) ok = false;
        if (!ok) notes.push_back("generating identity failed");
    }

    for (int s = 0; s < 20 && ok; ++s) {
        NormalizedSystem norm = normalize(random_linear_system(rng, 2, 4));
        bool sys_ok = for_each_ordered_solution(norm, 8, [&](const auto& x, const auto& y) {
            if (!check_product_identity(x, y, norm).holds) return false;
            DeltaPoly delta = delta_poly(norm, sigma_deltas(x, y, norm));
            for (std::int64_t v : y) {
                auto [lhs, rhs] = substitution_sides(x, v, norm.leading_product(), delta);
                if (!(lhs == rhs)) return false;
            }
            return true;
        });
        if (!sys_ok) {
            notes.push_back("identity or substitution failed on system " + std::to_string(s));
            ok = false;
        }
    }

    report(1, "identity suite", ok, seconds_since(start), 60.0);
}

// --------------------------------------------------------------- criterion 2

void criterion_classification() {
    auto start = Clock::now();
    bool ok = true;

    // naive multiset oracle re-derives the regression values
    auto naive_trivial = [](int k, std::int64_t X) {
        std::vector<std::vector<std::int64_t>> tuples;
        std::vector<std::int64_t> z(static_cast<std::size_t>(k), 1);
        while (true) {
            auto sorted = z;
            std::sort(sorted.begin(), sorted.end());
            tuples.push_back(sorted);
            int pos = k - 1;
            while (pos >= 0 && z[static_cast<std::size_t>(pos)] == X) {
                z[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++z[static_cast<std::size_t>(pos)];
        }
        Int128 pairs = 0;
        for (const auto& a : tuples)
            for (const auto& b : tuples)
                if (a == b) pairs += 1;
        return pairs;
    };
    if (!(naive_trivial(2, 10) == Int128(190))) {
        notes.push_back("naive oracle disagrees with T_2(10)=190");
        ok = false;
    }
    if (!(naive_trivial(3, 5) == Int128(545))) {
        notes.push_back("naive oracle disagrees with T_3(5)=545");
        ok = false;
    }
    if (!(count_trivial_exact(2, 10) == Int128(190)) ||
        !(count_trivial_exact(3, 5) == Int128(545))) {
        notes.push_back("closed form disagrees with the regression values");
        ok = false;
    }

    SplitMix64 rng(2027);
    for (int k = 1; k <= 4 && ok; ++k) {
        NormalizedSystem norm = k == 1 ? NormalizedSystem(1, {1}, {1}, {{}})
                                       : normalize(random_linear_system(rng, k, k));
        for (std::int64_t X = 1; X <= 8; ++X) {
            CensusReport report = brute_census(norm, X);
            if (!(report.total == report.trivial + report.potentially_diagonal +
                                      report.non_diagonal)) {
                notes.push_back("decomposition N = T + T* + Tdagger failed");
                ok = false;
            }
            if (!(report.trivial == count_trivial_exact(k, X))) {
                notes.push_back("census trivial count differs from the closed form at k=" +
                                std::to_string(k) + " X=" + std::to_string(X));
                ok = false;
            }
        }
    }

    report(2, "classification decomposition", ok, seconds_since(start), 0.0);
}

// --------------------------------------------------------------- criterion 3

void criterion_oracle_equivalence() {
    auto start = Clock::now();
    bool ok = true;
    SearchOptions search;
    search.workers = search_workers();
    CensusOptions census;
    census.workers = search.workers;

    auto agree = [&](const NormalizedSystem& sys, std::int64_t X) {
        auto brute = non_diagonal_only(brute_census(sys, X, census).nontrivial);
        auto divisor = divisor_search(sys, X, search);
        return brute == divisor;
    };

    for (std::int64_t X = 1; X <= 30 && ok; ++X) {
        if (!agree(product2(), X)) {
            notes.push_back("product system disagreement at X=" + std::to_string(X));
            ok = false;
        }
        if (X == 6) {
            auto pairs = divisor_search(product2(), 6, search);
            if (pairs.size() != 20) {
                notes.push_back("expected 20 non-diagonal pairs at X=6");
                ok = false;
            }
        }
    }
    for (std::int64_t X = 1; X <= 12 && ok; ++X)
        if (!agree(sigma23(), X)) {
            notes.push_back("sigma_2/sigma_3 disagreement at X=" + std::to_string(X));
            ok = false;
        }
    NormalizedSystem gauss = normalize(theta_system(Poly{1, 0, 1}, 4));
    for (std::int64_t X = 1; X <= 6 && ok; ++X)
        if (!agree(gauss, X)) {
            notes.push_back("gaussian system disagreement at X=" + std::to_string(X));
            ok = false;
        }
    SplitMix64 rng(2028);
    for (int s = 0; s < 10 && ok; ++s) {
        std::vector<std::vector<Int128>> a(2, std::vector<Int128>(2));
        for (auto& row : a)
            for (auto& v : row) v = Int128(static_cast<long long>(rng.range(-3, 3)));
        NormalizedSystem norm = normalize(corollary_system(4, 2, a));
        for (std::int64_t X = 1; X <= 8 && ok; ++X)
            if (!agree(norm, X)) {
                notes.push_back("random corollary system " + std::to_string(s) +
                                " disagreement at X=" + std::to_string(X));
                ok = false;
            }
    }

    report(3, "oracle equivalence", ok, seconds_since(start), 600.0);
}

// --------------------------------------------------------------- criterion 4

void criterion_generators() {
    auto start = Clock::now();
    bool ok = true;

    SymmetricSystem gauss = theta_system(Poly{1, 0, 1}, 4);
    if (gauss.rows.size() != 2 ||
        gauss.rows[0] != std::vector<Int128>{0, -1, 0, 1} ||
        gauss.rows[1] != std::vector<Int128>{-1, 0, 1, 0}) {
        notes.push_back("theta system rows differ from the reference system");
        ok = false;
    }

    SplitMix64 rng(2029);
    for (int k = 1; k <= 6 && ok; ++k)
        for (int r = 1; r <= k && ok; ++r) {
            std::vector<std::vector<Int128>> a(
                static_cast<std::size_t>(r),
                std::vector<Int128>(static_cast<std::size_t>(k - r)));
            for (auto& row : a)
                for (auto& v : row) v = Int128(static_cast<long long>(rng.range(-3, 3)));
            NormalizedSystem norm = normalize(corollary_system(k, r, a));
            if (norm.weight() != (k - r) * (k - r + 1) / 2) {
                notes.push_back("corollary weight wrong at k=" + std::to_string(k) +
                                " r=" + std::to_string(r));
                ok = false;
            }
        }

    report(4, "generator fidelity", ok, seconds_since(start), 0.0);
}

// --------------------------------------------------------------- criterion 5

void criterion_nonlinear() {
    auto start = Clock::now();
    bool ok = true;

    CorrectionPoly square{{Int128(1), {2}}};
    NonlinearSystem sys(3, {2, 3}, {1, 1}, {square, {}});

    bool identity_ok = for_each_ordered_solution(sys, 10, [&](const auto& x, const auto& y) {
        return check_product_identity(x, y, sys).holds;
    });
    if (!identity_ok) {
        notes.push_back("nonlinear identity failed on a solution");
        ok = false;
    }

    SearchOptions search;
    search.workers = search_workers();
    for (std::int64_t X = 1; X <= 10 && ok; ++X) {
        auto brute = non_diagonal_only(brute_census(sys, X).nontrivial);
        auto divisor = divisor_search(sys, X, search);
        if (!(brute == divisor)) {
            notes.push_back("nonlinear enumeration disagreement at X=" + std::to_string(X));
            ok = false;
        }
    }

    report(5, "non-linear suite", ok, seconds_since(start), 0.0);
}

// --------------------------------------------------------------- criterion 6

void criterion_paucity_trend() {
    auto start = Clock::now();
    bool ok = true;
    CensusOptions census;
    census.workers = search_workers();
    census.collect_solutions = false;

    double ratio8 = 0.0, ratio32 = 0.0;
    for (std::int64_t X : {8, 16, 24, 32}) {
        CensusReport report = brute_census(sigma23(), X, census);
        Int128 excess = report.total - report.trivial;
        double ratio = excess.approx_double() / report.trivial.approx_double();
        if (X == 8) ratio8 = ratio;
        if (X == 32) ratio32 = ratio;
        if (excess.approx_double() > std::pow(static_cast<double>(X), 2.75)) {
            notes.push_back("N-T exceeds X^2.75 at X=" + std::to_string(X));
            ok = false;
        }
    }
    if (!(ratio32 < ratio8)) {
        std::ostringstream msg;
        msg << "(N-T)/T is not smaller at X=32 (" << ratio32 << ") than at X=8 ("
            << ratio8 << ")";
        notes.push_back(msg.str());
        ok = false;
    }

    std::vector<std::pair<std::int64_t, Int128>> points;
    for (std::int64_t X : {8, 16, 32, 64}) {
        CensusReport report = brute_census(product2(), X, census);
        points.emplace_back(X, report.non_diagonal);
    }
    FitResult fit = exponent_fit(points);
    if (!(fit.slope > 2.0 && fit.slope < 2.5)) {
        std::ostringstream msg;
        msg << "Tdagger slope " << fit.slope << " outside (2.0, 2.5)";
        notes.push_back(msg.str());
        ok = false;
    }

    report(6, "paucity trend", ok, seconds_since(start), 300.0);
}

// --------------------------------------------------------------- criterion 7

void criterion_determinism() {
    auto start = Clock::now();
    bool ok = true;

    const char* path = "acceptance_product2.json";
    {
        std::ofstream out(path);
        out << R"({"kind":"linear","k":2,"rows":[[0,1]]})";
    }
    auto run = [&](const std::string& workers) {
        std::ostringstream out, err;
        int code = run_cli({"census", "--system", path, "--x-list", "4,6,8", "--method",
                            "both", "--format", "csv", "--workers", workers},
                           out, err);
        return std::make_pair(code, out.str());
    };
    auto [code1, csv1] = run("1");
    auto [code8, csv8] = run("8");
    if (code1 != 0 || code8 != 0) {
        notes.push_back("census runs did not exit 0");
        ok = false;
    }
    if (csv1 != csv8) {
        notes.push_back("worker counts produced different CSV bytes");
        ok = false;
    }
    if (csv1 != "X,N,T,Tstar,Tdagger\n4,32,28,0,4\n6,86,66,0,20\n8,160,120,0,40\n") {
        notes.push_back("unexpected CSV content: " + csv1);
        ok = false;
    }
    std::remove(path);

    report(7, "determinism across workers", ok, seconds_since(start), 0.0);
}

} // namespace

int main() {
    criterion_identity_suite();
    criterion_classification();
    criterion_oracle_equivalence();
    criterion_generators();
    criterion_nonlinear();
    criterion_paucity_trend();
    criterion_determinism();
    if (failures == 0) {
        std::printf("acceptance: all criteria pass\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", failures);
    return 1;
}
