#pragma once

#include <cstdint>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "paucity/system.hpp"

namespace paucity {

// Solution pairs fall into three classes:
//   Trivial              equal multisets (y permutes x),
//   PotentiallyDiagonal  equal value sets but different multisets,
//   NonDiagonal          some value occurs on one side only.
enum class SolutionClass { Trivial, PotentiallyDiagonal, NonDiagonal };

SolutionClass classify(std::span<const std::int64_t> x,
                       std::span<const std::int64_t> y);

const char* to_string(SolutionClass cls);

struct SolutionPair {
    std::vector<std::int64_t> x, y;
    SolutionClass cls;

    friend bool operator==(const SolutionPair& a, const SolutionPair& b) {
        return a.x == b.x && a.y == b.y;
    }
    friend bool operator<(const SolutionPair& a, const SolutionPair& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
};

// (sorted x, sorted y): the position-free representative of a solution orbit.
using CanonicalPair = std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>;

// All ordered pairs represented by the canonical ones, classified and
// lexicographically sorted.
std::vector<SolutionPair> expand_ordered(const std::set<CanonicalPair>& canon);

// Number of distinct orderings of a sorted tuple: k! / prod(multiplicity!).
Int128 permutation_count(std::span<const std::int64_t> sorted_tuple);

struct CensusOptions {
    std::uint64_t budget = 10'000'000'000ULL; // tuple tests
    int workers = 1;
    bool collect_solutions = true;
    std::size_t max_solutions = 1u << 22;
};

struct CensusReport {
    std::int64_t box = 0; // X
    Int128 total;         // N
    Int128 trivial;       // T
    Int128 potentially_diagonal; // T*
    Int128 non_diagonal;         // T-dagger
    // Ordered non-trivial pairs, lex sorted; empty unless collection was on.
    std::vector<SolutionPair> nontrivial;
    bool collected = false;
};

// Exhaustive census over [1,X]^(2k): x runs over sorted representatives and
// is re-weighted by its permutation count, y runs free. Counts are exactly
// those of the unoptimized double loop.
CensusReport brute_census(const NormalizedSystem& sys, std::int64_t X,
                          const CensusOptions& options = {});
CensusReport brute_census(const NonlinearSystem& sys, std::int64_t X,
                          const CensusOptions& options = {});

// Closed-form count of equal-multiset pairs:
// sum over support sizes s of C(X,s) * sum over compositions of k into s
// positive parts of (k!/prod m_i!)^2.
Int128 count_trivial_exact(int k, std::int64_t X);

// Census restricted to pairs with equal value sets; returns the count of
// those with unequal multisets (the T* column) plus their canonical pairs.
struct PotentiallyDiagonalSweep {
    Int128 count;
    std::set<CanonicalPair> pairs;
};
PotentiallyDiagonalSweep potentially_diagonal_sweep(const NormalizedSystem& sys,
                                                    std::int64_t X,
                                                    const CensusOptions& options = {});
PotentiallyDiagonalSweep potentially_diagonal_sweep(const NonlinearSystem& sys,
                                                    std::int64_t X,
                                                    const CensusOptions& options = {});

// Row products vs column products of a positive matrix: a ready-made
// solution of the pure product equation.
SolutionPair product_parametrized_solution(
    const std::vector<std::vector<std::int64_t>>& m);

struct FitResult {
    double slope = 0.0;
    int used_points = 0;
    int dropped_zeros = 0;
};

// Least-squares slope of log(count) against log(X). Zero counts are dropped
// (and reported); fewer than two usable points raises InsufficientDataError.
FitResult exponent_fit(const std::vector<std::pair<std::int64_t, Int128>>& points);

} // namespace paucity
