#pragma once

#include <cstdint>
#include <vector>

#include "paucity/census.hpp"
#include "paucity/delta.hpp"
#include "paucity/system.hpp"

namespace paucity {

// An ordered tuple of nonzero integers with a declared product.
struct FactorTuple {
    std::vector<Int128> divisors;

    friend bool operator==(const FactorTuple& a, const FactorTuple& b) {
        return a.divisors == b.divisors;
    }
    friend bool operator<(const FactorTuple& a, const FactorTuple& b) {
        return a.divisors < b.divisors;
    }
};

// Every ordered `count`-tuple of integers (signs included) whose product is
// exactly n: positive-divisor tuples of |n| first, then the sign vectors of
// matching parity. Throws ZeroProductError when n is zero.
std::vector<FactorTuple> ordered_factorizations(Int128 n, int count);

// Integer roots of p in [lo, hi] with multiplicities, found by scanning and
// repeated exact synthetic division. p must not be identically zero.
std::vector<std::pair<Int128, int>> integer_roots_in_range(const Poly& p,
                                                           Int128 lo, Int128 hi);

// The integer delta(-v) whose divisors pin down the x side. Constructing one
// asserts the proven magnitude bound for the current (system, X).
struct DivisorTarget {
    DivisorTarget(Int128 v, const Int128& bound) : value(v) {
        if (value.abs() > bound)
            throw Error("divisor target exceeded its proven bound");
    }
    Int128 value;
};

struct SearchOptions {
    std::uint64_t budget = 10'000'000'000ULL; // (h, v) pairs
    int workers = 1;
    std::size_t max_solutions = 1u << 22;
};

struct SearchStats {
    // (h, v) lattice pairs visited; for the linear search this equals
    // X * prod over free degrees l of (2 * 2^k X^l + 1).
    Int128 visited_pairs;
};

// Finds every non-diagonal solution in [1,X]^(2k) without brute force:
// walk the box of free-degree values, pick the candidate y-value v missing
// from x, factor the nonzero integer delta(-v)/A into k in-range divisors
// to recover x, then read y off the integer roots of A prod(t+x_i) - delta.
// Both orientations are emitted; output is ordered pairs, lex sorted, and
// must match the brute-force NonDiagonal list exactly.
std::vector<SolutionPair> divisor_search(const NormalizedSystem& sys, std::int64_t X,
                                         const SearchOptions& options = {},
                                         SearchStats* stats = nullptr);

// Non-linear variant: walks pairs (sigma values of x, sigma values of y)
// over the attainable sigma ranges and uses the difference of the two delta
// polynomials throughout.
std::vector<SolutionPair> divisor_search(const NonlinearSystem& sys, std::int64_t X,
                                         const SearchOptions& options = {},
                                         SearchStats* stats = nullptr);

} // namespace paucity
