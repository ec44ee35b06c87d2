#pragma once

#include <vector>

#include "paucity/rng.hpp"
#include "paucity/system.hpp"

namespace paucity {

// Seeded generators shared by the verify command and the test suites, so a
// recorded seed reproduces the exact inputs everywhere.

inline std::vector<std::int64_t> random_tuple(SplitMix64& rng, int k,
                                              std::int64_t lo, std::int64_t hi) {
    std::vector<std::int64_t> z(static_cast<std::size_t>(k));
    for (auto& v : z) v = rng.range(lo, hi);
    return z;
}

inline SymmetricSystem random_linear_system(SplitMix64& rng, int k_min, int k_max,
                                            std::int64_t coeff_bound = 3) {
    for (int attempt = 0; attempt < 100; ++attempt) {
        int k = static_cast<int>(rng.range(k_min, k_max));
        int r = static_cast<int>(rng.range(1, k));
        std::vector<std::vector<Int128>> rows;
        for (int j = 0; j < r; ++j) {
            std::vector<Int128> row;
            bool nonzero = false;
            for (int l = 0; l < k; ++l) {
                auto c = rng.range(-coeff_bound, coeff_bound);
                if (c != 0) nonzero = true;
                row.emplace_back(static_cast<long long>(c));
            }
            if (nonzero) rows.push_back(std::move(row));
        }
        SymmetricSystem sys(k, std::move(rows));
        if (!sys.rows.empty()) return sys;
    }
    throw Error("random system generation kept producing zero rows");
}

} // namespace paucity
