#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "paucity/census.hpp"
#include "paucity/rng.hpp"
#include "paucity/system.hpp"
#include "paucity/testgen.hpp"

using paucity::Int128;
using paucity::NormalizedSystem;
using paucity::SymmetricSystem;

namespace {

SymmetricSystem make(int k, std::vector<std::vector<long long>> rows) {
    std::vector<std::vector<Int128>> converted;
    for (auto& row : rows) {
        std::vector<Int128> r;
        for (long long v : row) r.emplace_back(v);
        converted.push_back(std::move(r));
    }
    return SymmetricSystem(k, std::move(converted));
}

// Solution multiset of phi(x) = phi(y) over [1,X]^(2k) by the plain
// quadruple loop; independent of the census machinery.
std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>>
naive_solutions(const SymmetricSystem& sys, std::int64_t X) {
    std::set<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>> out;
    const int k = sys.k;
    std::vector<std::int64_t> x(static_cast<std::size_t>(k), 1);
    auto phi = [&](const std::vector<std::int64_t>& z) {
        auto sigma = paucity::elementary_symmetric(z);
        std::vector<Int128> vals;
        for (const auto& row : sys.rows) {
            Int128 v = 0;
            for (int l = 1; l <= k; ++l)
                v += row[static_cast<std::size_t>(l - 1)] * sigma[static_cast<std::size_t>(l)];
            vals.push_back(v);
        }
        return vals;
    };
    auto advance = [&](std::vector<std::int64_t>& z) {
        int pos = k - 1;
        while (pos >= 0 && z[static_cast<std::size_t>(pos)] == X) {
            z[static_cast<std::size_t>(pos)] = 1;
            --pos;
        }
        if (pos < 0) return false;
        ++z[static_cast<std::size_t>(pos)];
        return true;
    };
    std::map<std::vector<Int128>, std::vector<std::vector<std::int64_t>>> classes;
    do {
        classes[phi(x)].push_back(x);
    } while (advance(x));
    for (const auto& [values, tuples] : classes)
        for (const auto& a : tuples)
            for (const auto& b : tuples) out.insert({a, b});
    return out;
}

} // namespace

TEST_CASE("normalize: already triangular") {
    auto norm = paucity::normalize(make(3, {{0, 1, 0}, {0, 0, 1}}));
    CHECK(norm.degrees() == std::vector<int>{2, 3});
    CHECK(norm.leading() == std::vector<Int128>{1, 1});
    CHECK(norm.free_degrees() == std::vector<int>{1});
    CHECK(norm.weight() == 1);
    CHECK(norm.leading_product() == Int128(1));
    for (const auto& terms : norm.offdiag()) CHECK(terms.empty());
}

TEST_CASE("normalize: single row divides by the gcd") {
    auto norm = paucity::normalize(make(4, {{3, 0, 0, 0}}));
    CHECK(norm.degrees() == std::vector<int>{1});
    CHECK(norm.leading() == std::vector<Int128>{1});
    CHECK(norm.free_degrees() == std::vector<int>{2, 3, 4});
    CHECK(norm.weight() == 9);
}

TEST_CASE("normalize: dependent rows are dropped") {
    auto norm = paucity::normalize(make(3, {{1, 1, 0}, {1, 0, 1}, {2, 1, 1}}));
    CHECK(norm.equation_count() == 2);
    CHECK(norm.degrees() == std::vector<int>{2, 3});
    CHECK(norm.free_degrees() == std::vector<int>{1});
    CHECK(norm.weight() == 1);
}

TEST_CASE("normalize: degenerate input") {
    CHECK_THROWS_AS(paucity::normalize(make(3, {{0, 0, 0}})),
                    paucity::DegenerateSystemError);
}

TEST_CASE("normalize is idempotent and weight matches the free degrees") {
    paucity::SplitMix64 rng(2024);
    for (int i = 0; i < 200; ++i) {
        auto sys = paucity::random_linear_system(rng, 2, 6);
        NormalizedSystem norm = paucity::normalize(sys);
        int sum = 0;
        for (int l : norm.free_degrees()) sum += l;
        CHECK(sum == norm.weight());
        int degree_sum = 0;
        for (int d : norm.degrees()) degree_sum += d;
        CHECK(norm.weight() == norm.k() * (norm.k() + 1) / 2 - degree_sum);

        NormalizedSystem again = paucity::normalize(norm.to_symmetric());
        CHECK(again.degrees() == norm.degrees());
        CHECK(again.leading() == norm.leading());
        CHECK(again.offdiag() == norm.offdiag());
    }
}

TEST_CASE("normalization preserves the solution set") {
    paucity::SplitMix64 rng(99);
    for (int i = 0; i < 50; ++i) {
        auto sys = paucity::random_linear_system(rng, 2, 4);
        auto norm = paucity::normalize(sys);
        const std::int64_t X = 5;
        CHECK(naive_solutions(sys, X) == naive_solutions(norm.to_symmetric(), X));
    }
}

TEST_CASE("capacity bound") {
    auto tiny = paucity::normalize(make(2, {{0, 1}}));
    CHECK_NOTHROW(paucity::capacity_bound(tiny, 6));

    auto norm = paucity::normalize(make(3, {{0, 1, 0}, {0, 0, 1}}));
    Int128 bound = paucity::capacity_bound(norm, 32);
    // at least |A| (2X)^k (k+1) (1 + sum|b|)
    CHECK(bound >= paucity::pow_checked(64, 3) * Int128(4));

    auto big = paucity::normalize(make(16, {{1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0}}));
    CHECK_THROWS_AS(paucity::capacity_bound(big, 1000000), paucity::CapacityError);
}

TEST_CASE("corollary systems have weight (k-r)(k-r+1)/2") {
    paucity::SplitMix64 rng(5);
    for (int k = 1; k <= 6; ++k) {
        for (int r = 1; r <= k; ++r) {
            std::vector<std::vector<Int128>> a(
                static_cast<std::size_t>(r),
                std::vector<Int128>(static_cast<std::size_t>(k - r)));
            for (auto& row : a)
                for (auto& v : row) v = Int128(static_cast<long long>(rng.range(-3, 3)));
            auto sys = paucity::corollary_system(k, r, a);
            auto norm = paucity::normalize(sys);
            CHECK(norm.weight() == (k - r) * (k - r + 1) / 2);
            std::vector<int> expected;
            for (int j = k - r + 1; j <= k; ++j) expected.push_back(j);
            CHECK(norm.degrees() == expected);
        }
    }
}

TEST_CASE("corollary full system") {
    auto norm = paucity::normalize(paucity::corollary_system(3, 3, {}));
    CHECK(norm.degrees() == std::vector<int>{1, 2, 3});
    CHECK(norm.free_degrees().empty());
    CHECK(norm.weight() == 0);
}

TEST_CASE("theta system: gaussian integers at k=4") {
    paucity::Poly minpoly{1, 0, 1}; // t^2 + 1
    auto sys = paucity::theta_system(minpoly, 4);
    REQUIRE(sys.rows.size() == 2);
    CHECK(sys.rows[0] == std::vector<Int128>{0, -1, 0, 1});
    CHECK(sys.rows[1] == std::vector<Int128>{-1, 0, 1, 0});
}

TEST_CASE("theta system: small cases") {
    auto sys = paucity::theta_system(paucity::Poly{1, 0, 1}, 2);
    REQUIRE(sys.rows.size() == 2);
    CHECK(sys.rows[0] == std::vector<Int128>{0, 1});
    CHECK(sys.rows[1] == std::vector<Int128>{1, 0});

    auto linear = paucity::theta_system(paucity::Poly{-2, 1}, 2); // theta = 2
    REQUIRE(linear.rows.size() == 1);
    CHECK(linear.rows[0] == std::vector<Int128>{2, 1});

    CHECK_THROWS_AS(paucity::theta_system(paucity::Poly{1, 0, 2}, 4),
                    paucity::InvalidMinpolyError);
    CHECK_THROWS_AS(paucity::theta_system(paucity::Poly{1, 0, 1}, 1),
                    std::invalid_argument);
}

TEST_CASE("theta system solutions match products in Z[theta]/(minpoly)") {
    // independent oracle: multiply the linear factors with explicit modular
    // reduction and compare the d residue coefficients
    auto residue_product = [](const paucity::Poly& minpoly,
                              const std::vector<std::int64_t>& z) {
        int d = minpoly.degree();
        std::vector<Int128> acc(static_cast<std::size_t>(d), Int128(0));
        acc[0] = 1;
        for (std::int64_t zi : z) {
            // acc *= (theta + zi)
            std::vector<Int128> next(static_cast<std::size_t>(d) + 1, Int128(0));
            for (int b = 0; b < d; ++b) {
                next[static_cast<std::size_t>(b)] += acc[static_cast<std::size_t>(b)] * Int128(zi);
                next[static_cast<std::size_t>(b) + 1] += acc[static_cast<std::size_t>(b)];
            }
            Int128 spill = next[static_cast<std::size_t>(d)];
            for (int b = 0; b < d; ++b)
                next[static_cast<std::size_t>(b)] -= spill * minpoly.coeff(b);
            next.pop_back();
            acc = next;
        }
        return acc;
    };

    paucity::SplitMix64 rng(31);
    std::vector<paucity::Poly> minpolys = {
        paucity::Poly{1, 0, 1},  // theta^2 = -1
        paucity::Poly{-2, 0, 1}, // theta^2 = 2
        paucity::Poly{1, 1, 1},  // theta^2 = -theta - 1
        paucity::Poly{-3, 1},    // theta = 3
    };
    for (const auto& minpoly : minpolys) {
        for (int k = std::max(2, minpoly.degree()); k <= 4; ++k) {
            auto sys = paucity::theta_system(minpoly, k);
            for (int trial = 0; trial < 200; ++trial) {
                auto x = paucity::random_tuple(rng, k, 1, 10);
                std::vector<std::int64_t> y;
                if (trial % 4 == 0) { // equal residues guaranteed
                    y = x;
                    for (std::size_t j = y.size(); j > 1; --j)
                        std::swap(y[j - 1], y[static_cast<std::size_t>(rng.range(
                                                0, static_cast<std::int64_t>(j) - 1))]);
                } else {
                    y = paucity::random_tuple(rng, k, 1, 10);
                }
                bool same_residue = residue_product(minpoly, x) == residue_product(minpoly, y);
                auto sx = paucity::elementary_symmetric(x);
                auto sy = paucity::elementary_symmetric(y);
                bool equations_hold = true;
                for (const auto& row : sys.rows) {
                    Int128 lhs = 0, rhs = 0;
                    for (int l = 1; l <= k; ++l) {
                        lhs += row[static_cast<std::size_t>(l - 1)] * sx[static_cast<std::size_t>(l)];
                        rhs += row[static_cast<std::size_t>(l - 1)] * sy[static_cast<std::size_t>(l)];
                    }
                    if (!(lhs == rhs)) equations_hold = false;
                }
                CHECK(equations_hold == same_residue);
            }
        }
    }
}

TEST_CASE("system construction validation") {
    CHECK_THROWS_AS(make(2, {{1, 0}, {0, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(make(2, {{1}}), std::invalid_argument);
    auto pruned = make(2, {{0, 0}, {0, 1}});
    CHECK(pruned.rows.size() == 1);
}
