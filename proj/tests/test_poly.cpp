#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "paucity/poly.hpp"
#include "paucity/rng.hpp"
#include "paucity/testgen.hpp"

using paucity::Int128;
using paucity::Poly;

namespace {

std::vector<Int128> sigma_of(std::initializer_list<std::int64_t> z) {
    std::vector<std::int64_t> v(z);
    return paucity::elementary_symmetric(v);
}

} // namespace

TEST_CASE("elementary symmetric values") {
    CHECK(sigma_of({1, 2, 3}) == std::vector<Int128>{1, 6, 11, 6});
    CHECK(sigma_of({0, 0}) == std::vector<Int128>{1, 0, 0});
    CHECK(sigma_of({2, -2}) == std::vector<Int128>{1, 0, -4});
}

TEST_CASE("poly_from_roots expands the product") {
    std::vector<std::int64_t> z{1, 2, 3};
    Poly p = paucity::poly_from_roots(z);
    CHECK(p == Poly{6, 11, 6, 1}); // t^3 + 6t^2 + 11t + 6
    CHECK(p.degree() == 3);
    CHECK(p.str() == "t^3 + 6*t^2 + 11*t + 6");

    std::vector<std::int64_t> empty;
    CHECK(paucity::poly_from_roots(empty) == Poly::constant(1));

    std::vector<std::int64_t> single{5};
    CHECK(paucity::poly_from_roots(single) == Poly{5, 1});
}

TEST_CASE("evaluation") {
    Poly p{-4, 0, 1}; // t^2 - 4
    CHECK(p.eval(2) == Int128(0));
    CHECK(Poly{6, 11, 6, 1}.eval(-1) == Int128(0));
    CHECK(Poly{6, 7, 1}.eval(10) == Int128(176));
}

TEST_CASE("canonical form and degree of zero") {
    Poly z{0, 0, 0};
    CHECK(z.is_zero());
    CHECK(z.degree() == Poly::kDegreeNegInf);
    CHECK(z.coeffs().empty());
    CHECK((Poly{1, 1} - Poly{1, 1}).is_zero());
    CHECK(z.str() == "0");
}

TEST_CASE("ring operations agree with evaluation") {
    paucity::SplitMix64 rng(7);
    for (int i = 0; i < 100; ++i) {
        auto a = paucity::random_tuple(rng, 3, -9, 9);
        auto b = paucity::random_tuple(rng, 2, -9, 9);
        Poly pa = paucity::poly_from_roots(a);
        Poly pb = paucity::poly_from_roots(b);
        Int128 t0{static_cast<long long>(rng.range(-5, 5))};
        CHECK((pa + pb).eval(t0) == pa.eval(t0) + pb.eval(t0));
        CHECK((pa - pb).eval(t0) == pa.eval(t0) - pb.eval(t0));
        CHECK((pa * pb).eval(t0) == pa.eval(t0) * pb.eval(t0));
    }
}

TEST_CASE("synthetic division") {
    Poly p{6, 7, 1}; // (t+1)(t+6)
    auto q = p.deflated(-1);
    REQUIRE(q.has_value());
    CHECK(*q == Poly{6, 1});
    CHECK_FALSE(p.deflated(2).has_value());
    CHECK(p.divided_by(1).value() == p);
    CHECK_FALSE(Poly{3, 2}.divided_by(2).has_value());
    CHECK(Poly{4, 2}.divided_by(2).value() == Poly{2, 1});
}

TEST_CASE("coefficients are the reversed sigma vector on random tuples") {
    paucity::SplitMix64 rng(42);
    for (int i = 0; i < 1000; ++i) {
        int k = static_cast<int>(rng.range(1, 8));
        auto z = paucity::random_tuple(rng, k, -50, 50);
        auto sigma = paucity::elementary_symmetric(z);
        Poly p = paucity::poly_from_roots(z);
        std::vector<Int128> reversed(sigma.rbegin(), sigma.rend());
        // exact equality, including trailing-zero trimming of the poly side
        for (int j = 0; j <= k; ++j)
            CHECK(p.coeff(j) == reversed[static_cast<std::size_t>(j)]);
    }
}

TEST_CASE("sigma is permutation invariant") {
    paucity::SplitMix64 rng(11);
    for (int k = 1; k <= 5; ++k) {
        auto z = paucity::random_tuple(rng, k, -9, 9);
        auto expected = paucity::elementary_symmetric(z);
        std::sort(z.begin(), z.end());
        do {
            CHECK(paucity::elementary_symmetric(z) == expected);
        } while (std::next_permutation(z.begin(), z.end()));
    }
    for (int k = 6; k <= 8; ++k) {
        auto z = paucity::random_tuple(rng, k, -9, 9);
        auto expected = paucity::elementary_symmetric(z);
        for (int i = 0; i < 30; ++i) {
            for (std::size_t j = z.size(); j > 1; --j)
                std::swap(z[j - 1],
                          z[static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(j) - 1))]);
            CHECK(paucity::elementary_symmetric(z) == expected);
        }
    }
}

TEST_CASE("negated roots evaluate to zero") {
    paucity::SplitMix64 rng(13);
    for (int i = 0; i < 300; ++i) {
        int k = static_cast<int>(rng.range(1, 8));
        auto z = paucity::random_tuple(rng, k, -50, 50);
        Poly p = paucity::poly_from_roots(z);
        for (std::int64_t zi : z) CHECK(p.eval(Int128(-zi)).is_zero());
    }
}

TEST_CASE("overflow propagates from polynomial arithmetic") {
    Poly huge = Poly::constant(paucity::pow_checked(2, 120));
    CHECK_THROWS_AS(huge * huge, paucity::OverflowError);
    Poly steep{0, paucity::pow_checked(2, 120)};
    CHECK_THROWS_AS(steep.eval(paucity::pow_checked(2, 20)), paucity::OverflowError);
}

TEST_CASE("k larger than 16 is rejected") {
    std::vector<std::int64_t> z(17, 1);
    CHECK_THROWS_AS(paucity::elementary_symmetric(z), std::invalid_argument);
}

TEST_CASE("sigma values of box tuples are positive and binomially bounded") {
    paucity::SplitMix64 rng(17);
    for (int i = 0; i < 200; ++i) {
        int k = static_cast<int>(rng.range(1, 8));
        std::int64_t X = rng.range(1, 20);
        auto z = paucity::random_tuple(rng, k, 1, X);
        auto sigma = paucity::elementary_symmetric(z);
        CHECK(sigma[0] == Int128(1));
        for (int l = 1; l <= k; ++l) {
            CHECK(sigma[static_cast<std::size_t>(l)] > Int128(0));
            CHECK(sigma[static_cast<std::size_t>(l)] <=
                  paucity::binomial(k, l) * paucity::pow_checked(Int128(X), l));
        }
    }
}
