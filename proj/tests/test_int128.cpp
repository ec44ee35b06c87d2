#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "paucity/int128.hpp"

using paucity::Int128;

TEST_CASE("exact arithmetic round trips through strings") {
    CHECK(Int128(0).str() == "0");
    CHECK(Int128(-1).str() == "-1");
    CHECK((Int128(1000000007LL) * Int128(998244353LL)).str() == "998244359987710471");
    CHECK(Int128::parse("-170141183460469231731687303715884105728") == Int128::min());
    CHECK(Int128::parse("170141183460469231731687303715884105727") == Int128::max());
    CHECK_THROWS_AS(Int128::parse("170141183460469231731687303715884105728"),
                    paucity::ParseError);
    CHECK_THROWS_AS(Int128::parse("12x"), paucity::ParseError);
    CHECK_THROWS_AS(Int128::parse(""), paucity::ParseError);
}

TEST_CASE("overflow is detected, never wrapped") {
    Int128 big = paucity::pow_checked(2, 126);
    CHECK_THROWS_AS(big + big, paucity::OverflowError);
    CHECK_THROWS_AS(big * 4, paucity::OverflowError);
    CHECK_THROWS_AS(-Int128::min(), paucity::OverflowError);
    CHECK_THROWS_AS(Int128::min().abs(), paucity::OverflowError);
    CHECK_THROWS_AS(Int128::min() / Int128(-1), paucity::OverflowError);
    CHECK(big + (-big) == Int128(0));
    // 2^126 stays exact
    CHECK(big.str() == "85070591730234615865843651857942052864");
}

TEST_CASE("division helpers") {
    CHECK(Int128(7).divides(21));
    CHECK_FALSE(Int128(7).divides(22));
    CHECK(Int128(-3).divides(9));
    CHECK(Int128(21).div_exact(-7) == Int128(-3));
    CHECK_THROWS_AS(Int128(22).div_exact(7), paucity::Error);
    CHECK(Int128(-22) / Int128(7) == Int128(-3)); // truncating
    CHECK(Int128(-22) % Int128(7) == Int128(-1));
}

TEST_CASE("gcd and powers") {
    CHECK(paucity::gcd(12, -18) == Int128(6));
    CHECK(paucity::gcd(0, -5) == Int128(5));
    CHECK(paucity::gcd(0, 0) == Int128(0));
    CHECK(paucity::pow_checked(-3, 5) == Int128(-243));
    CHECK(paucity::pow_checked(10, 0) == Int128(1));
    CHECK_THROWS_AS(paucity::pow_checked(10, 40), paucity::OverflowError);
}

TEST_CASE("binomial") {
    CHECK(paucity::binomial(10, 3) == Int128(120));
    CHECK(paucity::binomial(5, 0) == Int128(1));
    CHECK(paucity::binomial(3, 5) == Int128(0));
    CHECK(paucity::binomial(64, 32).str() == "1832624140942590534");
}
