#include <doctest.h>

#include <random>

#include "latgb/bigint.hpp"

using namespace latgb;

TEST_CASE("euclid_divmod returns the least non-negative remainder") {
    Int q, r;

    euclid_divmod(Int(7), Int(3), q, r);
    CHECK(q == 2);
    CHECK(r == 1);

    euclid_divmod(Int(-7), Int(3), q, r);
    CHECK(q == -3);
    CHECK(r == 2);

    euclid_divmod(Int(7), Int(-3), q, r);
    CHECK(q == -2);
    CHECK(r == 1);

    euclid_divmod(Int(-7), Int(-3), q, r);
    CHECK(q == 3);
    CHECK(r == 2);

    euclid_divmod(Int(0), Int(5), q, r);
    CHECK(q == 0);
    CHECK(r == 0);

    CHECK_THROWS_AS(euclid_divmod(Int(1), Int(0), q, r), std::invalid_argument);
}

TEST_CASE("euclid_divmod identity and range hold on random inputs") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int t = 0; t < 2000; ++t) {
        Int c = dist(rng), d = dist(rng);
        if (sgn(d) == 0) d = 7;
        Int q, r;
        euclid_divmod(c, d, q, r);
        CHECK(c == q * d + r);
        CHECK(r >= 0);
        CHECK(r < abs(d));
    }
}

TEST_CASE("ext_gcd produces the pinned cofactor pair") {
    Int g, u, v;

    ext_gcd(Int(3), Int(5), g, u, v);
    CHECK(g == 1);
    CHECK(u == 2);
    CHECK(v == -1);

    ext_gcd(Int(2), Int(3), g, u, v);
    CHECK(g == 1);
    CHECK(u == -1);
    CHECK(v == 1);

    ext_gcd(Int(4), Int(6), g, u, v);
    CHECK(g == 2);
    CHECK(u * 4 + v * 6 == 2);
    // m = |6|/2 = 3, so u is pinned into (-3/2, 3/2]
    CHECK(u > -2);
    CHECK(u <= 1);

    ext_gcd(Int(0), Int(0), g, u, v);
    CHECK(g == 0);
    CHECK(u == 0);
    CHECK(v == 0);

    ext_gcd(Int(-5), Int(0), g, u, v);
    CHECK(g == 5);
    CHECK(u == -1);
    CHECK(v == 0);

    ext_gcd(Int(0), Int(-5), g, u, v);
    CHECK(g == 5);
    CHECK(u == 0);
    CHECK(v == -1);
}

TEST_CASE("ext_gcd identity and canonical range hold on random inputs") {
    std::mt19937_64 rng(12);
    std::uniform_int_distribution<long> dist(-100000, 100000);
    for (int t = 0; t < 2000; ++t) {
        Int a = dist(rng), b = dist(rng);
        Int g, u, v;
        ext_gcd(a, b, g, u, v);
        CHECK(u * a + v * b == g);
        CHECK(g == gcd_int(a, b));
        if (sgn(a) != 0 || sgn(b) != 0) CHECK(g > 0);
        if (sgn(b) != 0) {
            Int m = abs(b) / g;
            CHECK(2 * u > -m);
            CHECK(2 * u <= m);
        }
    }
}

TEST_CASE("gcd, lcm and divisibility helpers") {
    CHECK(gcd_int(Int(12), Int(18)) == 6);
    CHECK(gcd_int(Int(0), Int(-7)) == 7);
    CHECK(lcm_int(Int(4), Int(6)) == 12);
    CHECK(lcm_int(Int(-4), Int(6)) == 12);
    CHECK(divides_int(Int(3), Int(-9)));
    CHECK(!divides_int(Int(3), Int(10)));
    CHECK(divides_int(Int(5), Int(0)));
    CHECK_THROWS_AS(divides_int(Int(0), Int(1)), std::invalid_argument);
}

TEST_CASE("int64 conversion guards its range") {
    CHECK(fits_int64(Int("9223372036854775807")));
    CHECK(!fits_int64(Int("9223372036854775808")));
    CHECK(to_int64(Int(-42)) == -42);
    Int big("123456789012345678901234567890");
    CHECK(!fits_int64(big));
    CHECK_THROWS_AS(to_int64(big), std::overflow_error);
}
