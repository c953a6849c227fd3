#include <doctest.h>

#include "revwit/big.hpp"
#include "revwit/rational.hpp"

using namespace revwit;

TEST_CASE("cantor pairing walks the diagonals") {
    CHECK(cantor_pair(0, 0) == 0);
    CHECK(cantor_pair(1, 0) == 1);
    CHECK(cantor_pair(0, 1) == 2);
    CHECK(cantor_pair(2, 0) == 3);
    CHECK(cantor_pair(1, 1) == 4);
    CHECK(cantor_pair(0, 2) == 5);
    for (Big n = 0; n < 2000; ++n) {
        auto [x, y] = cantor_unpair(n);
        CHECK(cantor_pair(x, y) == n);
    }
    CHECK_THROWS_AS(cantor_unpair(Big(-1)), std::invalid_argument);
}

TEST_CASE("zigzag enumerates the integers") {
    Big expect[] = {0, 1, -1, 2, -2, 3, -3};
    for (int i = 0; i < 7; ++i) CHECK(zig_value(Big(i)) == expect[i]);
    for (Big z = -100; z <= 100; ++z) CHECK(zig_value(zig_index(z)) == z);
}

TEST_CASE("tuple codes round-trip") {
    for (Big n = 0; n < 300; ++n) {
        for (size_t m : {1u, 2u, 3u}) {
            auto v = tuple_decode(n, m);
            CHECK(v.size() == m);
            CHECK(tuple_code(v) == n);
        }
    }
    CHECK_THROWS_AS(tuple_code({}), std::invalid_argument);
    CHECK_THROWS_AS(tuple_decode(0, 0), std::invalid_argument);
}

TEST_CASE("calkin-wilf tree positions") {
    CHECK(calkin_wilf_index(1, 1) == 1);
    CHECK(calkin_wilf_index(1, 2) == 2);
    CHECK(calkin_wilf_index(2, 1) == 3);
    // integers march down the right spine: n/1 sits at 2^n - 1
    for (int n = 1; n <= 12; ++n)
        CHECK(calkin_wilf_index(n, 1) == (Big(1) << n) - 1);
    for (Big k = 1; k < 500; ++k) {
        auto [a, b] = calkin_wilf_value(k);
        CHECK(boost::multiprecision::gcd(a, b) == 1);
        CHECK(calkin_wilf_index(a, b) == k);
    }
}

TEST_CASE("rational enumeration starts 0, 1, -1, 1/2, -1/2, 2, -2, 1/3, -1/3, 3/2") {
    const char* expect[] = {"0", "1", "-1", "1/2", "-1/2", "2", "-2", "1/3", "-1/3", "3/2"};
    for (int i = 0; i < 10; ++i) CHECK(rat_str(rat_at(i)) == expect[i]);
    for (Big n = 0; n < 500; ++n) CHECK(rat_index(rat_at(n)) == n);
    CHECK_THROWS_AS(rat_at(Big(-1)), std::invalid_argument);
}

TEST_CASE("rational grammar accepts only reduced canonical forms") {
    CHECK(rat_str(parse_rat("3/4")) == "3/4");
    CHECK(rat_str(parse_rat("-7")) == "-7");
    CHECK(rat_str(make_rat(2, 4)) == "1/2");
    CHECK(rat_str(make_rat(1, -2)) == "-1/2");  // sign moves to the numerator
    CHECK(rat_str(make_rat(-3, -3)) == "1");
    for (const char* bad : {"2/4", "2/1", "-0", "01", "1/-2", "", "/2", "1/", "1/0", "+1", "0/3"})
        CHECK_THROWS_AS(parse_rat(bad), ParseError);
}
