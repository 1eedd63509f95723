#include <doctest.h>

#include <random>

#include "rational.hpp"

using namespace freespace;

TEST_CASE("rational parsing accepts fractions, integers and decimals") {
    CHECK(*parse_rational("3/4") == Rational(3, 4));
    CHECK(*parse_rational("-3/4") == Rational(-3, 4));
    CHECK(*parse_rational("6/8") == Rational(3, 4));
    CHECK(*parse_rational("5") == Rational(5));
    CHECK(*parse_rational("-12") == Rational(-12));
    CHECK(*parse_rational("0.1") == Rational(1, 10));
    CHECK(*parse_rational("1.25") == Rational(5, 4));
    CHECK(*parse_rational("-0.5") == Rational(-1, 2));
    CHECK(*parse_rational("3e2") == Rational(300));
    CHECK(*parse_rational("2.5e-1") == Rational(1, 4));
}

TEST_CASE("rational parsing rejects garbage") {
    CHECK_FALSE(parse_rational("").has_value());
    CHECK_FALSE(parse_rational("one").has_value());
    CHECK_FALSE(parse_rational("1/0x").has_value());
    CHECK_FALSE(parse_rational("1/ 2").has_value());
    CHECK_FALSE(parse_rational("1.2.3").has_value());
    CHECK_FALSE(parse_rational("--3").has_value());
}

TEST_CASE("rational text round-trips exactly") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 999983);
    for (int i = 0; i < 500; ++i) {
        Rational r(num(rng), den(rng));
        r.canonicalize();
        CHECK(*parse_rational(rational_str(r)) == r);
    }
}

TEST_CASE("shortest-decimal recovery turns doubles back into tidy rationals") {
    CHECK(rational_from_double_decimal(0.1) == Rational(1, 10));
    CHECK(rational_from_double_decimal(0.25) == Rational(1, 4));
    CHECK(rational_from_double_decimal(-2.75) == Rational(-11, 4));
    CHECK(rational_from_double_decimal(3.0) == Rational(3));
}

TEST_CASE("exact doubles are dyadic rationals") {
    CHECK(rational_from_double_exact(0.5) == Rational(1, 2));
    CHECK(rational_from_double_exact(0.1) != Rational(1, 10));  // the dyadic value differs
}

TEST_CASE("floor helper") {
    CHECK(rational_floor(Rational(7, 2)) == 3);
    CHECK(rational_floor(Rational(-7, 2)) == -4);
    CHECK(rational_floor(Rational(4)) == 4);
}
