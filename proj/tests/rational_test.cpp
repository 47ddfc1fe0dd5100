#include <doctest.h>

#include <random>

#include "oct/rational.hpp"

using oct::Rational;

TEST_CASE("rationals normalize on construction") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, 4) == Rational(-3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0, -7).den() == 1);
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("arithmetic and comparison are exact") {
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(7, 1) == Rational(7));
    CHECK(Rational(1, 2) + Rational(1, 2) == Rational(1));
}

TEST_CASE("parse and str round-trip") {
    CHECK(Rational::parse("3") == Rational(3));
    CHECK(Rational::parse("-3") == Rational(-3));
    CHECK(Rational::parse("3/2") == Rational(3, 2));
    CHECK(Rational::parse("-3/4") == Rational(-3, 4));
    CHECK(Rational::parse("0.35") == Rational(7, 20));
    CHECK(Rational(4).str() == "4/1");
    CHECK(Rational::parse(Rational(-9, 12).str()) == Rational(-3, 4));
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
}

TEST_CASE("overflow is detected, not wrapped") {
    Rational big(INT64_MAX / 2, 1);
    CHECK_THROWS_AS(big * Rational(4), std::overflow_error);
    CHECK_THROWS_AS(big + big + big, std::overflow_error);
}

TEST_CASE("random sums cancel exactly") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 1000; ++i) {
        auto draw = [&] {
            long long num = static_cast<long long>(rng() % 201) - 100;
            long long den = 1 + static_cast<long long>(rng() % 12);
            return Rational(num, den);
        };
        Rational a = draw(), b = draw(), c = draw();
        CHECK(a + b - b == a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}
