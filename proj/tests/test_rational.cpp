#include <catch2/catch_amalgamated.hpp>

#include "orbi/rational.hpp"

using orbi::BigInt;
using orbi::Rational;

TEST_CASE("rationals are kept reduced with positive denominator") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).num() == 2);
    CHECK(Rational(6, 3).den() == 1);
}

TEST_CASE("arithmetic is exact") {
    const Rational a(1, 6), b(1, 10);
    CHECK(a + b == Rational(4, 15));
    CHECK(a - b == Rational(1, 15));
    CHECK(a * b == Rational(1, 60));
    CHECK(a / b == Rational(5, 3));
    CHECK(-a == Rational(-1, 6));
    CHECK(a < b * Rational(2));
    CHECK(Rational(1, 3).sign() == 1);
    CHECK(Rational(-1, 3).sign() == -1);
    CHECK(Rational(0).sign() == 0);
}

TEST_CASE("zero denominators are rejected") {
    CHECK_THROWS_AS(Rational(1, 0), orbi::ZeroDenominator);
    CHECK_THROWS_AS(Rational(1, 2) / Rational(0), orbi::ZeroDenominator);
}

TEST_CASE("values beyond 64 bits stay exact") {
    const int primes[] = {2,  3,  5,  7,  11, 13, 17, 19, 23,
                          29, 31, 37, 41, 43, 47, 53, 59, 61};
    Rational sum(0);
    BigInt product(1);
    for (int p : primes) {
        sum += Rational(1, p);
        product *= p;
    }
    // denominator of sum of distinct prime reciprocals is the full product
    CHECK(sum.den() == product);
    CHECK(product > BigInt("9223372036854775807"));
    CHECK((sum * Rational(product, 1)).is_integer());
}

TEST_CASE("string form") {
    CHECK(Rational(-1, 42).str() == "-1/42");
    CHECK(Rational(5).str() == "5");
}
