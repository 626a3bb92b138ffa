#include "doctest.h"
#include "test_support.hpp"

#include "logint/errors.hpp"
#include "logint/numeric.hpp"
#include "logint/rational.hpp"

using namespace logint;
using testing::dec;

TEST_CASE("precision defaults and limits") {
    CHECK(Precision(30).guard_digits == 15);
    CHECK(Precision(100).guard_digits == 25);
    CHECK(Precision(101).guard_digits == 26);
    CHECK(Precision(30).working_digits() == 45);
    CHECK_THROWS_AS(Precision(0), PrecisionError);
    CHECK_THROWS_AS(Precision(30, 9), PrecisionError);
    CHECK(Precision(30).with_extra_guard(5).working_digits() == 50);
}

TEST_CASE("fundamental constants") {
    SUBCASE("euler gamma to 5 digits") {
        // the reference value is truncated, not rounded
        Precision p(5);
        CHECK(euler_gamma(p).to_string(12).substr(0, 7) == "0.57721");
        CHECK(euler_gamma(p).to_string(5) == "0.57722");
    }
    SUBCASE("log2 against the mpmath oracle") {
        Precision p(30);
        CHECK(fundamental_constant(Constant::log2, p).to_string(30) == "0.693147180559945309417232121458");
    }
    SUBCASE("pi is stable under a precision increase") {
        for (long d : {10L, 30L, 77L, 200L}) {
            CHECK(pi(Precision(d)).to_string(d) == pi(Precision(d + 10)).to_string(d));
            CHECK(pi(Precision(d)).to_string(d) == pi(Precision(d + 20)).to_string(d));
        }
        CHECK(pi(Precision(50)).to_string(50) == "3.1415926535897932384626433832795028841971693993751");
    }
    SUBCASE("every constant survives d+20 recomputation") {
        for (auto c : {Constant::pi, Constant::euler_gamma, Constant::log2, Constant::log3})
            for (long d : {15L, 40L, 120L})
                CHECK(fundamental_constant(c, Precision(d)).to_string(d) ==
                      fundamental_constant(c, Precision(d + 20)).to_string(d));
    }
    SUBCASE("names") {
        Precision p(20);
        CHECK(fundamental_constant("log3", p) == log(BigReal(3, p)));
        CHECK_THROWS_AS(fundamental_constant("zeta3", p), Error);
    }
}

TEST_CASE("approx_equal tolerance") {
    Precision p(30);
    BigReal x = pi(p);
    CHECK(approx_equal(x, x, 30));
    CHECK(approx_equal(BigReal(p), pow10(-31, p), 30));
    CHECK_FALSE(approx_equal(BigReal(p), pow10(-29, p), 30));
    // operands need d + 5 working digits
    CHECK_THROWS_AS(approx_equal(x, x, 41), PrecisionError);
}

TEST_CASE("binary operations take the smaller precision") {
    BigReal a(1, Precision(20));
    BigReal b(3, Precision(60));
    CHECK((a / b).precision() == Precision(20));
    CHECK((b / a).precision() == Precision(20));
    CHECK(min_precision(a, b) == Precision(20));
}

TEST_CASE("small integer arithmetic is exact") {
    Precision p(20);
    for (int i = 0; i < 200; ++i) {
        long a = testing::random_int(-1000000, 1000000);
        long b = testing::random_int(-1000000, 1000000);
        CHECK(BigReal(a, p) + BigReal(b, p) == BigReal(a + b, p));
        CHECK(BigReal(a, p) * BigReal(b, p) == BigReal(a * b, p));
        CHECK(BigReal(a, p) - b == BigReal(a - b, p));
    }
}

TEST_CASE("digits_agreed") {
    Precision p(30);
    BigReal one(1, p);
    CHECK(digits_agreed(one, one) == p.working_digits());
    CHECK(digits_agreed(one, one + pow10(-12, p) * 3) == 11);
    CHECK(digits_agreed(one, BigReal(5, p)) == 0);
}

TEST_CASE("decimal rendering") {
    Precision p(30);
    CHECK(BigReal(Rational(1, 8), p).to_string(3) == "0.125");
    CHECK(BigReal(-1234, p).to_string(6) == "-1234.00");
    CHECK(pow10(-40, p).to_string(3) == "1.00e-40");
    CHECK(BigReal(p).to_string(5) == "0");
    CHECK(dec("1.0084712", p).to_string(6) == "1.00847");
}

TEST_CASE("rational arithmetic") {
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(6, -4).to_string() == "-3/2");
    CHECK(Rational::parse("-10/4") == Rational(-5, 2));
    CHECK(Rational::parse("7") == Rational(7));
    CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK(pow(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK(Rational(-7, 2).floor() == -4);
}

TEST_CASE("real powers and domain") {
    Precision p(30);
    CHECK(digits_agreed(pow(BigReal(2, p), Rational(1, 2)), sqrt(BigReal(2, p))) >= 44);
    CHECK(pow(BigReal(-2, p), Rational(3)) == BigReal(-8, p));
    CHECK_THROWS_AS(pow(BigReal(-2, p), Rational(1, 2)), DomainError);
    CHECK_THROWS_AS(log(BigReal(p)), DomainError);
    CHECK_THROWS_AS(sqrt(BigReal(-1, p)), DomainError);
}
