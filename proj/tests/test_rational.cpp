#include "dao/errors.hpp"
#include "dao/rational.hpp"
#include "dao/suites.hpp"

#include <doctest.h>

using dao::BigInt;
using dao::ExtendedValue;
using dao::Rational;
using dao::SuiteRng;

TEST_CASE("canonical reduced form") {
    CHECK(Rational(BigInt{2}, BigInt{4}).to_string() == "1/2");
    CHECK(Rational(BigInt{-6}, BigInt{4}).to_string() == "-3/2");
    CHECK(Rational(BigInt{6}, BigInt{-4}).to_string() == "-3/2");
    CHECK(Rational(BigInt{0}, BigInt{-7}).to_string() == "0");
    CHECK(Rational{7}.to_string() == "7");
    CHECK_THROWS_AS(Rational(BigInt{1}, BigInt{0}), dao::invariant_error);
}

TEST_CASE("parsing decimals and fractions") {
    CHECK(Rational::parse("2.5") == Rational(BigInt{5}, BigInt{2}));
    CHECK(Rational::parse("0.125") == Rational(BigInt{1}, BigInt{8}));
    CHECK(Rational::parse("7") == Rational{7});
    CHECK(Rational::parse("-3.25") == Rational(BigInt{-13}, BigInt{4}));
    CHECK(Rational::parse("256/7") == Rational(BigInt{256}, BigInt{7}));
    CHECK(Rational::parse("8/3").to_string() == "8/3");
    CHECK_THROWS_AS(Rational::parse(""), dao::parse_error);
    CHECK_THROWS_AS(Rational::parse("1."), dao::parse_error);
    CHECK_THROWS_AS(Rational::parse(".5"), dao::parse_error);
    CHECK_THROWS_AS(Rational::parse("1/0"), dao::parse_error);
    CHECK_THROWS_AS(Rational::parse("two"), dao::parse_error);
}

TEST_CASE("exact arithmetic against a native reference") {
    SuiteRng rng(17);
    auto draw = [&rng] {
        long long num = static_cast<long long>(rng.in(0, 2000)) - 1000;
        long long den = static_cast<long long>(rng.in(1, 50));
        return std::pair<long long, long long>{num, den};
    };
    for (int iter = 0; iter < 1500; ++iter) {
        auto [an, ad] = draw();
        auto [bn, bd] = draw();
        Rational a{BigInt{an}, BigInt{ad}};
        Rational b{BigInt{bn}, BigInt{bd}};
        CHECK(a + b == Rational(BigInt{an * bd + bn * ad}, BigInt{ad * bd}));
        CHECK(a - b == Rational(BigInt{an * bd - bn * ad}, BigInt{ad * bd}));
        CHECK(a * b == Rational(BigInt{an * bn}, BigInt{ad * bd}));
        if (bn != 0) CHECK(a / b == Rational(BigInt{an * bd}, BigInt{ad * bn}));
        // Order agrees with cross multiplication in native arithmetic.
        CHECK((a < b) == (an * bd < bn * ad));
    }
}

TEST_CASE("comparison is a total transitive order") {
    SuiteRng rng(19);
    for (int iter = 0; iter < 500; ++iter) {
        Rational a{BigInt{static_cast<long long>(rng.in(0, 200)) - 100},
                   BigInt{static_cast<long long>(rng.in(1, 20))}};
        Rational b{BigInt{static_cast<long long>(rng.in(0, 200)) - 100},
                   BigInt{static_cast<long long>(rng.in(1, 20))}};
        Rational c{BigInt{static_cast<long long>(rng.in(0, 200)) - 100},
                   BigInt{static_cast<long long>(rng.in(1, 20))}};
        CHECK(((a < b) + (a == b) + (b < a)) == 1);
        if (a <= b && b <= c) CHECK(a <= c);
    }
}

TEST_CASE("decimal rendering is rounded and deterministic") {
    CHECK(Rational::parse("256/7").to_decimal_string(6) == "36.571429");
    CHECK(Rational::parse("1/2").to_decimal_string(0) == "1");   // half away from zero
    CHECK(Rational::parse("-1/2").to_decimal_string(0) == "-1");
    CHECK(Rational{3}.to_decimal_string(2) == "3.00");
    CHECK(Rational::parse("1/3").to_decimal_string(4) == "0.3333");
}

TEST_CASE("extended values order below finite") {
    ExtendedValue inf = ExtendedValue::neg_infinity();
    ExtendedValue zero{Rational{0}};
    ExtendedValue neg{Rational{-5}};
    CHECK(inf < neg);
    CHECK(inf < zero);
    CHECK(neg < zero);
    CHECK(inf == ExtendedValue::neg_infinity());
    CHECK(!(inf == neg));
    CHECK(inf.to_string() == "-inf");
    CHECK_THROWS_AS(inf.value(), dao::invariant_error);
}
