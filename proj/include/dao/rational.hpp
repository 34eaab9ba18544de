#pragma once

#include "dao/bigint.hpp"

#include <compare>
#include <string>
#include <string_view>

namespace dao {

// Exact rational scalar. Canonical form: denominator > 0, gcd(|num|, den) = 1,
// zero is 0/1. All mechanism quantities are built from these; floating point
// never enters mechanism logic.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(int v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);

    // Accepts "7", "-3", "2.5", "0.125", and exact fractions "8/3".
    static Rational parse(std::string_view text);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_ == BigInt{1}; }

    Rational abs() const;
    Rational operator-() const;

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b); // throws on b == 0

    Rational& operator+=(const Rational& b) { *this = *this + b; return *this; }
    Rational& operator-=(const Rational& b) { *this = *this - b; return *this; }
    Rational& operator*=(const Rational& b) { *this = *this * b; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

    // Canonical rendering: "256/7", integers without "/1", sign on the numerator.
    std::string to_string() const;

    // Fixed-point decimal approximation (round half away from zero),
    // for display only; never fed back into mechanism logic.
    std::string to_decimal_string(std::size_t digits = 6) const;

private:
    BigInt num_;
    BigInt den_;
    void normalize();
};

// A rational extended with negative infinity, for the budget-violation
// branch of the collective utility. Negative infinity compares strictly
// below every finite value.
class ExtendedValue {
public:
    ExtendedValue() : finite_(true), value_() {}
    ExtendedValue(Rational v) : finite_(true), value_(std::move(v)) {}
    static ExtendedValue neg_infinity();

    bool is_finite() const { return finite_; }
    const Rational& value() const; // throws invariant_error if not finite

    friend bool operator==(const ExtendedValue& a, const ExtendedValue& b);
    friend std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b);

    std::string to_string() const;

private:
    bool finite_;
    Rational value_;
};

} // namespace dao
