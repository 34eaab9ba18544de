#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace dao {

// Arbitrary-precision signed integer. Sign-magnitude over 32-bit limbs,
// little-endian, canonical form (no high zero limbs; zero has sign 0 and an
// empty magnitude). Sizes in this project stay small (a few limbs), so
// schoolbook multiplication and Knuth-D division are plenty.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);
    BigInt(unsigned long long v);
    BigInt(int v) : BigInt(static_cast<long long>(v)) {}
    BigInt(long v) : BigInt(static_cast<long long>(v)) {}
    BigInt(unsigned int v) : BigInt(static_cast<unsigned long long>(v)) {}
    BigInt(unsigned long v) : BigInt(static_cast<unsigned long long>(v)) {}

    // Decimal digits with optional leading '-'. Throws parse_error.
    static BigInt from_decimal(std::string_view text);

    bool is_zero() const { return sign_ == 0; }
    int sgn() const { return sign_; }
    bool is_negative() const { return sign_ < 0; }

    BigInt abs() const;
    BigInt operator-() const;

    friend BigInt operator+(const BigInt& a, const BigInt& b);
    friend BigInt operator-(const BigInt& a, const BigInt& b);
    friend BigInt operator*(const BigInt& a, const BigInt& b);

    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // Floor division of nonnegative num by positive den: num = q*den + r,
    // 0 <= r < den. Throws invariant_error on negative num or den <= 0.
    static void divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r);

    // gcd(|a|, |b|); gcd(0, 0) = 0.
    static BigInt gcd(const BigInt& a, const BigInt& b);

    static int compare(const BigInt& a, const BigInt& b);
    friend bool operator==(const BigInt& a, const BigInt& b) { return compare(a, b) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        return compare(a, b) <=> 0;
    }

    // Exact value if it fits in int64, used by tests and small fast paths.
    bool fits_int64() const;
    std::int64_t to_int64() const; // throws invariant_error if out of range

    std::string to_string() const;

    std::size_t limb_count() const { return mag_.size(); }

private:
    int sign_ = 0;
    std::vector<std::uint32_t> mag_;

    void trim();
    static int cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> add_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    // Requires |a| >= |b|.
    static std::vector<std::uint32_t> sub_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static std::vector<std::uint32_t> mul_mag(const std::vector<std::uint32_t>& a,
                                              const std::vector<std::uint32_t>& b);
    static void shl_bits(std::vector<std::uint32_t>& a, unsigned bits);
    static void shr_bits(std::vector<std::uint32_t>& a, unsigned bits);
    static unsigned trailing_zero_bits(const std::vector<std::uint32_t>& a);
};

} // namespace dao
