#include "dao/rational.hpp"

#include "dao/errors.hpp"

#include <utility>

namespace dao {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw invariant_error("rational with zero denominator");
    normalize();
}

void Rational::normalize() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt{1};
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    if (g == BigInt{1}) return;
    BigInt q, r;
    BigInt::divmod(num_.abs(), g, q, r);
    num_ = num_.is_negative() ? -q : q;
    BigInt::divmod(den_, g, q, r);
    den_ = q;
}

Rational Rational::abs() const {
    Rational r = *this;
    r.num_ = r.num_.abs();
    return r;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational operator+(const Rational& a, const Rational& b) {
    return Rational{a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator-(const Rational& a, const Rational& b) {
    return Rational{a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
}

Rational operator*(const Rational& a, const Rational& b) {
    return Rational{a.num_ * b.num_, a.den_ * b.den_};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw invariant_error("rational division by zero");
    return Rational{a.num_ * b.den_, a.den_ * b.num_};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    // Denominators are positive, so cross-multiplication preserves order.
    return BigInt::compare(a.num_ * b.den_, b.num_ * a.den_) <=> 0;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw parse_error("empty rational literal");
    auto slash = text.find('/');
    if (slash != std::string_view::npos) {
        BigInt num = BigInt::from_decimal(text.substr(0, slash));
        BigInt den = BigInt::from_decimal(text.substr(slash + 1));
        if (den.is_zero()) throw parse_error("fraction with zero denominator: " + std::string(text));
        if (den.is_negative()) throw parse_error("fraction denominator must be positive: " + std::string(text));
        return Rational{std::move(num), std::move(den)};
    }
    auto dot = text.find('.');
    if (dot == std::string_view::npos) {
        return Rational{BigInt::from_decimal(text), BigInt{1}};
    }
    std::string_view whole = text.substr(0, dot);
    std::string_view frac = text.substr(dot + 1);
    if (frac.empty()) throw parse_error("decimal literal with empty fraction part: " + std::string(text));
    bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+")
        throw parse_error("decimal literal with empty whole part: " + std::string(text));
    BigInt scaled = BigInt::from_decimal(whole).abs();
    BigInt den{1};
    const BigInt ten{10};
    for (char c : frac) {
        if (c < '0' || c > '9')
            throw parse_error(std::string("invalid digit in decimal literal: '") + c + "'");
        scaled = scaled * ten + BigInt{c - '0'};
        den = den * ten;
    }
    if (neg) scaled = -scaled;
    return Rational{std::move(scaled), std::move(den)};
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::string Rational::to_decimal_string(std::size_t digits) const {
    // round(|x| * 10^digits) with half away from zero, then place the point.
    BigInt scale{1};
    const BigInt ten{10};
    for (std::size_t i = 0; i < digits; ++i) scale = scale * ten;
    BigInt q, r;
    BigInt::divmod(num_.abs() * scale, den_, q, r);
    if (BigInt::compare(r + r, den_) >= 0) q = q + BigInt{1};
    std::string s = q.to_string();
    if (s.size() <= digits) s.insert(0, digits + 1 - s.size(), '0');
    std::string out;
    if (is_negative()) out.push_back('-');
    out += s.substr(0, s.size() - digits);
    if (digits > 0) {
        out.push_back('.');
        out += s.substr(s.size() - digits);
    }
    return out;
}

ExtendedValue ExtendedValue::neg_infinity() {
    ExtendedValue v;
    v.finite_ = false;
    return v;
}

const Rational& ExtendedValue::value() const {
    if (!finite_) throw invariant_error("value() on negative infinity");
    return value_;
}

bool operator==(const ExtendedValue& a, const ExtendedValue& b) {
    if (a.finite_ != b.finite_) return false;
    return !a.finite_ || a.value_ == b.value_;
}

std::strong_ordering operator<=>(const ExtendedValue& a, const ExtendedValue& b) {
    if (!a.finite_ && !b.finite_) return std::strong_ordering::equal;
    if (!a.finite_) return std::strong_ordering::less;
    if (!b.finite_) return std::strong_ordering::greater;
    return a.value_ <=> b.value_;
}

std::string ExtendedValue::to_string() const {
    return finite_ ? value_.to_string() : "-inf";
}

} // namespace dao
