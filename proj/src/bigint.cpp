#include "dao/bigint.hpp"

#include "dao/errors.hpp"

#include <algorithm>
#include <bit>
#include <limits>

namespace dao {

namespace {
constexpr std::uint64_t kBase = 1ull << 32;
} // namespace

BigInt::BigInt(long long v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // Avoid overflow on LLONG_MIN by widening before negation.
    std::uint64_t u = v < 0 ? ~static_cast<std::uint64_t>(v) + 1 : static_cast<std::uint64_t>(v);
    mag_.push_back(static_cast<std::uint32_t>(u & 0xffffffffu));
    if (u >> 32) mag_.push_back(static_cast<std::uint32_t>(u >> 32));
}

BigInt::BigInt(unsigned long long v) {
    if (v == 0) return;
    sign_ = 1;
    mag_.push_back(static_cast<std::uint32_t>(v & 0xffffffffu));
    if (v >> 32) mag_.push_back(static_cast<std::uint32_t>(v >> 32));
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<std::uint32_t> BigInt::add_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<std::uint32_t> r;
    r.reserve(hi.size() + 1);
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        std::uint64_t s = carry + hi[i] + (i < lo.size() ? lo[i] : 0u);
        r.push_back(static_cast<std::uint32_t>(s & 0xffffffffu));
        carry = s >> 32;
    }
    if (carry) r.push_back(static_cast<std::uint32_t>(carry));
    return r;
}

std::vector<std::uint32_t> BigInt::sub_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> r;
    r.reserve(a.size());
    std::int64_t borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::int64_t d = static_cast<std::int64_t>(a[i]) - borrow -
                         (i < b.size() ? static_cast<std::int64_t>(b[i]) : 0);
        if (d < 0) {
            d += static_cast<std::int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        r.push_back(static_cast<std::uint32_t>(d));
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<std::uint32_t> BigInt::mul_mag(const std::vector<std::uint32_t>& a,
                                           const std::vector<std::uint32_t>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<std::uint32_t> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t carry = 0;
        for (std::size_t j = 0; j < b.size(); ++j) {
            std::uint64_t cur = static_cast<std::uint64_t>(a[i]) * b[j] + r[i + j] + carry;
            r[i + j] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t k = i + b.size();
        while (carry) {
            std::uint64_t cur = r[k] + carry;
            r[k] = static_cast<std::uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

void BigInt::shl_bits(std::vector<std::uint32_t>& a, unsigned bits) {
    if (a.empty() || bits == 0) return;
    unsigned limbs = bits / 32, rem = bits % 32;
    if (rem) {
        std::uint32_t carry = 0;
        for (auto& limb : a) {
            std::uint32_t next = limb >> (32 - rem);
            limb = (limb << rem) | carry;
            carry = next;
        }
        if (carry) a.push_back(carry);
    }
    if (limbs) a.insert(a.begin(), limbs, 0u);
}

void BigInt::shr_bits(std::vector<std::uint32_t>& a, unsigned bits) {
    unsigned limbs = bits / 32, rem = bits % 32;
    if (limbs >= a.size()) {
        a.clear();
        return;
    }
    if (limbs) a.erase(a.begin(), a.begin() + limbs);
    if (rem) {
        std::uint32_t carry = 0;
        for (std::size_t i = a.size(); i-- > 0;) {
            std::uint32_t next = a[i] << (32 - rem);
            a[i] = (a[i] >> rem) | carry;
            carry = next;
        }
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned BigInt::trailing_zero_bits(const std::vector<std::uint32_t>& a) {
    unsigned bits = 0;
    for (std::uint32_t limb : a) {
        if (limb == 0) {
            bits += 32;
        } else {
            return bits + static_cast<unsigned>(std::countr_zero(limb));
        }
    }
    return bits;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    if (r.sign_ < 0) r.sign_ = 1;
    return r;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
    if (a.sign_ == 0) return b;
    if (b.sign_ == 0) return a;
    BigInt r;
    if (a.sign_ == b.sign_) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::add_mag(a.mag_, b.mag_);
        return r;
    }
    int c = BigInt::cmp_mag(a.mag_, b.mag_);
    if (c == 0) return BigInt{};
    if (c > 0) {
        r.sign_ = a.sign_;
        r.mag_ = BigInt::sub_mag(a.mag_, b.mag_);
    } else {
        r.sign_ = b.sign_;
        r.mag_ = BigInt::sub_mag(b.mag_, a.mag_);
    }
    return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) { return a + (-b); }

BigInt operator*(const BigInt& a, const BigInt& b) {
    BigInt r;
    if (a.sign_ == 0 || b.sign_ == 0) return r;
    r.sign_ = a.sign_ * b.sign_;
    r.mag_ = BigInt::mul_mag(a.mag_, b.mag_);
    return r;
}

int BigInt::compare(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ < b.sign_ ? -1 : 1;
    int c = cmp_mag(a.mag_, b.mag_);
    return a.sign_ >= 0 ? c : -c;
}

void BigInt::divmod(const BigInt& num, const BigInt& den, BigInt& q, BigInt& r) {
    if (num.sign_ < 0) throw invariant_error("divmod: negative dividend");
    if (den.sign_ <= 0) throw invariant_error("divmod: divisor must be positive");
    if (cmp_mag(num.mag_, den.mag_) < 0) {
        q = BigInt{};
        r = num;
        return;
    }
    if (den.mag_.size() == 1) {
        std::uint64_t d = den.mag_[0];
        std::vector<std::uint32_t> quot(num.mag_.size(), 0);
        std::uint64_t rem = 0;
        for (std::size_t i = num.mag_.size(); i-- > 0;) {
            std::uint64_t cur = (rem << 32) | num.mag_[i];
            quot[i] = static_cast<std::uint32_t>(cur / d);
            rem = cur % d;
        }
        q = BigInt{};
        q.mag_ = std::move(quot);
        q.sign_ = 1;
        q.trim();
        r = BigInt{static_cast<unsigned long long>(rem)};
        return;
    }

    // Knuth algorithm D.
    const unsigned shift = static_cast<unsigned>(std::countl_zero(den.mag_.back()));
    std::vector<std::uint32_t> v = den.mag_;
    std::vector<std::uint32_t> u = num.mag_;
    shl_bits(v, shift);
    shl_bits(u, shift);
    const std::size_t n = v.size();
    u.resize(std::max(u.size(), num.mag_.size() + 1), 0u);
    if (u.size() < n + 1) u.resize(n + 1, 0u);
    const std::size_t m = u.size() - n - 1 + 1; // number of quotient limbs
    std::vector<std::uint32_t> quot(m, 0);

    for (std::size_t j = m; j-- > 0;) {
        std::uint64_t num2 = (static_cast<std::uint64_t>(u[j + n]) << 32) | u[j + n - 1];
        std::uint64_t qhat = num2 / v[n - 1];
        std::uint64_t rhat = num2 % v[n - 1];
        while (qhat >= kBase ||
               qhat * v[n - 2] > ((rhat << 32) | u[j + n - 2])) {
            --qhat;
            rhat += v[n - 1];
            if (rhat >= kBase) break;
        }
        // Multiply-subtract qhat * v from u[j .. j+n].
        std::int64_t borrow = 0;
        std::uint64_t carry = 0;
        for (std::size_t i = 0; i < n; ++i) {
            std::uint64_t prod = qhat * v[i] + carry;
            carry = prod >> 32;
            std::int64_t diff = static_cast<std::int64_t>(u[i + j]) -
                                static_cast<std::int64_t>(prod & 0xffffffffu) - borrow;
            if (diff < 0) {
                diff += static_cast<std::int64_t>(kBase);
                borrow = 1;
            } else {
                borrow = 0;
            }
            u[i + j] = static_cast<std::uint32_t>(diff);
        }
        std::int64_t top = static_cast<std::int64_t>(u[j + n]) -
                           static_cast<std::int64_t>(carry) - borrow;
        if (top < 0) {
            // qhat was one too large; add v back.
            top += static_cast<std::int64_t>(kBase);
            --qhat;
            std::uint64_t c2 = 0;
            for (std::size_t i = 0; i < n; ++i) {
                std::uint64_t s = static_cast<std::uint64_t>(u[i + j]) + v[i] + c2;
                u[i + j] = static_cast<std::uint32_t>(s & 0xffffffffu);
                c2 = s >> 32;
            }
            top += static_cast<std::int64_t>(c2);
            top &= static_cast<std::int64_t>(kBase - 1);
        }
        u[j + n] = static_cast<std::uint32_t>(top);
        quot[j] = static_cast<std::uint32_t>(qhat);
    }

    q = BigInt{};
    q.mag_ = std::move(quot);
    q.sign_ = 1;
    q.trim();

    u.resize(n);
    shr_bits(u, shift);
    r = BigInt{};
    r.mag_ = std::move(u);
    r.sign_ = 1;
    r.trim();
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    std::vector<std::uint32_t> x = a.mag_, y = b.mag_;
    if (x.empty()) {
        BigInt r;
        r.mag_ = y;
        r.sign_ = y.empty() ? 0 : 1;
        return r;
    }
    if (y.empty()) {
        BigInt r;
        r.mag_ = x;
        r.sign_ = 1;
        return r;
    }
    unsigned tx = trailing_zero_bits(x), ty = trailing_zero_bits(y);
    unsigned shared = std::min(tx, ty);
    shr_bits(x, tx);
    shr_bits(y, ty);
    while (!y.empty()) {
        if (cmp_mag(x, y) > 0) x.swap(y);
        y = sub_mag(y, x);
        if (!y.empty()) shr_bits(y, trailing_zero_bits(y));
    }
    shl_bits(x, shared);
    BigInt r;
    r.mag_ = std::move(x);
    r.sign_ = 1;
    return r;
}

bool BigInt::fits_int64() const {
    if (mag_.size() > 2) return false;
    if (mag_.size() < 2) return true;
    std::uint64_t u = (static_cast<std::uint64_t>(mag_[1]) << 32) | mag_[0];
    if (sign_ > 0) return u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max());
    return u <= static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) + 1;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw invariant_error("BigInt::to_int64: out of range");
    std::uint64_t u = 0;
    if (!mag_.empty()) u = mag_[0];
    if (mag_.size() == 2) u |= static_cast<std::uint64_t>(mag_[1]) << 32;
    if (sign_ < 0) return -static_cast<std::int64_t>(u - 1) - 1;
    return static_cast<std::int64_t>(u);
}

BigInt BigInt::from_decimal(std::string_view text) {
    if (text.empty()) throw parse_error("empty integer literal");
    bool neg = false;
    std::size_t i = 0;
    if (text[0] == '-' || text[0] == '+') {
        neg = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw parse_error("integer literal has no digits");
    BigInt r;
    const BigInt ten{10};
    for (; i < text.size(); ++i) {
        char c = text[i];
        if (c < '0' || c > '9')
            throw parse_error(std::string("invalid digit in integer literal: '") + c + "'");
        r = r * ten + BigInt{c - '0'};
    }
    if (neg) r = -r;
    return r;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    // Peel 9 decimal digits at a time via the single-limb divmod path.
    BigInt cur = abs();
    const BigInt chunk{1000000000ll};
    std::vector<std::uint32_t> parts;
    BigInt q, r;
    while (!cur.is_zero()) {
        divmod(cur, chunk, q, r);
        parts.push_back(r.mag_.empty() ? 0u : r.mag_[0]);
        cur = q;
    }
    std::string out;
    if (sign_ < 0) out.push_back('-');
    out += std::to_string(parts.back());
    for (std::size_t i = parts.size() - 1; i-- > 0;) {
        std::string piece = std::to_string(parts[i]);
        out += std::string(9 - piece.size(), '0');
        out += piece;
    }
    return out;
}

} // namespace dao
