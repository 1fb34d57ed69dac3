#include "spinhurwitz/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace spinhurwitz {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

BigInt::BigInt(std::int64_t v) {
    if (v == 0) return;
    sign_ = v < 0 ? -1 : 1;
    // careful with INT64_MIN
    u64 m = v < 0 ? (~static_cast<u64>(v) + 1u) : static_cast<u64>(v);
    mag_.push_back(m);
}

void BigInt::trim() {
    while (!mag_.empty() && mag_.back() == 0) mag_.pop_back();
    if (mag_.empty()) sign_ = 0;
}

int BigInt::cmp_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<u64> BigInt::add_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    const auto& lo = a.size() >= b.size() ? b : a;
    const auto& hi = a.size() >= b.size() ? a : b;
    std::vector<u64> r(hi.size() + 1, 0);
    u64 carry = 0;
    for (std::size_t i = 0; i < hi.size(); ++i) {
        u128 s = static_cast<u128>(hi[i]) + (i < lo.size() ? lo[i] : 0) + carry;
        r[i] = static_cast<u64>(s);
        carry = static_cast<u64>(s >> 64);
    }
    r[hi.size()] = carry;
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> BigInt::sub_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    std::vector<u64> r(a.size(), 0);
    u64 borrow = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 bi = i < b.size() ? b[i] : 0;
        u64 ai = a[i];
        u64 t = ai - bi;
        u64 borrow2 = (ai < bi) ? 1u : 0u;
        u64 t2 = t - borrow;
        if (t < borrow) borrow2 = 1;
        r[i] = t2;
        borrow = borrow2;
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

std::vector<u64> BigInt::mul_mag(const std::vector<u64>& a, const std::vector<u64>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        u64 carry = 0;
        u128 ai = a[i];
        for (std::size_t j = 0; j < b.size(); ++j) {
            u128 cur = static_cast<u128>(r[i + j]) + ai * b[j] + carry;
            r[i + j] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
        }
        std::size_t k = i + b.size();
        while (carry) {
            u128 cur = static_cast<u128>(r[k]) + carry;
            r[k] = static_cast<u64>(cur);
            carry = static_cast<u64>(cur >> 64);
            ++k;
        }
    }
    while (!r.empty() && r.back() == 0) r.pop_back();
    return r;
}

namespace {

std::size_t mag_bit_length(const std::vector<u64>& m) {
    if (m.empty()) return 0;
    return 64 * (m.size() - 1) + (64 - std::countl_zero(m.back()));
}

bool mag_get_bit(const std::vector<u64>& m, std::size_t i) {
    return (m[i / 64] >> (i % 64)) & 1u;
}

// r = (r << 1) | bit, in place
void mag_shl1_or(std::vector<u64>& r, bool bit) {
    u64 carry = bit ? 1u : 0u;
    for (auto& limb : r) {
        u64 next = limb >> 63;
        limb = (limb << 1) | carry;
        carry = next;
    }
    if (carry) r.push_back(carry);
}

// single-limb divisor fast path: returns remainder
u64 mag_divmod_small(const std::vector<u64>& a, u64 b, std::vector<u64>& q) {
    q.assign(a.size(), 0);
    u128 rem = 0;
    for (std::size_t i = a.size(); i-- > 0;) {
        u128 cur = (rem << 64) | a[i];
        q[i] = static_cast<u64>(cur / b);
        rem = cur % b;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    return static_cast<u64>(rem);
}

}  // namespace

void BigInt::divmod_mag(const std::vector<u64>& a, const std::vector<u64>& b, std::vector<u64>& q,
                        std::vector<u64>& r) {
    if (b.empty()) throw std::domain_error("BigInt: division by zero");
    if (cmp_mag(a, b) < 0) {
        q.clear();
        r = a;
        return;
    }
    if (b.size() == 1) {
        u64 rem = mag_divmod_small(a, b[0], q);
        r.clear();
        if (rem) r.push_back(rem);
        return;
    }
    // shift-subtract long division; operand sizes here never make this a bottleneck
    std::size_t nbits = mag_bit_length(a);
    q.assign((nbits + 63) / 64, 0);
    r.clear();
    for (std::size_t i = nbits; i-- > 0;) {
        mag_shl1_or(r, mag_get_bit(a, i));
        if (cmp_mag(r, b) >= 0) {
            r = sub_mag(r, b);
            q[i / 64] |= (u64{1} << (i % 64));
        }
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
}

BigInt& BigInt::operator+=(const BigInt& o) {
    if (o.sign_ == 0) return *this;
    if (sign_ == 0) {
        *this = o;
        return *this;
    }
    if (sign_ == o.sign_) {
        mag_ = add_mag(mag_, o.mag_);
    } else {
        int c = cmp_mag(mag_, o.mag_);
        if (c == 0) {
            sign_ = 0;
            mag_.clear();
        } else if (c > 0) {
            mag_ = sub_mag(mag_, o.mag_);
        } else {
            mag_ = sub_mag(o.mag_, mag_);
            sign_ = o.sign_;
        }
    }
    trim();
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += (-o); }

BigInt& BigInt::operator*=(const BigInt& o) {
    if (sign_ == 0 || o.sign_ == 0) {
        sign_ = 0;
        mag_.clear();
        return *this;
    }
    mag_ = mul_mag(mag_, o.mag_);
    sign_ = sign_ * o.sign_;
    trim();
    return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
    std::vector<u64> qm, rm;
    divmod_mag(a.mag_, b.mag_, qm, rm);
    q.mag_ = std::move(qm);
    q.sign_ = q.mag_.empty() ? 0 : a.sign_ * b.sign_;
    r.mag_ = std::move(rm);
    r.sign_ = r.mag_.empty() ? 0 : a.sign_;
}

BigInt& BigInt::operator/=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(q);
    return *this;
}

BigInt& BigInt::operator%=(const BigInt& o) {
    BigInt q, r;
    divmod(*this, o, q, r);
    *this = std::move(r);
    return *this;
}

BigInt BigInt::operator-() const {
    BigInt r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigInt BigInt::abs() const {
    BigInt r = *this;
    r.sign_ = r.sign_ == 0 ? 0 : 1;
    return r;
}

BigInt BigInt::operator<<(unsigned bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    BigInt r;
    r.sign_ = sign_;
    std::size_t limb_shift = bits / 64, bit_shift = bits % 64;
    r.mag_.assign(mag_.size() + limb_shift + 1, 0);
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        r.mag_[i + limb_shift] |= bit_shift ? (mag_[i] << bit_shift) : mag_[i];
        if (bit_shift) r.mag_[i + limb_shift + 1] |= mag_[i] >> (64 - bit_shift);
    }
    r.trim();
    return r;
}

BigInt BigInt::operator>>(unsigned bits) const {
    if (sign_ == 0 || bits == 0) return *this;
    std::size_t limb_shift = bits / 64, bit_shift = bits % 64;
    if (limb_shift >= mag_.size()) return BigInt();
    BigInt r;
    r.sign_ = sign_;
    r.mag_.assign(mag_.size() - limb_shift, 0);
    for (std::size_t i = 0; i < r.mag_.size(); ++i) {
        r.mag_[i] = mag_[i + limb_shift] >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < mag_.size())
            r.mag_[i] |= mag_[i + limb_shift + 1] << (64 - bit_shift);
    }
    r.trim();
    return r;
}

bool operator==(const BigInt& a, const BigInt& b) {
    return a.sign_ == b.sign_ && a.mag_ == b.mag_;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
    if (a.sign_ != b.sign_) return a.sign_ <=> b.sign_;
    int c = BigInt::cmp_mag(a.mag_, b.mag_) * (a.sign_ < 0 ? -1 : 1);
    return c <=> 0;
}

std::size_t BigInt::bit_length() const { return mag_bit_length(mag_); }

bool BigInt::fits_int64() const {
    if (mag_.size() > 1) return false;
    if (mag_.empty()) return true;
    if (sign_ > 0) return mag_[0] <= static_cast<u64>(INT64_MAX);
    return mag_[0] <= static_cast<u64>(INT64_MAX) + 1u;
}

std::int64_t BigInt::to_int64() const {
    if (mag_.empty()) return 0;
    if (sign_ > 0) return static_cast<std::int64_t>(mag_[0]);
    return -static_cast<std::int64_t>(mag_[0] - 1) - 1;
}

std::size_t BigInt::count_trailing_zero_bits() const {
    for (std::size_t i = 0; i < mag_.size(); ++i) {
        if (mag_[i]) return 64 * i + std::countr_zero(mag_[i]);
    }
    return 0;
}

BigInt gcd(BigInt a, BigInt b) {
    a.sign_ = a.mag_.empty() ? 0 : 1;
    b.sign_ = b.mag_.empty() ? 0 : 1;
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    // binary gcd: no division needed
    std::size_t za = a.count_trailing_zero_bits();
    std::size_t zb = b.count_trailing_zero_bits();
    unsigned common = static_cast<unsigned>(std::min(za, zb));
    a = a >> static_cast<unsigned>(za);
    b = b >> static_cast<unsigned>(zb);
    while (true) {
        if (a > b) std::swap(a, b);
        b -= a;
        if (b.is_zero()) return a << common;
        b = b >> static_cast<unsigned>(b.count_trailing_zero_bits());
    }
}

BigInt pow(BigInt base, unsigned exp) {
    BigInt result(1);
    while (exp) {
        if (exp & 1u) result *= base;
        exp >>= 1;
        if (exp) base *= base;
    }
    return result;
}

BigInt isqrt(const BigInt& n) {
    if (n.is_negative()) throw std::domain_error("isqrt of negative value");
    if (n.is_zero()) return BigInt();
    std::size_t bl = n.bit_length();
    BigInt x = BigInt(1) << static_cast<unsigned>((bl + 1) / 2);  // x >= sqrt(n)
    while (true) {
        BigInt y = (x + n / x) >> 1;
        if (y >= x) return x;
        x = std::move(y);
    }
}

bool is_perfect_square(const BigInt& n) {
    if (n.is_negative()) return false;
    BigInt s = isqrt(n);
    return s * s == n;
}

std::string BigInt::to_string() const {
    if (sign_ == 0) return "0";
    constexpr u64 kChunk = 10'000'000'000'000'000'000ull;  // 10^19
    std::vector<u64> cur = mag_, next;
    std::string digits;
    while (!cur.empty()) {
        u64 rem = mag_divmod_small(cur, kChunk, next);
        cur.swap(next);
        std::string part = std::to_string(rem);
        if (!cur.empty()) part.insert(0, 19 - part.size(), '0');
        digits.insert(0, part);
    }
    if (sign_ < 0) digits.insert(0, "-");
    return digits;
}

BigInt BigInt::from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigInt: empty string");
    int sign = 1;
    std::size_t pos = 0;
    if (s[0] == '+' || s[0] == '-') {
        sign = s[0] == '-' ? -1 : 1;
        pos = 1;
    }
    if (pos == s.size()) throw std::invalid_argument("BigInt: no digits");
    BigInt r;
    const BigInt ten_pow9(1'000'000'000);
    while (pos < s.size()) {
        std::size_t take = std::min<std::size_t>(9, s.size() - pos);
        std::uint64_t chunk = 0;
        for (std::size_t i = 0; i < take; ++i) {
            char c = s[pos + i];
            if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
            chunk = chunk * 10 + static_cast<std::uint64_t>(c - '0');
        }
        BigInt scale = take == 9 ? ten_pow9 : pow(BigInt(10), static_cast<unsigned>(take));
        r = r * scale + BigInt(static_cast<std::int64_t>(chunk));
        pos += take;
    }
    if (sign < 0) r = -r;
    return r;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace spinhurwitz
