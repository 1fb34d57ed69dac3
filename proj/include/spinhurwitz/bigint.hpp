#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace spinhurwitz {

/// Arbitrary-precision signed integer, sign-magnitude with 64-bit limbs.
/// Magnitudes in this project stay small (a few hundred bits), so schoolbook
/// multiplication and shift-subtract division are plenty.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);

    static BigInt from_string(std::string_view s);
    std::string to_string() const;

    int sign() const { return sign_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_negative() const { return sign_ < 0; }
    bool is_odd() const { return sign_ != 0 && (mag_[0] & 1u); }
    bool is_even() const { return !is_odd(); }

    /// Number of bits in the magnitude; 0 for zero.
    std::size_t bit_length() const;

    /// Fits in int64? (used for fast paths and sanity checks)
    bool fits_int64() const;
    std::int64_t to_int64() const;  // precondition: fits_int64()

    BigInt operator-() const;
    BigInt abs() const;

    BigInt& operator+=(const BigInt& o);
    BigInt& operator-=(const BigInt& o);
    BigInt& operator*=(const BigInt& o);
    BigInt& operator/=(const BigInt& o);  // truncated toward zero
    BigInt& operator%=(const BigInt& o);  // sign follows dividend

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }
    friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
    friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

    BigInt operator<<(unsigned bits) const;
    BigInt operator>>(unsigned bits) const;

    friend bool operator==(const BigInt& a, const BigInt& b);
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

    /// Quotient and remainder in one pass, |r| < |b|, q truncated toward zero.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

    friend BigInt gcd(BigInt a, BigInt b);
    friend BigInt pow(BigInt base, unsigned exp);

    /// Floor of sqrt for non-negative input.
    friend BigInt isqrt(const BigInt& n);

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

private:
    int sign_ = 0;                    // -1, 0, +1
    std::vector<std::uint64_t> mag_;  // little-endian, trimmed, empty iff sign_==0

    void trim();
    static int cmp_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> add_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    // requires |a| >= |b|
    static std::vector<std::uint64_t> sub_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static std::vector<std::uint64_t> mul_mag(const std::vector<std::uint64_t>& a,
                                              const std::vector<std::uint64_t>& b);
    static void divmod_mag(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                           std::vector<std::uint64_t>& q, std::vector<std::uint64_t>& r);
    std::size_t count_trailing_zero_bits() const;
};

bool is_perfect_square(const BigInt& n);

}  // namespace spinhurwitz
