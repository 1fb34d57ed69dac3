#pragma once

#include <Eigen/Core>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "spinhurwitz/bigint.hpp"

namespace spinhurwitz {

/// Exact rational number, always reduced, denominator > 0.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t v) : num_(v), den_(1) {}
    Rational(const BigInt& v) : num_(v), den_(1) {}
    Rational(BigInt num, BigInt den);

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_negative() const { return num_.is_negative(); }
    bool is_integer() const { return den_ == BigInt(1); }

    Rational operator-() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return (a.num_ * b.den_) <=> (b.num_ * a.den_);
    }

    /// Integer power, negative exponents allowed for nonzero values.
    Rational pow_int(long e) const;

    /// Exact 2^e for any integer e.
    static Rational two_pow(long e);

    /// Canonical "num/den" form, e.g. "-3/4", "5/1".
    std::string to_string() const;
    /// Accepts "num/den" or a bare integer.
    static Rational from_string(std::string_view s);

    friend std::ostream& operator<<(std::ostream& os, const Rational& v);

private:
    BigInt num_, den_;
    void reduce();
};

inline Rational abs(const Rational& v) { return v.is_negative() ? -v : v; }

/// Exact square root of a non-negative rational if it is a perfect square.
std::optional<Rational> sqrt_exact(const Rational& v);

}  // namespace spinhurwitz

namespace Eigen {

template <>
struct NumTraits<spinhurwitz::Rational> : GenericNumTraits<spinhurwitz::Rational> {
    using Real = spinhurwitz::Rational;
    using NonInteger = spinhurwitz::Rational;
    using Nested = spinhurwitz::Rational;
    using Literal = spinhurwitz::Rational;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 8,
        AddCost = 64,
        MulCost = 64,
    };
    static inline Real epsilon() { return Real(0); }
    static inline Real dummy_precision() { return Real(0); }
    static inline int digits10() { return 0; }
};

}  // namespace Eigen
