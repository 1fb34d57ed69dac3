#include "spinhurwitz/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace spinhurwitz {

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
    reduce();
}

void Rational::reduce() {
    if (den_.is_negative()) {
        num_ = -num_;
        den_ = -den_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ /= g;
        den_ /= g;
    }
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    num_ = num_ * o.den_ - o.num_ * den_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    reduce();
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    reduce();
    return *this;
}

Rational Rational::pow_int(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw std::domain_error("Rational: negative power of zero");
        return Rational(0);
    }
    unsigned mag = e < 0 ? static_cast<unsigned>(-(e + 1)) + 1u : static_cast<unsigned>(e);
    Rational r;
    if (e > 0) {
        r.num_ = pow(num_, mag);
        r.den_ = pow(den_, mag);
    } else {
        r.num_ = pow(den_, mag);
        r.den_ = pow(num_, mag);
    }
    r.reduce();  // fixes denominator sign for negative bases
    return r;
}

Rational Rational::two_pow(long e) {
    return Rational(2).pow_int(e);
}

std::string Rational::to_string() const {
    return num_.to_string() + "/" + den_.to_string();
}

Rational Rational::from_string(std::string_view s) {
    auto slash = s.find('/');
    if (slash == std::string_view::npos) return Rational(BigInt::from_string(s));
    return Rational(BigInt::from_string(s.substr(0, slash)),
                    BigInt::from_string(s.substr(slash + 1)));
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

std::optional<Rational> sqrt_exact(const Rational& v) {
    if (v.is_negative()) return std::nullopt;
    BigInt sn = isqrt(v.num());
    if (sn * sn != v.num()) return std::nullopt;
    BigInt sd = isqrt(v.den());
    if (sd * sd != v.den()) return std::nullopt;
    return Rational(sn, sd);
}

}  // namespace spinhurwitz
