#ifndef JACKLAURENT_RATIONAL_HPP
#define JACKLAURENT_RATIONAL_HPP

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <utility>

#include "jacklaurent/errors.hpp"

namespace jacklaurent {

/// Arbitrary-precision rational. Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design, integers embed
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw DivisionByZeroError("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }
    explicit Rational(const mpz_class& z) : v_(z) {}

    /// Parses "n" or "n/d" with optional leading '-'.
    static Rational parse(const std::string& s) {
        mpq_class v;
        if (v.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + s + "'");
        if (v.get_den() == 0) throw DivisionByZeroError("Rational: zero denominator in '" + s + "'");
        v.canonicalize();
        return Rational(std::move(v));
    }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    mpz_class numerator() const { return v_.get_num(); }
    mpz_class denominator() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DivisionByZeroError("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    Rational inverse() const {
        if (is_zero()) throw DivisionByZeroError("Rational: inverse of zero");
        return Rational(mpq_class(1) / v_);
    }

    Rational pow(unsigned e) const {
        Rational r(1), b = *this;
        for (; e; e >>= 1) {
            if (e & 1) r *= b;
            if (e > 1) b *= b;
        }
        return r;
    }

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string str() const { return v_.get_str(); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.v_; }

private:
    mpq_class v_;
};

}  // namespace jacklaurent

#endif
