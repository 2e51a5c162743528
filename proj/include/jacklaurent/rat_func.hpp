#ifndef JACKLAURENT_RAT_FUNC_HPP
#define JACKLAURENT_RAT_FUNC_HPP

#include <string>
#include <utility>

#include "jacklaurent/param_poly.hpp"

namespace jacklaurent {

/// Element of Q(k, p0) in normal form: gcd(num, den) = 1 and the denominator's
/// deg-lex leading coefficient is 1, so equality is syntactic.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(long c) : num_(c), den_(1) {}  // NOLINT: integers embed
    RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT: rationals embed
    explicit RatFunc(ParamPoly p) : num_(std::move(p)), den_(1) {}
    RatFunc(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw DivisionByZeroError("RatFunc: zero denominator");
        normalize();
    }

    static RatFunc k() { return RatFunc(ParamPoly::k()); }
    static RatFunc p0() { return RatFunc(ParamPoly::p0()); }

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }
    bool is_constant() const { return num_.is_constant() && den_.is_one(); }
    Rational constant_value() const { return num_.constant_value(); }

    RatFunc operator-() const {
        RatFunc r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero()) return b;
        if (b.is_zero()) return a;
        if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
        if (a.is_zero() || b.is_zero()) return RatFunc();
        if (a.den_.is_one() && b.den_.is_one()) {
            RatFunc r;
            r.num_ = a.num_ * b.num_;
            return r;
        }
        // cross-reduce before multiplying to keep degrees low
        ParamPoly g1 = ParamPoly::gcd(a.num_, b.den_);
        ParamPoly g2 = ParamPoly::gcd(b.num_, a.den_);
        ParamPoly n1 = g1.is_one() ? a.num_ : ParamPoly::divide_exact(a.num_, g1);
        ParamPoly d2 = g1.is_one() ? b.den_ : ParamPoly::divide_exact(b.den_, g1);
        ParamPoly n2 = g2.is_one() ? b.num_ : ParamPoly::divide_exact(b.num_, g2);
        ParamPoly d1 = g2.is_one() ? a.den_ : ParamPoly::divide_exact(a.den_, g2);
        return RatFunc(n1 * n2, d1 * d2);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
        if (b.is_zero()) throw DivisionByZeroError("RatFunc: division by zero");
        RatFunc binv;
        binv.num_ = b.den_;
        binv.den_ = b.num_;
        binv.normalize();
        return a * binv;
    }
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

    /// Exact composition f(k_image, p0_image); throws PoleError when the denominator
    /// vanishes identically under the substitution.
    RatFunc substitute(const RatFunc& k_image, const RatFunc& p0_image) const {
        RatFunc dn = den_.eval_at<RatFunc>(k_image, p0_image);
        if (dn.is_zero())
            throw PoleError("RatFunc::substitute: denominator vanishes identically");
        RatFunc nm = num_.eval_at<RatFunc>(k_image, p0_image);
        return nm / dn;
    }

    /// Exact value at a point; throws PoleError at poles, reporting the vanishing denominator.
    Rational eval(const Rational& k_val, const Rational& p0_val) const {
        Rational dv = den_.eval(k_val, p0_val);
        if (dv.is_zero())
            throw PoleError("RatFunc::eval: pole, denominator " + den_.str() +
                            " vanishes at k=" + k_val.str() + ", p0=" + p0_val.str());
        return num_.eval(k_val, p0_val) / dv;
    }

    std::string str() const {
        if (den_.is_one()) return num_.str();
        const bool par_num = num_.terms().size() > 1;
        const bool par_den = den_.terms().size() > 1;
        std::string s;
        s += par_num ? "(" + num_.str() + ")" : num_.str();
        s += " / ";
        s += par_den ? "(" + den_.str() + ")" : den_.str();
        return s;
    }

private:
    ParamPoly num_, den_;

    void normalize() {
        if (num_.is_zero()) {
            den_ = ParamPoly(1);
            return;
        }
        if (!den_.is_one()) {
            ParamPoly g = ParamPoly::gcd(num_, den_);
            if (!g.is_one() && !g.is_constant()) {
                num_ = ParamPoly::divide_exact(num_, g);
                den_ = ParamPoly::divide_exact(den_, g);
            }
            Rational lc = den_.leading_coeff();
            if (!lc.is_one()) {
                Rational inv = lc.inverse();
                num_ = num_.scaled(inv);
                den_ = den_.scaled(inv);
            }
        }
    }
};

/// Parameter bindings for the coefficient field F: the images of the formal k and p0.
template <class F>
struct Params {
    F k;
    F p0;
};

inline Params<RatFunc> symbolic_params() { return {RatFunc::k(), RatFunc::p0()}; }
inline Params<Rational> numeric_params(const Rational& k, const Rational& p0) { return {k, p0}; }

/// True when the bindings are the formal generators themselves (the memoizable case).
inline bool is_symbolic(const Params<RatFunc>& ps) {
    return ps.k == RatFunc::k() && ps.p0 == RatFunc::p0();
}
inline bool is_symbolic(const Params<Rational>&) { return false; }

}  // namespace jacklaurent

#endif
