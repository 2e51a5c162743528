#ifndef JACKLAURENT_PARAM_POLY_HPP
#define JACKLAURENT_PARAM_POLY_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "jacklaurent/rational.hpp"

namespace jacklaurent {

/// Exponent pair of a term c * k^dk * p0^dp.
struct ParamExp {
    int dk = 0;
    int dp = 0;
    friend bool operator==(ParamExp a, ParamExp b) { return a.dk == b.dk && a.dp == b.dp; }
};

/// Degree-lexicographic order with k before p0; map order, so the leading term sits at rbegin().
struct ParamExpDegLexLess {
    bool operator()(ParamExp a, ParamExp b) const {
        const int ta = a.dk + a.dp, tb = b.dk + b.dp;
        if (ta != tb) return ta < tb;
        return a.dk < b.dk;
    }
};

namespace detail {
using ZPoly = std::vector<mpz_class>;    // univariate in p0, integer coefficients, trimmed
using ZkPoly = std::vector<ZPoly>;       // coefficient of k^i is a ZPoly, trimmed

inline void zp_trim(ZPoly& a) {
    while (!a.empty() && sgn(a.back()) == 0) a.pop_back();
}
inline bool zp_is_zero(const ZPoly& a) { return a.empty(); }
inline int zp_deg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    zp_trim(r);
    return r;
}

inline ZPoly zp_scale(const ZPoly& a, const mpz_class& c) {
    if (sgn(c) == 0) return {};
    ZPoly r = a;
    for (auto& x : r) x *= c;
    return r;
}

inline ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    zp_trim(r);
    return r;
}

inline mpz_class zp_content(const ZPoly& a) {
    mpz_class g = 0;
    for (const auto& c : a) { mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t()); if (g == 1) break; }
    return g;
}

inline ZPoly zp_div_mpz(const ZPoly& a, const mpz_class& c) {
    ZPoly r = a;
    for (auto& x : r) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        x = q;
    }
    return r;
}

/// Exact division a / b over Z[p0]; valid only when b | a.
inline ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
    if (zp_is_zero(a)) return {};
    ZPoly rem = a, q(a.size() - b.size() + 1, mpz_class(0));
    const mpz_class& lb = b.back();
    for (int d = zp_deg(rem); d >= zp_deg(b); d = zp_deg(rem)) {
        mpz_class c;
        mpz_divexact(c.get_mpz_t(), rem[d].get_mpz_t(), lb.get_mpz_t());
        q[d - zp_deg(b)] = c;
        for (int i = 0; i <= zp_deg(b); ++i) rem[d - zp_deg(b) + i] -= c * b[i];
        zp_trim(rem);
        if (zp_is_zero(rem)) break;
    }
    return q;
}

inline ZPoly zp_primitive(const ZPoly& a) {
    if (zp_is_zero(a)) return a;
    mpz_class c = zp_content(a);
    if (sgn(a.back()) < 0) c = -c;
    return zp_div_mpz(a, c);
}

/// gcd over Z[p0] via integer content + primitive PRS; result primitive with positive lead.
inline ZPoly zp_gcd(ZPoly a, ZPoly b) {
    if (zp_is_zero(a)) return zp_primitive(b);
    if (zp_is_zero(b)) return zp_primitive(a);
    mpz_class ca = zp_content(a), cb = zp_content(b), cg;
    mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
    a = zp_div_mpz(a, ca);
    b = zp_div_mpz(b, cb);
    if (zp_deg(a) < zp_deg(b)) std::swap(a, b);
    while (!zp_is_zero(b)) {
        // pseudo-remainder of lc(b)^(da-db+1) * a by b
        int da = zp_deg(a), db = zp_deg(b);
        mpz_class lb = b.back();
        ZPoly rem = a;
        for (int d = da; d >= db && !zp_is_zero(rem); d = zp_deg(rem)) {
            mpz_class lead = rem.back();
            for (auto& x : rem) x *= lb;
            for (int i = 0; i <= db; ++i) rem[d - db + i] -= lead * b[i];
            zp_trim(rem);
        }
        a = b;
        b = zp_primitive(rem);
    }
    a = zp_primitive(a);
    for (auto& x : a) x *= cg;
    return a;
}

inline void zk_trim(ZkPoly& a) {
    while (!a.empty() && zp_is_zero(a.back())) a.pop_back();
}
inline bool zk_is_zero(const ZkPoly& a) { return a.empty(); }
inline int zk_deg(const ZkPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZPoly zk_content(const ZkPoly& a) {
    ZPoly g;
    for (const auto& c : a) {
        g = zp_gcd(g, c);
        if (zp_deg(g) == 0 && !zp_is_zero(g) && g[0] == 1) break;
    }
    return g;
}

inline ZkPoly zk_divide_coeffs(const ZkPoly& a, const ZPoly& c) {
    ZkPoly r = a;
    for (auto& x : r)
        if (!zp_is_zero(x)) x = zp_divexact(x, c);
    return r;
}

inline ZkPoly zk_primitive(const ZkPoly& a) {
    if (zk_is_zero(a)) return a;
    ZPoly c = zk_content(a);
    if (sgn(a.back().back()) < 0)
        for (auto& x : c) x = -x;
    return zk_divide_coeffs(a, c);
}

/// Pseudo-remainder of a by b in the main variable k, coefficients in Z[p0].
inline ZkPoly zk_prem(const ZkPoly& a, const ZkPoly& b) {
    ZkPoly rem = a;
    const ZPoly& lb = b.back();
    const int db = zk_deg(b);
    while (!zk_is_zero(rem) && zk_deg(rem) >= db) {
        ZPoly lead = rem.back();
        int shift = zk_deg(rem) - db;
        for (auto& x : rem) x = zp_mul(x, lb);
        for (int i = 0; i <= db; ++i) rem[shift + i] = zp_sub(rem[shift + i], zp_mul(lead, b[i]));
        zk_trim(rem);
    }
    return rem;
}
}  // namespace detail

/// Sparse bivariate polynomial in the formal parameters k and p0 over Q.
/// Canonical: no zero-valued entries; the zero polynomial has an empty term map.
class ParamPoly {
public:
    using TermMap = std::map<ParamExp, Rational, ParamExpDegLexLess>;

    ParamPoly() = default;
    ParamPoly(long c) { if (c != 0) terms_[{0, 0}] = Rational(c); }  // NOLINT: integers embed
    explicit ParamPoly(const Rational& c) { if (!c.is_zero()) terms_[{0, 0}] = c; }

    static ParamPoly zero() { return {}; }
    static ParamPoly one() { return ParamPoly(1); }
    static ParamPoly k() { return term(1, 0, Rational(1)); }
    static ParamPoly p0() { return term(0, 1, Rational(1)); }
    static ParamPoly term(int dk, int dp, const Rational& c) {
        ParamPoly r;
        if (!c.is_zero()) r.terms_[{dk, dp}] = c;
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0});
    }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0} && terms_.begin()->second.is_one();
    }
    Rational constant_value() const {
        if (terms_.empty()) return Rational(0);
        return terms_.begin()->second;  // valid only when is_constant()
    }

    int degree_k() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.dk);
        return terms_.empty() ? -1 : d;
    }
    int degree_p0() const {
        int d = 0;
        for (const auto& [e, c] : terms_) d = std::max(d, e.dp);
        return terms_.empty() ? -1 : d;
    }

    ParamExp leading_exp() const { return terms_.rbegin()->first; }
    Rational leading_coeff() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

    ParamPoly operator-() const {
        ParamPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }

    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) r.add_term({ea.dk + eb.dk, ea.dp + eb.dp}, ca * cb);
        return r;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    ParamPoly scaled(const Rational& c) const {
        ParamPoly r;
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_[e] = v * c;
        return r;
    }

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

    Rational eval(const Rational& kv, const Rational& pv) const {
        return eval_at<Rational>(kv, pv);
    }

    /// Evaluates at arbitrary field elements; F must embed Rational and long.
    template <class F>
    F eval_at(const F& kv, const F& pv) const {
        int dk = std::max(degree_k(), 0), dp = std::max(degree_p0(), 0);
        std::vector<F> kp, pp;
        kp.reserve(dk + 1);
        pp.reserve(dp + 1);
        kp.push_back(F(1));
        for (int i = 1; i <= dk; ++i) kp.push_back(kp.back() * kv);
        pp.push_back(F(1));
        for (int i = 1; i <= dp; ++i) pp.push_back(pp.back() * pv);
        F acc(0);
        for (const auto& [e, c] : terms_) acc += F(c) * kp[e.dk] * pp[e.dp];
        return acc;
    }

    /// Primitive associate over Z with positive deg-lex leading coefficient.
    ParamPoly primitive() const;

    static ParamPoly gcd(const ParamPoly& a, const ParamPoly& b);

    /// Exact division; throws std::logic_error when b does not divide a.
    static ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b);

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        // print leading (highest deg-lex) terms first
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            Rational a = c;
            if (first) {
                if (a.sign() < 0) { os << "-"; a = -a; }
            } else {
                os << (a.sign() < 0 ? " - " : " + ");
                if (a.sign() < 0) a = -a;
            }
            first = false;
            const bool has_var = e.dk > 0 || e.dp > 0;
            if (!a.is_one() || !has_var) {
                os << a.str();
                if (has_var) os << "*";
            }
            if (e.dk > 0) {
                os << "k";
                if (e.dk > 1) os << "^" << e.dk;
                if (e.dp > 0) os << "*";
            }
            if (e.dp > 0) {
                os << "p0";
                if (e.dp > 1) os << "^" << e.dp;
            }
        }
        return os.str();
    }

private:
    TermMap terms_;

    void add_term(ParamExp e, const Rational& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(e, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    detail::ZkPoly to_zk(mpz_class* denom_out) const {
        mpz_class den = 1;
        for (const auto& [e, c] : terms_) {
            mpz_class d = c.denominator(), g;
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), d.get_mpz_t());
            den = den / g * d;
        }
        detail::ZkPoly r(static_cast<std::size_t>(std::max(degree_k(), 0)) + 1);
        if (is_zero()) r.clear();
        for (const auto& [e, c] : terms_) {
            auto& row = r[static_cast<std::size_t>(e.dk)];
            if (static_cast<int>(row.size()) <= e.dp) row.resize(static_cast<std::size_t>(e.dp) + 1, mpz_class(0));
            row[static_cast<std::size_t>(e.dp)] = c.numerator() * (den / c.denominator());
        }
        detail::zk_trim(r);
        if (denom_out) *denom_out = den;
        return r;
    }

    static ParamPoly from_zk(const detail::ZkPoly& z) {
        ParamPoly r;
        for (std::size_t i = 0; i < z.size(); ++i)
            for (std::size_t j = 0; j < z[i].size(); ++j)
                if (sgn(z[i][j]) != 0) r.terms_[{static_cast<int>(i), static_cast<int>(j)}] = Rational(z[i][j]);
        return r;
    }
};

inline ParamPoly ParamPoly::primitive() const {
    if (is_zero()) return {};
    mpz_class den;
    auto z = to_zk(&den);
    return from_zk(detail::zk_primitive(z));
}

inline ParamPoly ParamPoly::gcd(const ParamPoly& a, const ParamPoly& b) {
    using namespace detail;
    if (a.is_zero()) return b.primitive();
    if (b.is_zero()) return a.primitive();
    mpz_class da, db;
    ZkPoly za = a.to_zk(&da), zb = b.to_zk(&db);
    // degree 0 in k on both sides: univariate gcd in p0
    if (zk_deg(za) == 0 && zk_deg(zb) == 0) {
        ZkPoly g{zp_gcd(za[0], zb[0])};
        return from_zk(g);
    }
    ZPoly ca = zk_content(za), cb = zk_content(zb);
    ZkPoly pa = zk_divide_coeffs(za, ca), pb = zk_divide_coeffs(zb, cb);
    ZPoly cg = zp_gcd(ca, cb);
    if (zk_deg(za) == 0 || zk_deg(zb) == 0) {
        // one side is k-free: gcd divides the other's content
        const ZPoly& kfree = zk_deg(za) == 0 ? za[0] : zb[0];
        const ZPoly& other_content = zk_deg(za) == 0 ? cb : ca;
        ZkPoly g{zp_gcd(kfree, other_content)};
        return from_zk(g);
    }
    if (zk_deg(pa) < zk_deg(pb)) std::swap(pa, pb);
    while (!zk_is_zero(pb)) {
        ZkPoly r = zk_prem(pa, pb);
        pa = std::move(pb);
        pb = zk_primitive(r);
    }
    ZkPoly g = zk_primitive(pa);
    for (auto& coeff : g) coeff = zp_mul(coeff, cg);
    return from_zk(g);
}

inline ParamPoly ParamPoly::divide_exact(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw DivisionByZeroError("ParamPoly: division by zero polynomial");
    if (a.is_zero()) return {};
    if (b.is_constant()) return a.scaled(b.constant_value().inverse());
    ParamPoly rem = a, quot;
    const ParamExp eb = b.leading_exp();
    const Rational lb = b.leading_coeff();
    while (!rem.is_zero()) {
        const ParamExp er = rem.leading_exp();
        if (er.dk < eb.dk || er.dp < eb.dp)
            throw std::logic_error("ParamPoly::divide_exact: not an exact multiple");
        const ParamExp eq{er.dk - eb.dk, er.dp - eb.dp};
        const Rational cq = rem.leading_coeff() / lb;
        ParamPoly t = term(eq.dk, eq.dp, cq);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

}  // namespace jacklaurent

#endif
