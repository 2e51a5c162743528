#ifndef JACKLAURENT_SYM_FUNC_HPP
#define JACKLAURENT_SYM_FUNC_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jacklaurent/rat_func.hpp"

namespace jacklaurent {

/// Monomial in the free commutative generators p_i (i != 0) and w.
/// Factors are stored in the fixed enumeration order 1, -1, 2, -2, ... of the index set,
/// which makes the term order below compatible with multiplication.
class PMonomial {
public:
    PMonomial() = default;

    static PMonomial unit() { return {}; }
    static PMonomial p(int i, int e = 1) {
        PMonomial m;
        if (i == 0) throw std::invalid_argument("PMonomial: index 0 is not a generator");
        if (e > 0) m.exps_.emplace_back(i, e);
        return m;
    }
    static PMonomial w_pow(int e) {
        PMonomial m;
        m.wexp_ = e;
        return m;
    }

    const std::vector<std::pair<int, int>>& factors() const { return exps_; }
    int wexp() const { return wexp_; }
    bool is_unit() const { return exps_.empty() && wexp_ == 0; }

    int exponent_of(int i) const {
        for (const auto& [idx, e] : exps_)
            if (idx == i) return e;
        return 0;
    }

    /// Number of generator factors counted with multiplicity (w excluded).
    int factor_count() const {
        int n = 0;
        for (const auto& [i, e] : exps_) n += e;
        return n;
    }

    long deg_plus() const {
        long d = 0;
        for (const auto& [i, e] : exps_)
            if (i > 0) d += static_cast<long>(i) * e;
        return d;
    }
    long deg_minus() const {
        long d = 0;
        for (const auto& [i, e] : exps_)
            if (i < 0) d += static_cast<long>(-i) * e;
        return d;
    }
    long net_degree() const { return deg_plus() - deg_minus(); }

    PMonomial times(const PMonomial& o) const {
        PMonomial r;
        r.wexp_ = wexp_ + o.wexp_;
        std::map<int, int, EnumLess> acc;
        for (const auto& [i, e] : exps_) acc[i] += e;
        for (const auto& [i, e] : o.exps_) acc[i] += e;
        for (const auto& [i, e] : acc)
            if (e != 0) r.exps_.emplace_back(i, e);
        return r;
    }

    PMonomial times_p(int i, int e = 1) const { return times(p(i, e)); }

    /// Removes one factor of p_i; the caller guarantees exponent_of(i) >= 1.
    PMonomial divided_by_p(int i) const {
        PMonomial r = *this;
        for (auto it = r.exps_.begin(); it != r.exps_.end(); ++it) {
            if (it->first == i) {
                if (--it->second == 0) r.exps_.erase(it);
                return r;
            }
        }
        throw std::logic_error("PMonomial: dividing by absent generator");
    }

    /// Exact monomial quotient *this / o, or nullopt-like failure flag.
    bool try_divide(const PMonomial& o, PMonomial& out) const {
        if (wexp_ < o.wexp_) return false;
        PMonomial r;
        r.wexp_ = wexp_ - o.wexp_;
        std::map<int, int, EnumLess> acc;
        for (const auto& [i, e] : exps_) acc[i] += e;
        for (const auto& [i, e] : o.exps_) {
            acc[i] -= e;
            if (acc[i] < 0) return false;
        }
        for (const auto& [i, e] : acc)
            if (e != 0) r.exps_.emplace_back(i, e);
        out = std::move(r);
        return true;
    }

    PMonomial starred() const {
        PMonomial r;
        r.wexp_ = wexp_;
        std::vector<std::pair<int, int>> neg;
        for (const auto& [i, e] : exps_) neg.emplace_back(-i, e);
        std::sort(neg.begin(), neg.end(), [](auto a, auto b) { return EnumLess{}(a.first, b.first); });
        r.exps_ = std::move(neg);
        return r;
    }

    friend bool operator==(const PMonomial& a, const PMonomial& b) {
        return a.wexp_ == b.wexp_ && a.exps_ == b.exps_;
    }
    friend bool operator!=(const PMonomial& a, const PMonomial& b) { return !(a == b); }

    /// Graded-lexicographic term order on (wexp, net degree, exponent vector); total and
    /// multiplicative, so leading terms multiply and exact division terminates.
    friend bool operator<(const PMonomial& a, const PMonomial& b) {
        if (a.wexp_ != b.wexp_) return a.wexp_ < b.wexp_;
        const long na = a.net_degree(), nb = b.net_degree();
        if (na != nb) return na < nb;
        // lexicographic on exponents along the enumeration 1, -1, 2, -2, ...
        std::size_t ia = 0, ib = 0;
        while (ia < a.exps_.size() && ib < b.exps_.size()) {
            const int ra = a.exps_[ia].first, rb = b.exps_[ib].first;
            if (ra != rb) {
                // the earlier-enumerated index has a zero exponent on the other side
                return EnumLess{}(ra, rb) ? a.exps_[ia].second < 0 : !(b.exps_[ib].second < 0);
            }
            if (a.exps_[ia].second != b.exps_[ib].second) return a.exps_[ia].second < b.exps_[ib].second;
            ++ia, ++ib;
        }
        if (ia < a.exps_.size()) return false;  // a has an extra positive exponent: a > b
        if (ib < b.exps_.size()) return true;
        return false;
    }

    std::string str() const {
        if (is_unit()) return "1";
        std::ostringstream os;
        bool first = true;
        for (const auto& [i, e] : exps_) {
            if (!first) os << "*";
            first = false;
            os << "p_" << i;
            if (e > 1) os << "^" << e;
        }
        if (wexp_ > 0) {
            if (!first) os << "*";
            os << "w";
            if (wexp_ > 1) os << "^" << wexp_;
        }
        return os.str();
    }

private:
    struct EnumLess {
        // 1 < -1 < 2 < -2 < 3 < ...
        bool operator()(int a, int b) const {
            const int ra = 2 * (std::abs(a) - 1) + (a < 0 ? 1 : 0);
            const int rb = 2 * (std::abs(b) - 1) + (b < 0 ? 1 : 0);
            return ra < rb;
        }
    };

    std::vector<std::pair<int, int>> exps_;  // sorted by EnumLess on the index
    int wexp_ = 0;
};

/// Element of the extended Laurent symmetric-function algebra: a finite linear combination
/// of PMonomials with coefficients in F. p0 is never a generator; it lives in coefficients.
template <class F>
class SymFunc {
public:
    using TermMap = std::map<PMonomial, F>;

    SymFunc() = default;
    explicit SymFunc(const F& c) {
        if (!c.is_zero()) terms_[PMonomial::unit()] = c;
    }

    static SymFunc zero() { return {}; }
    static SymFunc one() { return SymFunc(F(1)); }
    static SymFunc p(int i) { return monomial(PMonomial::p(i), F(1)); }
    static SymFunc w() { return monomial(PMonomial::w_pow(1), F(1)); }
    static SymFunc monomial(const PMonomial& m, const F& c) {
        SymFunc r;
        if (!c.is_zero()) r.terms_[m] = c;
        return r;
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    F coeff(const PMonomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? F(0) : it->second;
    }

    void add_term(const PMonomial& m, const F& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    SymFunc operator-() const {
        SymFunc r = *this;
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }
    SymFunc& operator+=(const SymFunc& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    SymFunc& operator-=(const SymFunc& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }

    friend SymFunc operator*(const SymFunc& a, const SymFunc& b) {
        SymFunc r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        return r;
    }
    SymFunc& operator*=(const SymFunc& o) { return *this = *this * o; }

    SymFunc scaled(const F& c) const {
        SymFunc r;
        if (c.is_zero()) return r;
        for (const auto& [m, v] : terms_) {
            F p = v * c;
            if (!p.is_zero()) r.terms_[m] = p;
        }
        return r;
    }

    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SymFunc& a, const SymFunc& b) { return !(a == b); }

    /// (max over terms of deg_plus, max of deg_minus); additivity under products is a test invariant.
    std::pair<long, long> bidegree() const {
        long dp = 0, dm = 0;
        for (const auto& [m, c] : terms_) {
            dp = std::max(dp, m.deg_plus());
            dm = std::max(dm, m.deg_minus());
        }
        return {dp, dm};
    }

    bool in_lambda_plus() const {
        for (const auto& [m, c] : terms_) {
            if (m.wexp() != 0) return false;
            for (const auto& [i, e] : m.factors())
                if (i < 0) return false;
        }
        return true;
    }
    bool w_free() const {
        for (const auto& [m, c] : terms_)
            if (m.wexp() != 0) return false;
        return true;
    }

    template <class Fn>
    SymFunc mapped_coeffs(Fn&& fn) const {
        SymFunc r;
        for (const auto& [m, c] : terms_) {
            F v = fn(c);
            if (!v.is_zero()) r.terms_[m] = v;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [m, c] = *it;
            std::string cs = c.str();
            bool neg = false;
            if (cs.size() > 1 && cs[0] == '-' && cs.find(' ') == std::string::npos) {
                neg = true;
                cs = cs.substr(1);
            }
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? " - " : " + ");
            }
            first = false;
            const bool trivial = (cs == "1");
            const bool composite = cs.find(' ') != std::string::npos || cs.find('/') != std::string::npos;
            if (m.is_unit()) {
                os << (composite ? "(" + cs + ")" : cs);
            } else {
                if (!trivial) os << (composite ? "(" + cs + ")" : cs) << "*";
                os << m.str();
            }
        }
        return os.str();
    }

private:
    TermMap terms_;
};

/// The * involution: p_i -> p_{-i}, w fixed, coefficients fixed.
template <class F>
SymFunc<F> star(const SymFunc<F>& f) {
    SymFunc<F> r;
    for (const auto& [m, c] : f.terms()) r.add_term(m.starred(), c);
    return r;
}

/// The duality endomorphism theta: applies the field automorphism k -> 1/k, p0 -> p0 to each
/// coefficient, then multiplies each monomial by k^(number of generator factors). Involutive.
inline SymFunc<RatFunc> theta(const SymFunc<RatFunc>& f) {
    static const RatFunc kk = RatFunc::k();
    static const RatFunc kinv = RatFunc(1) / RatFunc::k();
    SymFunc<RatFunc> r;
    for (const auto& [m, c] : f.terms()) {
        RatFunc v = c.substitute(kinv, RatFunc::p0());
        int l = m.factor_count();
        for (int i = 0; i < l; ++i) v *= kk;
        r.add_term(m, v);
    }
    return r;
}

/// Scales each monomial by k^(±factor count) without touching coefficients; the linear
/// half of theta, used by the operator duality checks.
inline SymFunc<RatFunc> scale_k_per_factor(const SymFunc<RatFunc>& f, int direction) {
    static const RatFunc kk = RatFunc::k();
    static const RatFunc kinv = RatFunc(1) / RatFunc::k();
    const RatFunc& base = direction >= 0 ? kk : kinv;
    SymFunc<RatFunc> r;
    for (const auto& [m, c] : f.terms()) {
        RatFunc v = c;
        int l = m.factor_count();
        for (int i = 0; i < l; ++i) v *= base;
        r.add_term(m, v);
    }
    return r;
}

/// Exact division in the polynomial ring F[p_i, w]; throws std::logic_error when b does not
/// divide a. Used by the fraction-free determinant.
template <class F>
SymFunc<F> divide_exact(const SymFunc<F>& a, const SymFunc<F>& b) {
    if (b.is_zero()) throw DivisionByZeroError("SymFunc: division by zero");
    SymFunc<F> rem = a, quot;
    const auto& blead = *b.terms().rbegin();
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        PMonomial qm;
        if (!rlead.first.try_divide(blead.first, qm))
            throw std::logic_error("SymFunc::divide_exact: not an exact multiple");
        SymFunc<F> t = SymFunc<F>::monomial(qm, rlead.second / blead.second);
        quot += t;
        rem -= t * b;
    }
    return quot;
}

}  // namespace jacklaurent

#endif
