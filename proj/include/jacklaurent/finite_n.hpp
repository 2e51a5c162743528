#ifndef JACKLAURENT_FINITE_N_HPP
#define JACKLAURENT_FINITE_N_HPP

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jacklaurent/jack.hpp"

namespace jacklaurent {

/// Laurent polynomial in z_1..z_N with F coefficients; canonical exponent-vector keys.
template <class F>
class FiniteLaurentPoly {
public:
    using Exps = std::vector<int>;
    using TermMap = std::map<Exps, F>;

    explicit FiniteLaurentPoly(int nvars) : n_(nvars) {}

    static FiniteLaurentPoly zero(int n) { return FiniteLaurentPoly(n); }
    static FiniteLaurentPoly constant(int n, const F& c) {
        FiniteLaurentPoly r(n);
        r.add_term(Exps(static_cast<std::size_t>(n), 0), c);
        return r;
    }
    static FiniteLaurentPoly monomial(Exps e, const F& c) {
        FiniteLaurentPoly r(static_cast<int>(e.size()));
        r.add_term(std::move(e), c);
        return r;
    }
    /// phi_N(p_j) = z_1^j + ... + z_N^j, j != 0.
    static FiniteLaurentPoly power_sum(int n, int j) {
        FiniteLaurentPoly r(n);
        for (int i = 0; i < n; ++i) {
            Exps e(static_cast<std::size_t>(n), 0);
            e[static_cast<std::size_t>(i)] = j;
            r.add_term(std::move(e), F(1));
        }
        return r;
    }
    /// (z_1 ... z_N)^e, the phi_N image of w^e.
    static FiniteLaurentPoly det_power(int n, int e) {
        FiniteLaurentPoly r(n);
        r.add_term(Exps(static_cast<std::size_t>(n), e), F(1));
        return r;
    }

    int nvars() const { return n_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(Exps e, const F& c) {
        if (c.is_zero()) return;
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            terms_.emplace(std::move(e), c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    FiniteLaurentPoly operator-() const {
        FiniteLaurentPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    FiniteLaurentPoly& operator+=(const FiniteLaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    FiniteLaurentPoly& operator-=(const FiniteLaurentPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend FiniteLaurentPoly operator+(FiniteLaurentPoly a, const FiniteLaurentPoly& b) { return a += b; }
    friend FiniteLaurentPoly operator-(FiniteLaurentPoly a, const FiniteLaurentPoly& b) { return a -= b; }
    friend FiniteLaurentPoly operator*(const FiniteLaurentPoly& a, const FiniteLaurentPoly& b) {
        FiniteLaurentPoly r(a.n_);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exps e = ea;
                for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    FiniteLaurentPoly scaled(const F& c) const {
        FiniteLaurentPoly r(n_);
        if (c.is_zero()) return r;
        for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
        return r;
    }
    friend bool operator==(const FiniteLaurentPoly& a, const FiniteLaurentPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const FiniteLaurentPoly& a, const FiniteLaurentPoly& b) { return !(a == b); }

    FiniteLaurentPoly permuted(const std::vector<int>& perm) const {
        FiniteLaurentPoly r(n_);
        for (const auto& [e, c] : terms_) {
            Exps f(e.size());
            for (std::size_t i = 0; i < e.size(); ++i) f[static_cast<std::size_t>(perm[i])] = e[i];
            r.add_term(std::move(f), c);
        }
        return r;
    }

    /// z_i -> z_i^{-1} on every variable.
    FiniteLaurentPoly inverted_vars() const {
        FiniteLaurentPoly r(n_);
        for (const auto& [e, c] : terms_) {
            Exps f = e;
            for (auto& x : f) x = -x;
            r.add_term(std::move(f), c);
        }
        return r;
    }

    bool is_symmetric() const {
        for (int i = 0; i + 1 < n_; ++i) {
            std::vector<int> perm(static_cast<std::size_t>(n_));
            std::iota(perm.begin(), perm.end(), 0);
            std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i + 1)]);
            if (permuted(perm) != *this) return false;
        }
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) os << "*z" << (i + 1) << "^" << e[i];
        }
        return os.str();
    }

private:
    int n_;
    TermMap terms_;
};

/// The finite monomial Laurent polynomial m_chi: the sum over all distinct permutations of chi.
template <class F>
FiniteLaurentPoly<F> monomial_sym_poly(std::vector<int> chi, int n) {
    chi.resize(static_cast<std::size_t>(n), 0);
    std::sort(chi.begin(), chi.end());
    FiniteLaurentPoly<F> r(n);
    do {
        r.add_term(chi, F(1));
    } while (std::next_permutation(chi.begin(), chi.end()));
    return r;
}

/// chi = (lam_1 .. lam_r, 0, ..., 0, -mu_s, ..., -mu_1) in Z^N.
inline std::vector<int> chi_vector(const BiPartition& pr, int n) {
    std::vector<int> chi(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= pr.lam.length(); ++i) chi[static_cast<std::size_t>(i - 1)] = pr.lam.part(i);
    for (int j = 1; j <= pr.mu.length(); ++j) chi[static_cast<std::size_t>(n - j)] = -pr.mu.part(j);
    return chi;
}

/// phi_N: p_i -> power sums, p0 -> N inside coefficients, w -> z_1...z_N. Symbolic k survives.
/// Throws PoleError when a coefficient has a pole at p0 = N.
inline FiniteLaurentPoly<RatFunc> phi_N(const SymFunc<RatFunc>& f, int n) {
    FiniteLaurentPoly<RatFunc> out(n);
    const RatFunc nval{Rational(n)};
    for (const auto& [mono, c] : f.terms()) {
        RatFunc cv = c.substitute(RatFunc::k(), nval);
        FiniteLaurentPoly<RatFunc> base = FiniteLaurentPoly<RatFunc>::constant(n, cv);
        for (const auto& [i, e] : mono.factors())
            for (int q = 0; q < e; ++q) base = base * FiniteLaurentPoly<RatFunc>::power_sum(n, i);
        if (mono.wexp() != 0) base = base * FiniteLaurentPoly<RatFunc>::det_power(n, mono.wexp());
        out += base;
    }
    return out;
}

enum class FiniteOpKind { Trig, TrigStable, Rational, BC };

namespace detail {

/// (z^beta - z^(swap_ij beta)) / (z_i - z_j): the telescoping quotient; zero when the
/// exponents agree. Stays inside the Laurent polynomial ring.
template <class F>
FiniteLaurentPoly<F> antisym_quot(const std::vector<int>& beta, int i, int j, int n) {
    const int bi = beta[static_cast<std::size_t>(i)], bj = beta[static_cast<std::size_t>(j)];
    if (bi == bj) return FiniteLaurentPoly<F>::zero(n);
    const int lo = std::min(bi, bj), d = std::abs(bi - bj);
    const F sign(bi > bj ? 1 : -1);
    FiniteLaurentPoly<F> r(n);
    for (int t = 0; t < d; ++t) {
        std::vector<int> e = beta;
        e[static_cast<std::size_t>(i)] = lo + t;
        e[static_cast<std::size_t>(j)] = lo + d - 1 - t;
        r.add_term(std::move(e), sign);
    }
    return r;
}

}  // namespace detail

/// The finite CMS operators applied exactly, termwise, with the singular cross terms handled
/// by the telescoping quotient (never dividing polynomials). Requires symmetric input.
template <class F>
FiniteLaurentPoly<F> apply_finite_cms(FiniteOpKind kind, const FiniteLaurentPoly<F>& g,
                                      const F& k, const F& l = F(0)) {
    if (!g.is_symmetric()) throw DomainError("apply_finite_cms: input is not symmetric");
    const int n = g.nvars();
    FiniteLaurentPoly<F> out(n);
    for (const auto& [e, c] : g.terms()) {
        switch (kind) {
            case FiniteOpKind::Trig:
            case FiniteOpKind::TrigStable: {
                long sq = 0, lin = 0;
                for (int x : e) {
                    sq += static_cast<long>(x) * x;
                    lin += x;
                }
                FiniteLaurentPoly<F> diag = FiniteLaurentPoly<F>::monomial(e, c * F(sq));
                if (kind == FiniteOpKind::TrigStable)
                    diag += FiniteLaurentPoly<F>::monomial(e, c * k * F(n - 1) * F(lin));
                out += diag;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        const int ai = e[static_cast<std::size_t>(i)], aj = e[static_cast<std::size_t>(j)];
                        if (ai <= aj) continue;  // each orbit {alpha, swap(alpha)} once
                        // (z_i + z_j) * (z^alpha - z^swap) / (z_i - z_j) * (ai - aj)
                        FiniteLaurentPoly<F> q = detail::antisym_quot<F>(e, i, j, n);
                        FiniteLaurentPoly<F> zi(n), zj(n);
                        {
                            std::vector<int> u(static_cast<std::size_t>(n), 0);
                            u[static_cast<std::size_t>(i)] = 1;
                            zi.add_term(std::move(u), F(1));
                            std::vector<int> v(static_cast<std::size_t>(n), 0);
                            v[static_cast<std::size_t>(j)] = 1;
                            zj.add_term(std::move(v), F(1));
                        }
                        out += ((zi + zj) * q).scaled(-(k * c * F(ai - aj)));
                    }
                break;
            }
            case FiniteOpKind::Rational: {
                for (int i = 0; i < n; ++i) {
                    const int a = e[static_cast<std::size_t>(i)];
                    if (a == 0 || a == 1) continue;
                    std::vector<int> f = e;
                    f[static_cast<std::size_t>(i)] -= 2;
                    out.add_term(std::move(f), c * F(static_cast<long>(a) * (a - 1)));
                }
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        const int ai = e[static_cast<std::size_t>(i)], aj = e[static_cast<std::size_t>(j)];
                        if (ai < aj) continue;
                        std::vector<int> di = e, dj = e;
                        --di[static_cast<std::size_t>(i)];
                        --dj[static_cast<std::size_t>(j)];
                        FiniteLaurentPoly<F> part(n);
                        if (ai == aj) {
                            part += detail::antisym_quot<F>(di, i, j, n).scaled(F(ai));
                        } else {
                            part += detail::antisym_quot<F>(di, i, j, n).scaled(F(ai));
                            part -= detail::antisym_quot<F>(dj, i, j, n).scaled(F(aj));
                        }
                        out += part.scaled(-(F(2) * k * c));
                    }
                break;
            }
            case FiniteOpKind::BC: {
                for (int i = 0; i < n; ++i) {
                    const int a = e[static_cast<std::size_t>(i)];
                    if (a != 0 && a != 1) {
                        std::vector<int> f = e;
                        f[static_cast<std::size_t>(i)] -= 1;
                        out.add_term(std::move(f), c * F(static_cast<long>(a) * (a - 1)));
                    }
                    if (a != 0) {
                        std::vector<int> f = e;
                        f[static_cast<std::size_t>(i)] -= 1;
                        out.add_term(std::move(f), -(c * (l - F(Rational(1, 2))) * F(a)));
                    }
                }
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) {
                        const int ai = e[static_cast<std::size_t>(i)], aj = e[static_cast<std::size_t>(j)];
                        if (ai <= aj) continue;
                        out += detail::antisym_quot<F>(e, i, j, n).scaled(-(F(2) * k * c * F(ai - aj)));
                    }
                break;
            }
        }
    }
    return out;
}

/// Element of the super algebra Lambda_{m,n}: Laurent polynomial in x_1..x_m, y_1..y_n.
struct SuperPoly {
    int m = 0;
    int n = 0;
    FiniteLaurentPoly<Rational> poly{0};

    friend bool operator==(const SuperPoly& a, const SuperPoly& b) {
        return a.m == b.m && a.n == b.n && a.poly == b.poly;
    }
    std::string str() const {
        if (poly.is_zero()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : poly.terms()) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c.str() << ")";
            for (int i = 0; i < m; ++i)
                if (e[static_cast<std::size_t>(i)] != 0)
                    os << "*x" << (i + 1) << "^" << e[static_cast<std::size_t>(i)];
            for (int j = 0; j < n; ++j)
                if (e[static_cast<std::size_t>(m + j)] != 0)
                    os << "*y" << (j + 1) << "^" << e[static_cast<std::size_t>(m + j)];
        }
        return os.str();
    }
};

/// phi_{m,n}: p_i -> x_1^i+..+x_m^i - y_1^i-..-y_n^i, p0 -> superdimension m-n, k -> at_k,
/// w -> Berezinian (x_1..x_m)/(y_1..y_n). Throws PoleError at the specialization point.
inline SuperPoly phi_mn(const SymFunc<RatFunc>& f, int m, int n, const Rational& at_k) {
    const int nv = m + n;
    auto super_power = [&](int i) {
        FiniteLaurentPoly<Rational> r(nv);
        for (int t = 0; t < m; ++t) {
            std::vector<int> e(static_cast<std::size_t>(nv), 0);
            e[static_cast<std::size_t>(t)] = i;
            r.add_term(std::move(e), Rational(1));
        }
        for (int t = 0; t < n; ++t) {
            std::vector<int> e(static_cast<std::size_t>(nv), 0);
            e[static_cast<std::size_t>(m + t)] = i;
            r.add_term(std::move(e), Rational(-1));
        }
        return r;
    };
    SuperPoly out;
    out.m = m;
    out.n = n;
    out.poly = FiniteLaurentPoly<Rational>::zero(nv);
    for (const auto& [mono, c] : f.terms()) {
        Rational cv = c.eval(at_k, Rational(m - n));
        auto base = FiniteLaurentPoly<Rational>::constant(nv, cv);
        for (const auto& [i, e] : mono.factors())
            for (int q = 0; q < e; ++q) base = base * super_power(i);
        if (mono.wexp() != 0) {
            std::vector<int> ber(static_cast<std::size_t>(nv), 0);
            for (int t = 0; t < m; ++t) ber[static_cast<std::size_t>(t)] = mono.wexp();
            for (int t = 0; t < n; ++t) ber[static_cast<std::size_t>(m + t)] = -mono.wexp();
            base = base * FiniteLaurentPoly<Rational>::monomial(std::move(ber), Rational(1));
        }
        out.poly += base;
    }
    return out;
}

/// phi_N of a Jack-Laurent function assembled from its m-expansion, with p0 -> N in the
/// coefficients; vanishing m entries (too many rows for N) are dropped.
inline FiniteLaurentPoly<RatFunc> phi_N_from_m_coeffs(const std::map<BiPartition, RatFunc>& mc,
                                                      int n) {
    FiniteLaurentPoly<RatFunc> out(n);
    const RatFunc nval{Rational(n)};
    for (const auto& [pair, u] : mc) {
        if (pair.lam.length() + pair.mu.length() > n) continue;
        RatFunc uv = u.substitute(RatFunc::k(), nval);
        out += monomial_sym_poly<RatFunc>(chi_vector(pair, n), n).scaled(uv);
    }
    return out;
}

/// Commuting-diagram oracle: phi_N(apply(op, f))|_{p0=N} == apply_finite(phi_N(f)) for every
/// domain basis monomial of total degree <= bound.
inline Report check_commuting_diagram(OpKind kind, int n, int degree_bound) {
    Report rep;
    FiniteOpKind fin;
    switch (kind) {
        case OpKind::TrigParam:
        case OpKind::Laurent:
        case OpKind::LaurentExtended: fin = FiniteOpKind::Trig; break;
        case OpKind::TrigStable: fin = FiniteOpKind::TrigStable; break;
        case OpKind::Rational: fin = FiniteOpKind::Rational; break;
        case OpKind::BCRational: fin = FiniteOpKind::BC; break;
        default:
            rep.add("commuting-diagram", op_kind_name(kind), false, "no finite counterpart");
            return rep;
    }
    const Params<RatFunc> ps = symbolic_params();
    std::vector<RatFunc> couplings =
        kind == OpKind::BCRational ? std::vector<RatFunc>{RatFunc(0), RatFunc(Rational(7, 3))}
                                   : std::vector<RatFunc>{RatFunc(0)};
    for (const RatFunc& l : couplings) {
        OperatorSpec<RatFunc> op(kind, ps, l);
        bool ok = true;
        std::string counter;
        for (const auto& mono : detail::domain_basis(kind, degree_bound)) {
            SymFunc<RatFunc> f = SymFunc<RatFunc>::monomial(mono, RatFunc(1));
            FiniteLaurentPoly<RatFunc> lhs = phi_N(apply(op, f), n);
            FiniteLaurentPoly<RatFunc> rhs = apply_finite_cms(fin, phi_N(f, n), RatFunc::k(), l);
            if (lhs != rhs) {
                ok = false;
                counter = mono.str();
                break;
            }
        }
        rep.add("commuting-diagram",
                std::string(op_kind_name(kind)) + " N=" + std::to_string(n) + " degree<=" +
                    std::to_string(degree_bound) +
                    (kind == OpKind::BCRational ? " l=" + l.str() : ""),
                ok, counter);
    }
    return rep;
}

/// Specialization identity: (z_1..z_N)^a phi_N(P_{lam,mu}(k,N)) == phi_N(classical P_nu)
/// with nu = (lam_1+a,..,lam_r+a, a,..,a, a-mu_s,..,a-mu_1), for N > r+s and a >= mu_1.
/// The left side goes through the power-sum route, the right through the classical solver.
inline Report check_specialization_jack(const Partition& lam, const Partition& mu, int n, int a) {
    Report rep;
    const std::string params = "lam=" + lam.str() + " mu=" + mu.str() + " N=" + std::to_string(n) +
                               " a=" + std::to_string(a);
    if (n <= lam.length() + mu.length() || a < mu.part(1)) {
        rep.add("specialization-jack", params, false, "preconditions N > r+s, a >= mu_1 violated");
        return rep;
    }
    const JackLaurent<RatFunc>& P = jack_laurent_symbolic({lam, mu});
    FiniteLaurentPoly<RatFunc> lhs(n);
    try {
        lhs = phi_N(P.p_form, n);
    } catch (const PoleError& e) {
        rep.add("specialization-jack", params, false, std::string("resonance at p0=N: ") + e.what());
        return rep;
    }
    lhs = lhs * FiniteLaurentPoly<RatFunc>::det_power(n, a);

    std::vector<int> nu_parts;
    for (int i = 1; i <= lam.length(); ++i) nu_parts.push_back(lam.part(i) + a);
    if (a > 0)
        for (int i = lam.length(); i < n - mu.length(); ++i) nu_parts.push_back(a);
    for (int j = mu.length(); j >= 1; --j)
        if (a - mu.part(j) > 0) nu_parts.push_back(a - mu.part(j));
    const ClassicalJack<RatFunc>& C = classical_jack_symbolic(Partition(nu_parts));
    FiniteLaurentPoly<RatFunc> rhs(n);
    for (const auto& [al, u] : C.m_coeffs) {
        if (al.length() > n) continue;
        std::vector<int> chi(al.parts());
        rhs += monomial_sym_poly<RatFunc>(chi, n).scaled(u);
    }
    rep.add("specialization-jack", params, lhs == rhs,
            lhs == rhs ? "" : "phi_N(P_{lam,mu}) != det^{-a} P_nu");
    return rep;
}

/// The two power-sum identities behind the infinite-dimensional lift, with p0 = N:
///   sum_{i<j} (z_i+z_j)(z_i^a - z_j^a)/(z_i - z_j) = -a p_a + sum_{t=0}^{a-1} p_t p_{a-t}
///   sum_{i<j} (z_i^a - z_j^a)/(z_i - z_j) = -(a/2) p_{a-1} + (1/2) sum_{t=0}^{a-1} p_t p_{a-1-t}
inline Report check_power_sum_identities(int n, int a_max) {
    Report rep;
    using FP = FiniteLaurentPoly<Rational>;
    auto p = [&](int j) { return j == 0 ? FP::constant(n, Rational(n)) : FP::power_sum(n, j); };
    for (int a = 1; a <= a_max; ++a) {
        FP lhs1(n), lhs2(n);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                std::vector<int> base(static_cast<std::size_t>(n), 0);
                base[static_cast<std::size_t>(i)] = a;
                FP q = detail::antisym_quot<Rational>(base, i, j, n);
                FP zi(n), zj(n);
                std::vector<int> u(static_cast<std::size_t>(n), 0);
                u[static_cast<std::size_t>(i)] = 1;
                zi.add_term(std::move(u), Rational(1));
                std::vector<int> v(static_cast<std::size_t>(n), 0);
                v[static_cast<std::size_t>(j)] = 1;
                zj.add_term(std::move(v), Rational(1));
                lhs1 += (zi + zj) * q;
                lhs2 += q;
            }
        FP rhs1 = p(a).scaled(Rational(-a));
        for (int t = 0; t <= a - 1; ++t) rhs1 += p(t) * p(a - t);
        FP rhs2 = p(a - 1).scaled(Rational(-a, 2));
        for (int t = 0; t <= a - 1; ++t) rhs2 += (p(t) * p(a - 1 - t)).scaled(Rational(1, 2));
        const bool ok1 = lhs1 == rhs1, ok2 = lhs2 == rhs2;
        rep.add("power-sum-identity-1", "N=" + std::to_string(n) + " a=" + std::to_string(a), ok1,
                ok1 ? "" : "mismatch");
        rep.add("power-sum-identity-2", "N=" + std::to_string(n) + " a=" + std::to_string(a), ok2,
                ok2 ? "" : "mismatch");
    }
    return rep;
}

}  // namespace jacklaurent

#endif
