#ifndef JACKLAURENT_JACK_HPP
#define JACKLAURENT_JACK_HPP

#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "jacklaurent/cms_ops.hpp"
#include "jacklaurent/mbasis.hpp"

namespace jacklaurent {

/// E_{lam,mu} = sum lam_i^2 + sum mu_j^2 + k sum (2i-1) lam_i + k sum (2j-1) mu_j
///            - k p0 (|lam| + |mu|).
template <class F>
F eigenvalue(const BiPartition& pr, const Params<F>& ps) {
    long sq = 0, lin = 0;
    for (int i = 1; i <= pr.lam.length(); ++i) {
        sq += static_cast<long>(pr.lam.part(i)) * pr.lam.part(i);
        lin += static_cast<long>(2 * i - 1) * pr.lam.part(i);
    }
    for (int j = 1; j <= pr.mu.length(); ++j) {
        sq += static_cast<long>(pr.mu.part(j)) * pr.mu.part(j);
        lin += static_cast<long>(2 * j - 1) * pr.mu.part(j);
    }
    return F(sq) + ps.k * F(lin) - ps.k * ps.p0 * F(pr.lam.size() + pr.mu.size());
}

/// Higher-integral eigenvalue: sum over boxes of [(j-1/2) + k(i-1/2) - k p0/2]^(s-1),
/// with the factor (-1)^s on the mu boxes.
template <class F>
F eigenvalue_s(const BiPartition& pr, int s, const Params<F>& ps) {
    if (s < 1) throw std::invalid_argument("eigenvalue_s: s must be >= 1");
    const F half(Rational(1, 2));
    auto box_sum = [&](const Partition& part) {
        F acc(0);
        for (int i = 1; i <= part.length(); ++i) {
            for (int j = 1; j <= part.part(i); ++j) {
                F base = (F(j) - half) + ps.k * (F(i) - half) - ps.k * ps.p0 * half;
                F pw(1);
                for (int t = 0; t < s - 1; ++t) pw *= base;
                acc += pw;
            }
        }
        return acc;
    };
    F res = box_sum(pr.lam);
    F mu_part = box_sum(pr.mu);
    return (s % 2 == 0) ? res + mu_part : res - mu_part;
}

/// Jack-Laurent symmetric function: monic in m_{lam,mu}, strictly triangular below it
/// in the pair dominance order, eigenfunction of the Laurent operator.
template <class F>
struct JackLaurent {
    BiPartition index;
    std::map<BiPartition, F> m_coeffs;
    SymFunc<F> p_form;
    F eigen;
};

namespace detail {

/// Column of the Laurent operator in the m basis: L(m_nu) expanded over pairs.
inline const std::map<BiPartition, RatFunc>& laurent_column_symbolic(const BiPartition& nu) {
    static std::map<BiPartition, std::map<BiPartition, RatFunc>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(nu);
        if (it != cache.end()) return it->second;
    }
    const Params<RatFunc> ps = symbolic_params();
    OperatorSpec<RatFunc> op(OpKind::Laurent, ps);
    auto col = p_to_m(apply(op, m_to_p_symbolic(nu)), ps);
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(nu, std::move(col)).first->second;
}

template <class F>
std::map<BiPartition, F> laurent_column(const BiPartition& nu, const Params<F>& ps) {
    OperatorSpec<F> op(OpKind::Laurent, ps);
    return p_to_m(apply(op, m_to_p(nu, ps)), ps);
}

template <class F>
JackLaurent<F> solve_jack(const BiPartition& top, const Params<F>& ps) {
    const std::vector<BiPartition> lad = ladder(top);
    std::map<BiPartition, std::map<BiPartition, F>> cols;
    for (const auto& nu : lad) {
        std::map<BiPartition, F> col;
        if constexpr (std::is_same_v<F, RatFunc>) {
            if (is_symbolic(ps))
                col = laurent_column_symbolic(nu);
            else
                col = laurent_column(nu, ps);
        } else {
            col = laurent_column(nu, ps);
        }
        for (const auto& [rho, c] : col)
            if (!dominance_leq(rho, nu))
                throw TriangularityError("Laurent operator not triangular: L(m_" + nu.str() +
                                         ") has entry at " + rho.str());
        cols.emplace(nu, std::move(col));
    }

    auto diag = [&](const BiPartition& nu) -> F {
        auto it = cols.at(nu).find(nu);
        return it == cols.at(nu).end() ? F(0) : it->second;
    };

    JackLaurent<F> out;
    out.index = top;
    out.eigen = diag(top);
    out.m_coeffs[top] = F(1);
    for (std::size_t i = 1; i < lad.size(); ++i) {
        const BiPartition& nu = lad[i];
        F acc(0);
        for (std::size_t j = 0; j < i; ++j) {
            const BiPartition& rho = lad[j];
            auto uit = out.m_coeffs.find(rho);
            if (uit == out.m_coeffs.end()) continue;
            auto lit = cols.at(rho).find(nu);
            if (lit == cols.at(rho).end()) continue;
            acc += lit->second * uit->second;
        }
        if (acc.is_zero()) continue;
        F gap = out.eigen - diag(nu);
        if (gap.is_zero())
            throw ResonanceError("resonance: E_" + top.str() + " = E_" + nu.str() +
                                 " on the solver ladder");
        out.m_coeffs[nu] = acc / gap;
    }

    for (const auto& [nu, u] : out.m_coeffs) out.p_form += m_to_p(nu, ps).scaled(u);
    return out;
}

}  // namespace detail

/// Computes P_{lam,mu} at the given parameter bindings.
template <class F>
JackLaurent<F> jack_laurent(const BiPartition& pr, const Params<F>& ps) {
    return detail::solve_jack(pr, ps);
}

/// Memoized symbolic P_{lam,mu} over Q(k,p0).
inline const JackLaurent<RatFunc>& jack_laurent_symbolic(const BiPartition& pr) {
    static std::map<BiPartition, JackLaurent<RatFunc>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(pr);
        if (it != cache.end()) return it->second;
    }
    JackLaurent<RatFunc> val = detail::solve_jack(pr, symbolic_params());
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(pr, std::move(val)).first->second;
}

// ---------------------------------------------------------------------------
// Classical Jack polynomials via the stable operator on Lambda+; the independent
// solver used as an oracle and by the finite-N specialization check.
// ---------------------------------------------------------------------------

/// Classical Jack P_nu in power sums, p0-free: monic triangular eigenfunction of the
/// stable trigonometric operator on the classical dominance ladder.
template <class F>
struct ClassicalJack {
    Partition index;
    std::map<Partition, F> m_coeffs;
    SymFunc<F> p_form;
    F eigen;
};

namespace detail {

template <class F>
ClassicalJack<F> solve_classical_jack(const Partition& nu, const Params<F>& ps) {
    std::vector<Partition> lad;
    for (const auto& al : Partition::all_of_size(static_cast<int>(nu.size())))
        if (al.prefix_dominated_by(nu)) lad.push_back(al);
    std::sort(lad.begin(), lad.end(),
              [](const Partition& a, const Partition& b) { return Partition::lex_less(b, a); });

    OperatorSpec<F> op(OpKind::TrigStable, ps);
    std::map<Partition, std::map<Partition, F>> cols;
    for (const auto& al : lad) {
        auto col = classical::p_to_m(apply(op, classical::m_to_p<F>(al)));
        for (const auto& [rho, c] : col)
            if (!rho.prefix_dominated_by(al))
                throw TriangularityError("stable operator not triangular at m_" + al.str());
        cols.emplace(al, std::move(col));
    }
    auto diag = [&](const Partition& al) -> F {
        auto it = cols.at(al).find(al);
        return it == cols.at(al).end() ? F(0) : it->second;
    };

    ClassicalJack<F> out;
    out.index = nu;
    out.eigen = diag(nu);
    out.m_coeffs[nu] = F(1);
    for (std::size_t i = 1; i < lad.size(); ++i) {
        const Partition& al = lad[i];
        F acc(0);
        for (std::size_t j = 0; j < i; ++j) {
            auto uit = out.m_coeffs.find(lad[j]);
            if (uit == out.m_coeffs.end()) continue;
            auto lit = cols.at(lad[j]).find(al);
            if (lit == cols.at(lad[j]).end()) continue;
            acc += lit->second * uit->second;
        }
        if (acc.is_zero()) continue;
        F gap = out.eigen - diag(al);
        if (gap.is_zero()) throw ResonanceError("resonance in classical Jack at m_" + al.str());
        out.m_coeffs[al] = acc / gap;
    }
    for (const auto& [al, u] : out.m_coeffs) out.p_form += classical::m_to_p<F>(al).scaled(u);
    return out;
}

}  // namespace detail

template <class F>
ClassicalJack<F> classical_jack(const Partition& nu, const Params<F>& ps) {
    return detail::solve_classical_jack(nu, ps);
}

inline const ClassicalJack<RatFunc>& classical_jack_symbolic(const Partition& nu) {
    static std::map<Partition, ClassicalJack<RatFunc>> cache;
    static std::mutex mtx;
    {
        std::lock_guard<std::mutex> lock(mtx);
        auto it = cache.find(nu);
        if (it != cache.end()) return it->second;
    }
    ClassicalJack<RatFunc> val = detail::solve_classical_jack(nu, symbolic_params());
    std::lock_guard<std::mutex> lock(mtx);
    return cache.emplace(nu, std::move(val)).first->second;
}

// ---------------------------------------------------------------------------
// Complete symmetric functions and the k = -1 Jacobi-Trudy determinant.
// ---------------------------------------------------------------------------

/// h_i via the Newton recurrence n h_n = sum_{a=1}^{n} p_a h_{n-a}; h_0 = 1, h_{i<0} = 0.
template <class F>
SymFunc<F> complete_h(int i) {
    if (i < 0) return SymFunc<F>::zero();
    std::vector<SymFunc<F>> h{SymFunc<F>::one()};
    for (int n = 1; n <= i; ++n) {
        SymFunc<F> acc;
        for (int a = 1; a <= n; ++a) acc += SymFunc<F>::p(a) * h[static_cast<std::size_t>(n - a)];
        h.push_back(acc.scaled(F(Rational(1, n))));
    }
    return h[static_cast<std::size_t>(i)];
}

template <class F>
SymFunc<F> complete_h_star(int i) {
    return star(complete_h<F>(i));
}

namespace detail {

/// Fraction-free Bareiss determinant over the commutative ring of SymFunc values.
template <class F>
SymFunc<F> bareiss_det(std::vector<std::vector<SymFunc<F>>> m) {
    const std::size_t n = m.size();
    if (n == 0) return SymFunc<F>::one();
    int sign = 1;
    SymFunc<F> prev = SymFunc<F>::one();
    for (std::size_t c = 0; c + 1 < n; ++c) {
        std::size_t piv = c;
        while (piv < n && m[piv][c].is_zero()) ++piv;
        if (piv == n) return SymFunc<F>::zero();
        if (piv != c) {
            std::swap(m[piv], m[c]);
            sign = -sign;
        }
        for (std::size_t i = c + 1; i < n; ++i) {
            for (std::size_t j = c + 1; j < n; ++j) {
                SymFunc<F> num = m[i][j] * m[c][c] - m[i][c] * m[c][j];
                m[i][j] = divide_exact(num, prev);
            }
            m[i][c] = SymFunc<F>::zero();
        }
        prev = m[c][c];
    }
    SymFunc<F> det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

}  // namespace detail

/// The (r+s) x (r+s) Jacobi-Trudy determinant in h and h*: rows 1..s carry
/// h*_{mu_{s+1-t}+t-c}, rows s+1..s+r carry h_{lam_t-s-t+c}.
template <class F>
SymFunc<F> jacobi_trudy_det(const Partition& lam, const Partition& mu) {
    const int r = lam.length(), s = mu.length();
    const int n = r + s;
    if (n == 0) return SymFunc<F>::one();
    std::vector<std::vector<SymFunc<F>>> m(static_cast<std::size_t>(n),
                                           std::vector<SymFunc<F>>(static_cast<std::size_t>(n)));
    for (int t = 1; t <= s; ++t)
        for (int c = 1; c <= n; ++c)
            m[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(c - 1)] =
                complete_h_star<F>(mu.part(s + 1 - t) + t - c);
    for (int t = 1; t <= r; ++t)
        for (int c = 1; c <= n; ++c)
            m[static_cast<std::size_t>(s + t - 1)][static_cast<std::size_t>(c - 1)] =
                complete_h<F>(lam.part(t) - s - t + c);
    return detail::bareiss_det(std::move(m));
}

/// The k -> -1 limit of P_{lam,mu}: substitutes k = -1 into every coefficient and checks
/// the result is p0-free. Throws PoleAtMinusOne / ResidualP0Dependence as sentinels.
inline SymFunc<RatFunc> jt_limit(const Partition& lam, const Partition& mu) {
    const JackLaurent<RatFunc>& P = jack_laurent_symbolic({lam, mu});
    SymFunc<RatFunc> out;
    for (const auto& [m, c] : P.p_form.terms()) {
        RatFunc v;
        try {
            v = c.substitute(RatFunc(-1), RatFunc::p0());
        } catch (const PoleError&) {
            throw PoleAtMinusOne("P_" + lam.str() + "," + mu.str() + ": coefficient " + c.str() +
                                 " has a pole at k = -1");
        }
        if (!v.is_constant())
            throw ResidualP0Dependence("P_" + lam.str() + "," + mu.str() +
                                       ": k = -1 limit still depends on p0: " + v.str());
        out.add_term(m, v);
    }
    return out;
}

}  // namespace jacklaurent

#endif
