#ifndef JACKLAURENT_CMS_OPS_HPP
#define JACKLAURENT_CMS_OPS_HPP

#include <string>
#include <vector>

#include "jacklaurent/partition.hpp"
#include "jacklaurent/sym_func.hpp"

namespace jacklaurent {

enum class OpKind {
    TrigStable,        // stable trigonometric lift, degree 0, Lambda+
    TrigParam,         // p0-dependent trigonometric lift, degree 0, Lambda+
    Rational,          // rational lift, degree -2, Lambda+
    BCRational,        // BC rational lift, degree -1, Lambda+
    Laurent,           // Laurent lift, degree 0, Lambda+-
    LaurentExtended,   // Laurent lift on Lambda+-[w]
    MomentumTrig,      // sum p_a d_a (net-degree operator)
    MomentumRational,  // sum p_{a-1} d_a
};

inline const char* op_kind_name(OpKind k) {
    switch (k) {
        case OpKind::TrigStable: return "trig-stable";
        case OpKind::TrigParam: return "trig-param";
        case OpKind::Rational: return "rational";
        case OpKind::BCRational: return "bc-rational";
        case OpKind::Laurent: return "laurent";
        case OpKind::LaurentExtended: return "laurent-ext";
        case OpKind::MomentumTrig: return "momentum-trig";
        case OpKind::MomentumRational: return "momentum-rational";
    }
    return "?";
}

inline bool parse_op_kind(const std::string& s, OpKind& out) {
    for (OpKind k : {OpKind::TrigStable, OpKind::TrigParam, OpKind::Rational, OpKind::BCRational,
                     OpKind::Laurent, OpKind::LaurentExtended, OpKind::MomentumTrig,
                     OpKind::MomentumRational}) {
        if (s == op_kind_name(k)) {
            out = k;
            return true;
        }
    }
    return false;
}

/// A CMS-family operator with its parameter bindings. Bindings default to the formal
/// generators so the duality right-hand sides (operators at transformed parameters) are
/// expressible without a second code path. l is the BC coupling, used only by BCRational.
template <class F>
struct OperatorSpec {
    OpKind kind;
    F k;
    F p0;
    F l;

    OperatorSpec(OpKind kd, const Params<F>& ps, const F& coupling = F(0))
        : kind(kd), k(ps.k), p0(ps.p0), l(coupling) {}
};

namespace detail {

template <class F>
void check_domain(OpKind kind, const SymFunc<F>& f) {
    switch (kind) {
        case OpKind::TrigStable:
        case OpKind::TrigParam:
        case OpKind::Rational:
        case OpKind::BCRational:
        case OpKind::MomentumRational:
            if (!f.in_lambda_plus())
                throw DomainError(std::string(op_kind_name(kind)) +
                                  ": operand must lie in Lambda+ (nonnegative indices, no w)");
            break;
        case OpKind::Laurent:
        case OpKind::MomentumTrig:
            if (!f.w_free())
                throw DomainError(std::string(op_kind_name(kind)) + ": operand must be w-free");
            break;
        case OpKind::LaurentExtended:
            break;
    }
}

/// Attaches p_s to the monomial, or folds s == 0 into the coefficient as the parameter p0.
template <class F>
void emit(SymFunc<F>& out, const PMonomial& m, int s, F c, const F& p0) {
    if (c.is_zero()) return;
    if (s == 0)
        out.add_term(m, c * p0);
    else
        out.add_term(m.times_p(s), c);
}

/// Second-order part: sum over ordered pairs (a,b) of p_{a+b+shift} d_a d_b, with the index-0
/// target folded to the parameter p0.
template <class F>
void second_order(SymFunc<F>& out, const PMonomial& m, const F& c, int shift, const F& p0) {
    const auto& fs = m.factors();
    for (std::size_t x = 0; x < fs.size(); ++x) {
        const auto [a, ea] = fs[x];
        if (ea >= 2) {
            const long base = static_cast<long>(a) * a * ea * (ea - 1);
            PMonomial m2 = m.divided_by_p(a).divided_by_p(a);
            emit(out, m2, 2 * a + shift, c * F(base), p0);
        }
        for (std::size_t y = x + 1; y < fs.size(); ++y) {
            const auto [b, eb] = fs[y];
            const long base = 2L * a * ea * b * eb;
            PMonomial m2 = m.divided_by_p(a).divided_by_p(b);
            emit(out, m2, a + b + shift, c * F(base), p0);
        }
    }
}

template <class F>
SymFunc<F> apply_monomial(const OperatorSpec<F>& op, const PMonomial& m, const F& c) {
    SymFunc<F> out;
    const F& k = op.k;
    const F& p0 = op.p0;
    const F one_plus_k = F(1) + k;
    const auto& fs = m.factors();

    switch (op.kind) {
        case OpKind::TrigStable:
        case OpKind::TrigParam: {
            second_order(out, m, c, 0, p0);
            for (const auto& [g, e] : fs) {
                const F ge = F(static_cast<long>(g) * e);
                PMonomial m1 = m.divided_by_p(g);
                for (int u = 1; u <= g - 1; ++u)
                    out.add_term(m1.times_p(u).times_p(g - u), -(k * c * ge));
                F diag = op.kind == OpKind::TrigStable ? (one_plus_k * F(g) - k)
                                                       : (one_plus_k * F(g) - k * p0);
                out.add_term(m, c * ge * diag);
            }
            break;
        }
        case OpKind::Laurent:
        case OpKind::LaurentExtended: {
            second_order(out, m, c, 0, p0);
            for (const auto& [g, e] : fs) {
                const F ge = F(static_cast<long>(g) * e);
                PMonomial m1 = m.divided_by_p(g);
                if (g >= 2) {
                    for (int u = 1; u <= g - 1; ++u)
                        out.add_term(m1.times_p(u).times_p(g - u), -(k * c * ge));
                } else if (g <= -2) {
                    for (int u = g + 1; u <= -1; ++u)
                        out.add_term(m1.times_p(u).times_p(g - u), k * c * ge);
                }
                const F sign = F(g > 0 ? 1 : -1);
                out.add_term(m, c * ge * (one_plus_k * F(g) - k * p0 * sign));
            }
            if (op.kind == OpKind::LaurentExtended && m.wexp() != 0) {
                const long l = m.wexp();
                out.add_term(m, c * (p0 * F(l * l) + F(2 * l * m.net_degree())));
            }
            break;
        }
        case OpKind::Rational: {
            second_order(out, m, c, -2, p0);
            for (const auto& [g, e] : fs) {
                const F ge = F(static_cast<long>(g) * e);
                PMonomial m1 = m.divided_by_p(g);
                if (g >= 2) {
                    // -k sum_{a,b>=0} p_a p_b d_{a+b+2}: decompositions of g-2 with p_0 = parameter
                    for (int u = 0; u <= g - 2; ++u) {
                        const int v = g - 2 - u;
                        F coeff = -(k * c * ge);
                        PMonomial t = m1;
                        if (u == 0) coeff *= p0; else t = t.times_p(u);
                        if (v == 0) coeff *= p0; else t = t.times_p(v);
                        out.add_term(t, coeff);
                    }
                    emit(out, m1, g - 2, c * ge * one_plus_k * F(g - 1), p0);
                }
            }
            break;
        }
        case OpKind::BCRational: {
            second_order(out, m, c, -1, p0);
            const F mom_coeff = -(F(2) * k * p0 + op.l + F(Rational(1, 2)));
            for (const auto& [g, e] : fs) {
                const F ge = F(static_cast<long>(g) * e);
                PMonomial m1 = m.divided_by_p(g);
                for (int u = 1; u <= g - 2; ++u)
                    out.add_term(m1.times_p(u).times_p(g - 1 - u), -(k * c * ge));
                emit(out, m1, g - 1, c * ge * (one_plus_k * F(g) + mom_coeff), p0);
                if (g == 1) out.add_term(m1, c * F(e) * k * p0 * p0);
            }
            break;
        }
        case OpKind::MomentumTrig: {
            const long nd = m.net_degree();
            if (nd != 0) out.add_term(m, c * F(nd));
            break;
        }
        case OpKind::MomentumRational: {
            for (const auto& [g, e] : fs) {
                const F ge = F(static_cast<long>(g) * e);
                emit(out, m.divided_by_p(g), g - 1, c * ge, p0);
            }
            break;
        }
    }
    return out;
}

}  // namespace detail

/// Applies the operator structurally, monomial by monomial; exact, always terminating.
template <class F>
SymFunc<F> apply(const OperatorSpec<F>& op, const SymFunc<F>& f) {
    detail::check_domain(op.kind, f);
    SymFunc<F> out;
    for (const auto& [m, c] : f.terms()) out += detail::apply_monomial(op, m, c);
    return out;
}

enum class MomentumKind { Trig, Rational };

template <class F>
SymFunc<F> momentum(MomentumKind kind, const SymFunc<F>& f, const Params<F>& ps) {
    OperatorSpec<F> op(kind == MomentumKind::Trig ? OpKind::MomentumTrig : OpKind::MomentumRational,
                       ps);
    return apply(op, f);
}

/// One line of a verification report.
struct CheckItem {
    std::string check;
    std::string params;
    bool pass = false;
    std::string counterexample;
};

struct Report {
    std::vector<CheckItem> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (!it.pass) return false;
        return true;
    }
    void add(std::string check, std::string params, bool pass, std::string counter = "") {
        items.push_back({std::move(check), std::move(params), pass, std::move(counter)});
    }
    void merge(const Report& o) { items.insert(items.end(), o.items.begin(), o.items.end()); }
};

namespace detail {

/// Basis monomials of the operator domain up to total degree bound (and w powers for the
/// extended operator).
inline std::vector<PMonomial> domain_basis(OpKind kind, int degree_bound, int max_wexp = 2) {
    std::vector<PMonomial> out;
    const bool laurent = kind == OpKind::Laurent || kind == OpKind::LaurentExtended ||
                         kind == OpKind::MomentumTrig;
    const bool with_w = kind == OpKind::LaurentExtended;
    for (int d = 0; d <= degree_bound; ++d) {
        for (int dm = 0; dm + d <= degree_bound; ++dm) {
            if (!laurent && dm > 0) continue;
            for (const auto& al : Partition::all_of_size(d)) {
                for (const auto& be : Partition::all_of_size(dm)) {
                    PMonomial m;
                    for (int p : al.parts()) m = m.times_p(p);
                    for (int p : be.parts()) m = m.times_p(-p);
                    if (with_w) {
                        for (int l = 0; l <= max_wexp; ++l)
                            out.push_back(l == 0 ? m : m.times(PMonomial::w_pow(l)));
                    } else {
                        out.push_back(m);
                    }
                }
            }
        }
    }
    return out;
}

}  // namespace detail

/// Verifies the conjugation duality of the operator family on every basis monomial of total
/// degree <= degree_bound. Two equivalent forms are checked:
///   linear form:   scale^{-1}( L_{k,p0}( scale(f) ) ) == k * L_{1/k, k p0}(f)
///   twisted form:  theta( L_{k,p0}( theta(f) ) )      == (1/k) * L_{k, p0/k}(f)
/// where scale multiplies each monomial by k^(factor count) and theta is the involutive
/// map of sym_func.hpp. For the BC operator the transformed coupling satisfies
/// (2 lbar + 1) = (2l+1)/k; both sides are degree <= 1 in l, so three sample couplings decide.
inline Report check_duality(OpKind kind, int degree_bound) {
    Report rep;
    const Params<RatFunc> ps = symbolic_params();
    const RatFunc kk = RatFunc::k(), pp = RatFunc::p0();
    const RatFunc kinv = RatFunc(1) / kk;

    std::vector<RatFunc> couplings;
    if (kind == OpKind::BCRational)
        couplings = {RatFunc(0), RatFunc(2), RatFunc(Rational(-3, 5))};
    else
        couplings = {RatFunc(0)};

    for (const RatFunc& l : couplings) {
        OperatorSpec<RatFunc> lhs_op(kind, ps, l);
        Params<RatFunc> dual{kinv, kk * pp};
        RatFunc lbar = ((RatFunc(2) * l + RatFunc(1)) * kinv - RatFunc(1)) / RatFunc(2);
        OperatorSpec<RatFunc> rhs_op(kind, dual, lbar);
        Params<RatFunc> twisted{kk, pp * kinv};
        RatFunc ltw = ((RatFunc(2) * l + RatFunc(1)) * kk - RatFunc(1)) / RatFunc(2);
        OperatorSpec<RatFunc> tw_op(kind, twisted, ltw);

        bool ok = true;
        std::string counter;
        for (const auto& m : detail::domain_basis(kind, degree_bound)) {
            SymFunc<RatFunc> f = SymFunc<RatFunc>::monomial(m, RatFunc(1));
            SymFunc<RatFunc> lin =
                scale_k_per_factor(apply(lhs_op, scale_k_per_factor(f, +1)), -1);
            SymFunc<RatFunc> rhs = apply(rhs_op, f).scaled(kk);
            if (lin != rhs) {
                ok = false;
                counter = m.str() + " (linear form)";
                break;
            }
            SymFunc<RatFunc> tw = theta(apply(lhs_op, theta(f)));
            SymFunc<RatFunc> tw_rhs = apply(tw_op, f).scaled(kinv);
            if (tw != tw_rhs) {
                ok = false;
                counter = m.str() + " (twisted form)";
                break;
            }
        }
        rep.add("duality", std::string(op_kind_name(kind)) + " degree<=" +
                               std::to_string(degree_bound) +
                               (kind == OpKind::BCRational ? " l=" + l.str() : ""),
                ok, counter);
        if (kind != OpKind::BCRational) break;
    }
    return rep;
}

/// Verifies *-symmetry of the Laurent operator: star(L(star f)) == L(f).
inline Report check_star_symmetry(int degree_bound) {
    Report rep;
    const Params<RatFunc> ps = symbolic_params();
    OperatorSpec<RatFunc> op(OpKind::Laurent, ps);
    bool ok = true;
    std::string counter;
    for (const auto& m : detail::domain_basis(OpKind::Laurent, degree_bound)) {
        SymFunc<RatFunc> f = SymFunc<RatFunc>::monomial(m, RatFunc(1));
        if (star(apply(op, star(f))) != apply(op, f)) {
            ok = false;
            counter = m.str();
            break;
        }
    }
    rep.add("star-symmetry", "laurent degree<=" + std::to_string(degree_bound), ok, counter);
    return rep;
}

/// Verifies the stable relation: TrigStable == TrigParam + k (p0 - 1) * momentum on Lambda+.
inline Report check_stable_relation(int degree_bound) {
    Report rep;
    const Params<RatFunc> ps = symbolic_params();
    OperatorSpec<RatFunc> stable(OpKind::TrigStable, ps);
    OperatorSpec<RatFunc> param(OpKind::TrigParam, ps);
    const RatFunc shift = RatFunc::k() * (RatFunc::p0() - RatFunc(1));
    bool ok = true;
    std::string counter;
    for (const auto& m : detail::domain_basis(OpKind::TrigStable, degree_bound)) {
        SymFunc<RatFunc> f = SymFunc<RatFunc>::monomial(m, RatFunc(1));
        SymFunc<RatFunc> lhs = apply(stable, f);
        SymFunc<RatFunc> rhs = apply(param, f) + momentum(MomentumKind::Trig, f, ps).scaled(shift);
        if (lhs != rhs) {
            ok = false;
            counter = m.str();
            break;
        }
    }
    rep.add("stable-relation", "degree<=" + std::to_string(degree_bound), ok, counter);
    return rep;
}

}  // namespace jacklaurent

#endif
