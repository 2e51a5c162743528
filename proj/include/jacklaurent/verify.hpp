#ifndef JACKLAURENT_VERIFY_HPP
#define JACKLAURENT_VERIFY_HPP

#include <string>
#include <vector>

#include "jacklaurent/finite_n.hpp"
#include "jacklaurent/pieri.hpp"

namespace jacklaurent {

namespace detail {

inline std::vector<BiPartition> all_pairs(int max_lam, int max_mu) {
    std::vector<BiPartition> out;
    for (int a = 0; a <= max_lam; ++a)
        for (int b = 0; b <= max_mu; ++b)
            for (const auto& al : Partition::all_of_size(a))
                for (const auto& be : Partition::all_of_size(b)) out.emplace_back(al, be);
    return out;
}

/// Coefficients of f in the Jack-Laurent basis by repeated leading-term extraction
/// of the m-expansion along the dominance order.
inline std::map<BiPartition, RatFunc> expand_in_jack_basis(const SymFunc<RatFunc>& f) {
    const Params<RatFunc> ps = symbolic_params();
    std::map<BiPartition, RatFunc> rem = p_to_m(f, ps);
    std::map<BiPartition, RatFunc> out;
    while (!rem.empty()) {
        // pick a dominance-maximal pair in the remaining support
        auto best = rem.begin();
        for (auto it = std::next(rem.begin()); it != rem.end(); ++it)
            if (dominance_leq(best->first, it->first) && !(best->first == it->first)) best = it;
        for (auto it = rem.begin(); it != rem.end(); ++it)
            if (dominance_leq(best->first, it->first) && !(best->first == it->first)) best = it;
        const BiPartition pair = best->first;
        const RatFunc c = best->second;
        out[pair] = c;
        for (const auto& [nu, u] : jack_laurent_symbolic(pair).m_coeffs) {
            auto it = rem.find(nu);
            RatFunc v = (it == rem.end() ? RatFunc(0) : it->second) - c * u;
            if (v.is_zero()) {
                if (it != rem.end()) rem.erase(it);
            } else {
                rem[nu] = v;
            }
        }
    }
    return out;
}

}  // namespace detail

/// Eigen suite: the eigen-equation for |lam|,|mu| <= max_wt and the s = 1, 2 eigenvalue
/// formulas as rational-function identities for |lam|,|mu| <= max_wt_s.
inline Report suite_eigen(int max_wt = 3, int max_wt_s = 4) {
    Report rep;
    const Params<RatFunc> ps = symbolic_params();
    OperatorSpec<RatFunc> L(OpKind::Laurent, ps);
    bool eig_ok = true, mom_ok = true;
    std::string eig_bad, mom_bad;
    for (const auto& pr : detail::all_pairs(max_wt, max_wt)) {
        const auto& P = jack_laurent_symbolic(pr);
        RatFunc E = eigenvalue(pr, ps);
        if (!(P.eigen == E) || apply(L, P.p_form) != P.p_form.scaled(E)) {
            eig_ok = false;
            eig_bad = pr.str();
            break;
        }
        if (momentum(MomentumKind::Trig, P.p_form, ps) != P.p_form.scaled(RatFunc(pr.weight()))) {
            mom_ok = false;
            mom_bad = pr.str();
        }
    }
    rep.add("eigen-equation", "|lam|,|mu|<=" + std::to_string(max_wt), eig_ok, eig_bad);
    rep.add("momentum-eigenvalue", "|lam|,|mu|<=" + std::to_string(max_wt), mom_ok, mom_bad);

    bool s_ok = true;
    std::string s_bad;
    for (const auto& pr : detail::all_pairs(max_wt_s, max_wt_s)) {
        RatFunc e1 = eigenvalue_s(pr, 1, ps);
        RatFunc e2 = eigenvalue_s(pr, 2, ps);
        RatFunc E = eigenvalue(pr, ps);
        if (!(e1 == RatFunc(pr.weight())) || !(e2 + e2 == E)) {
            s_ok = false;
            s_bad = pr.str();
            break;
        }
    }
    rep.add("eigenvalue-formulas", "E^(1)=weight, E^(2)=E/2, |lam|,|mu|<=" + std::to_string(max_wt_s),
            s_ok, s_bad);
    return rep;
}

/// Duality suite: operator conjugation identities, *-symmetry, the stable relation and
/// the *-duality of the Jack-Laurent functions themselves.
inline Report suite_dualities(int degree_bound = 4, int max_wt = 3) {
    Report rep;
    for (OpKind k : {OpKind::TrigParam, OpKind::Rational, OpKind::Laurent, OpKind::BCRational})
        rep.merge(check_duality(k, degree_bound));
    rep.merge(check_star_symmetry(degree_bound));
    rep.merge(check_stable_relation(degree_bound));

    bool ok = true;
    std::string bad;
    for (const auto& pr : detail::all_pairs(max_wt, max_wt)) {
        const auto& P = jack_laurent_symbolic(pr);
        const auto& Q = jack_laurent_symbolic({pr.mu, pr.lam});
        if (star(P.p_form) != Q.p_form) {
            ok = false;
            bad = pr.str();
            break;
        }
    }
    rep.add("star-duality", "star(P_{lam,mu}) = P_{mu,lam}, |lam|,|mu|<=" + std::to_string(max_wt),
            ok, bad);
    return rep;
}

/// Pieri suite: the expansion against the direct product, coordinate vs diagrammatic
/// coefficients, the classical mu = 0 reduction and one rectangle-enlargement step.
inline Report suite_pieri(int max_wt = 3) {
    Report rep;
    const Params<RatFunc> ps = symbolic_params();
    bool oracle_ok = true, diag_ok = true, rect_ok = true, classical_ok = true;
    std::string oracle_bad, diag_bad, rect_bad, classical_bad;
    for (const auto& pr : detail::all_pairs(max_wt, max_wt)) {
        auto terms = pieri_expand(pr, ps);
        SymFunc<RatFunc> lhs = SymFunc<RatFunc>::p(1) * jack_laurent_symbolic(pr).p_form;
        SymFunc<RatFunc> rhs;
        for (const auto& t : terms) rhs += jack_laurent_symbolic(t.target).p_form.scaled(t.coeff);
        if (lhs != rhs) {
            oracle_ok = false;
            oracle_bad = pr.str();
        }
        for (const auto& t : terms) {
            RatFunc d = t.kind == PieriKind::AddedToLambda
                            ? v_add_diagrammatic(t.target.lam, pr.lam, pr.mu, ps)
                            : v_remove_diagrammatic(t.target.mu, pr.lam, pr.mu, ps);
            if (!(d == t.coeff)) {
                diag_ok = false;
                diag_bad = pr.str() + " -> " + t.target.str();
            }
            if (t.kind == PieriKind::RemovedFromMu) {
                RatFunc d2 = v_remove_diagrammatic(t.target.mu, pr.lam, pr.mu, ps,
                                                   pr.lam.length() + 1, pr.mu.length() + 1);
                if (!(d2 == t.coeff)) {
                    rect_ok = false;
                    rect_bad = pr.str() + " -> " + t.target.str();
                }
            }
        }
        // p_{-1} expansion against the starred product
        auto mterms = pieri_p_minus_one(pr, ps);
        SymFunc<RatFunc> mlhs = SymFunc<RatFunc>::p(-1) * jack_laurent_symbolic(pr).p_form;
        SymFunc<RatFunc> mrhs;
        for (const auto& t : mterms) mrhs += jack_laurent_symbolic(t.target).p_form.scaled(t.coeff);
        if (mlhs != mrhs) {
            oracle_ok = false;
            oracle_bad = pr.str() + " (p_-1)";
        }
    }
    rep.add("pieri-direct-product", "|lam|,|mu|<=" + std::to_string(max_wt), oracle_ok, oracle_bad);
    rep.add("pieri-diagrammatic", "coordinate == diagrammatic", diag_ok, diag_bad);
    rep.add("pieri-rectangle-invariance", "one enlargement step", rect_ok, rect_bad);

    // mu = 0: v_add against the coefficients extracted from the classical product
    for (int d = 0; d <= max_wt; ++d) {
        for (const auto& lam : Partition::all_of_size(d)) {
            SymFunc<RatFunc> prod =
                SymFunc<RatFunc>::p(1) * classical_jack_symbolic(lam).p_form;
            auto coeffs = detail::expand_in_jack_basis(prod);
            for (const auto& [lt, box] : lam.add_box_candidates()) {
                auto it = coeffs.find(BiPartition{lt, Partition()});
                RatFunc got = it == coeffs.end() ? RatFunc(0) : it->second;
                if (!(got == v_add(lt, lam, Partition(), symbolic_params()))) {
                    classical_ok = false;
                    classical_bad = lam.str() + " + box -> " + lt.str();
                }
            }
        }
    }
    rep.add("pieri-classical-reduction", "mu=0 matches classical Jack Pieri, |lam|<=" +
                                             std::to_string(max_wt),
            classical_ok, classical_bad);
    return rep;
}

/// Commuting diagrams for the five infinite-dimensional operators.
inline Report suite_diagrams(const std::vector<int>& ns = {2, 3, 4}, int degree_bound = 4) {
    Report rep;
    for (int n : ns)
        for (OpKind k : {OpKind::TrigParam, OpKind::Rational, OpKind::BCRational, OpKind::Laurent,
                         OpKind::LaurentExtended})
            rep.merge(check_commuting_diagram(k, n, degree_bound));
    return rep;
}

/// Specialization suite: the finite-N Jack identity and the power-sum identities.
inline Report suite_specialization(int max_wt = 2, const std::vector<int>& ns = {3, 4, 5},
                                   int n_max_powersum = 4, int a_max = 6) {
    Report rep;
    for (const auto& pr : detail::all_pairs(max_wt, max_wt)) {
        for (int n : ns) {
            if (n <= pr.lam.length() + pr.mu.length()) continue;
            const int a0 = pr.mu.part(1);
            for (int a : {a0, a0 + 1}) rep.merge(check_specialization_jack(pr.lam, pr.mu, n, a));
        }
    }
    for (int n = 2; n <= n_max_powersum; ++n) rep.merge(check_power_sum_identities(n, a_max));
    return rep;
}

/// Jacobi-Trudy suite: the k = -1 limit is p0-free and equals the determinant; the simplest
/// case gives p_1 p_{-1} - 1; the super specializations are finite and match direct images.
inline Report suite_jt(int max_wt = 3) {
    Report rep;
    bool ok = true;
    std::string bad;
    for (const auto& pr : detail::all_pairs(max_wt, max_wt)) {
        SymFunc<RatFunc> lim;
        try {
            lim = jt_limit(pr.lam, pr.mu);
        } catch (const std::exception& e) {
            ok = false;
            bad = pr.str() + ": " + e.what();
            break;
        }
        if (lim != jacobi_trudy_det<RatFunc>(pr.lam, pr.mu)) {
            ok = false;
            bad = pr.str();
            break;
        }
    }
    rep.add("jt-limit-equals-determinant", "|lam|,|mu|<=" + std::to_string(max_wt), ok, bad);

    SymFunc<RatFunc> p11 = jt_limit(Partition({1}), Partition({1}));
    SymFunc<RatFunc> expect =
        SymFunc<RatFunc>::p(1) * SymFunc<RatFunc>::p(-1) - SymFunc<RatFunc>::one();
    rep.add("jt-simplest-case", "P_{1,1}(-1) = p_1 p_{-1} - 1", p11 == expect,
            p11 == expect ? "" : p11.str());

    bool super_ok = true;
    std::string super_bad;
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 1}, {2, 1}}) {
        SuperPoly img = phi_mn(p11, m, n, Rational(-1));
        SuperPoly direct = phi_mn(expect, m, n, Rational(-1));
        if (!(img == direct)) {
            super_ok = false;
            super_bad = "m=" + std::to_string(m) + " n=" + std::to_string(n);
        }
    }
    rep.add("jt-super-specialization", "phi_{1,1}, phi_{2,1} of P_{1,1}(-1)", super_ok, super_bad);
    return rep;
}

/// Extended-algebra suite: eigenvalues of the w-extended operator and its phi_N diagram.
inline Report suite_extended(int max_wt = 2, const std::vector<int>& ns = {2, 3}) {
    Report rep;
    const Params<RatFunc> ps = symbolic_params();
    OperatorSpec<RatFunc> L(OpKind::LaurentExtended, ps);
    bool ok = true;
    std::string bad;
    for (const auto& pr : detail::all_pairs(max_wt, max_wt)) {
        const auto& P = jack_laurent_symbolic(pr);
        for (int l = 0; l <= 2; ++l) {
            SymFunc<RatFunc> wlP =
                SymFunc<RatFunc>::monomial(PMonomial::w_pow(l), RatFunc(1)) * P.p_form;
            RatFunc E = eigenvalue(pr, ps) + RatFunc::p0() * RatFunc(l * l) +
                        RatFunc(2 * l) * RatFunc(pr.weight());
            if (apply(L, wlP) != wlP.scaled(E)) {
                ok = false;
                bad = pr.str() + " l=" + std::to_string(l);
            }
        }
    }
    rep.add("extended-eigenvalues", "E + p0 l^2 + 2 l weight, l<=2, |lam|,|mu|<=" +
                                        std::to_string(max_wt),
            ok, bad);
    for (int n : ns) rep.merge(check_commuting_diagram(OpKind::LaurentExtended, n, 3));
    // the Euler-supercharacter example from the extended algebra
    SymFunc<RatFunc> E11 = jt_limit(Partition({1}), Partition({1})) + SymFunc<RatFunc>::w();
    SymFunc<RatFunc> expect = SymFunc<RatFunc>::p(1) * SymFunc<RatFunc>::p(-1) -
                              SymFunc<RatFunc>::one() + SymFunc<RatFunc>::w();
    rep.add("extended-euler-element", "E_{1,1} = p_1 p_{-1} - 1 + w", E11 == expect,
            E11 == expect ? "" : E11.str());
    return rep;
}

struct SuiteOptions {
    int degree = 4;
    std::vector<int> diagram_ns = {2, 3, 4};
    unsigned seed = 0;  // reserved for sampled checks
};

inline Report run_suite(const std::string& name, const SuiteOptions& opt = {}) {
    Report rep;
    if (name == "eigen" || name == "all") rep.merge(suite_eigen());
    if (name == "dualities" || name == "all") rep.merge(suite_dualities(opt.degree));
    if (name == "pieri" || name == "all") rep.merge(suite_pieri());
    if (name == "diagrams" || name == "all") rep.merge(suite_diagrams(opt.diagram_ns, opt.degree));
    if (name == "specialization" || name == "all") rep.merge(suite_specialization());
    if (name == "jt" || name == "all") rep.merge(suite_jt());
    if (name == "extended" || name == "all") rep.merge(suite_extended());
    return rep;
}

inline bool is_suite_name(const std::string& name) {
    for (const char* s : {"dualities", "pieri", "specialization", "jt", "eigen", "diagrams",
                          "extended", "all"})
        if (name == s) return true;
    return false;
}

}  // namespace jacklaurent

#endif
