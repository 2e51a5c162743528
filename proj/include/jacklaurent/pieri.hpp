#ifndef JACKLAURENT_PIERI_HPP
#define JACKLAURENT_PIERI_HPP

#include <string>
#include <vector>

#include "jacklaurent/partition.hpp"

namespace jacklaurent {

/// c_lambda(j i, x) = lambda_i - j - k (lambda'_j - i) + x.
template <class F>
F c_lambda(const Partition& lam, int j, int i, const F& x, const Params<F>& ps) {
    return F(lam.part(i)) - F(j) - ps.k * (F(lam.conj_part(j)) - F(i)) + x;
}

/// c_{lambda mu}(j i, x) = lambda_i + j + k (mu'_j + i) + x.
template <class F>
F c_pair(const Partition& lam, const Partition& mu, int j, int i, const F& x, const Params<F>& ps) {
    return F(lam.part(i)) + F(j) + ps.k * (F(mu.conj_part(j)) + F(i)) + x;
}

/// Coefficient of P_{lam+box, mu} in p_1 P_{lam,mu}: the product over rows above the added
/// box; 1 when the box lands in row 1 (empty product).
template <class F>
F v_add(const Partition& lam_tilde, const Partition& lam, const Partition& mu,
        const Params<F>& ps) {
    Partition::Box box{0, 0};
    bool found = false;
    for (const auto& [cand, b] : lam.add_box_candidates())
        if (cand == lam_tilde) {
            box = b;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("v_add: lam_tilde is not lam plus one box");
    (void)mu;
    const F k = ps.k;
    F v(1);
    for (int r = 1; r < box.row; ++r) {
        F num = c_lambda(lam, box.col, r, F(1), ps) * c_lambda(lam, box.col, r, -(k + k), ps);
        F den = c_lambda(lam, box.col, r, -k, ps) * c_lambda(lam, box.col, r, F(1) - k, ps);
        v *= num / den;
    }
    return v;
}

/// Coefficient of P_{lam, mu-box} in p_1 P_{lam,mu}: two c-function products and the closing
/// two-factor ratio; mu' is taken before deletion.
template <class F>
F v_remove(const Partition& mu_tilde, const Partition& lam, const Partition& mu,
           const Params<F>& ps) {
    Partition::Box box{0, 0};
    bool found = false;
    for (const auto& [cand, b] : mu.remove_box_candidates())
        if (cand == mu_tilde) {
            box = b;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("v_remove: mu_tilde is not mu minus one box");
    const F k = ps.k;
    const F p0 = ps.p0;
    const int j = box.col;
    F v(1);
    for (int r = box.row + 1; r <= mu.length(); ++r) {
        F num = c_lambda(mu, j, r, F(1) + k, ps) * c_lambda(mu, j, r, -k, ps);
        F den = c_lambda(mu, j, r, F(1), ps) * c_lambda(mu, j, r, F(0), ps);
        v *= num / den;
    }
    for (int r = 1; r <= lam.length(); ++r) {
        F num = c_pair(lam, mu, j, r, F(-1) - k * (p0 + F(2)), ps) *
                c_pair(lam, mu, j, r, -(k * p0), ps);
        F den = c_pair(lam, mu, j, r, F(-1) - k * (p0 + F(1)), ps) *
                c_pair(lam, mu, j, r, -(k * (p0 + F(1))), ps);
        v *= num / den;
    }
    const F mj(mu.conj_part(j));
    const F llam(lam.length()), lmu(mu.length());
    F num = (F(j - 1) + k * (llam + mj - p0 - F(1))) * (F(j) + k * (mj - lmu));
    F den = (F(j) + k * (llam + mj - p0)) * (F(j - 1) + k * (mj - lmu - F(1)));
    return v * (num / den);
}

/// Diagrammatic form of v_add over pi_1 with c_Y; identical to the coordinate form.
template <class F>
F v_add_diagrammatic(const Partition& lam_tilde, const Partition& lam, const Partition& mu,
                     const Params<F>& ps) {
    Partition::Box box{0, 0};
    bool found = false;
    for (const auto& [cand, b] : lam.add_box_candidates())
        if (cand == lam_tilde) {
            box = b;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("v_add_diagrammatic: box mismatch");
    DiagramY Y = build_figure_Y(lam, mu);
    const F k = ps.k;
    F v(1);
    for (const auto& b : pi1_boxes(box)) {
        F num = Y.c(b.j, b.i, -(k + k), ps) * Y.c(b.j, b.i, F(1), ps);
        F den = Y.c(b.j, b.i, -k, ps) * Y.c(b.j, b.i, F(1) - k, ps);
        v *= num / den;
    }
    return v;
}

/// Diagrammatic form of v_remove over pi_2 and pi_3 with the closing ratio
///   [(j+1+k(y'_j - y'_1 + p0 + 1)) (j + k(y'_j - y'_{-1}))]
///   / [(j + k(y'_j - y'_1 + p0)) (j+1+k(y'_j - y'_{-1} + 1))]
/// in figure coordinates (j negative for deleted boxes). rect_pos/rect_neg >= the diagram
/// lengths enlarge the bounding rectangle; the value is invariant under enlargement.
template <class F>
F v_remove_diagrammatic(const Partition& mu_tilde, const Partition& lam, const Partition& mu,
                        const Params<F>& ps, int rect_pos = -1, int rect_neg = -1) {
    Partition::Box box{0, 0};
    bool found = false;
    for (const auto& [cand, b] : mu.remove_box_candidates())
        if (cand == mu_tilde) {
            box = b;
            found = true;
            break;
        }
    if (!found) throw std::invalid_argument("v_remove_diagrammatic: box mismatch");
    if (rect_pos < 0) rect_pos = lam.length();
    if (rect_neg < 0) rect_neg = mu.length();
    DiagramY Y = build_figure_Y(lam, mu);
    const F k = ps.k;
    const F p0 = ps.p0;
    F v(1);
    for (const auto& b : pi2_boxes(mu, box, rect_neg)) {
        F num = Y.c(b.j, b.i, F(-1) - k, ps) * Y.c(b.j, b.i, k, ps);
        F den = Y.c(b.j, b.i, F(-1), ps) * Y.c(b.j, b.i, F(0), ps);
        v *= num / den;
    }
    for (const auto& b : pi3_boxes(lam, box, rect_pos)) {
        F num = Y.c(b.j, b.i, F(-1) - k * (p0 + F(2)), ps) * Y.c(b.j, b.i, -(k * p0), ps);
        F den = Y.c(b.j, b.i, F(-1) - k * (p0 + F(1)), ps) * Y.c(b.j, b.i, -(k * (p0 + F(1))), ps);
        v *= num / den;
    }
    const int j = -box.col;
    const F yj(Y.yprime(j));
    const F y1(rect_pos), ym1(-rect_neg);
    F num = (F(j + 1) + k * (yj - y1 + p0 + F(1))) * (F(j) + k * (yj - ym1));
    F den = (F(j) + k * (yj - y1 + p0)) * (F(j + 1) + k * (yj - ym1 + F(1)));
    return v * (num / den);
}

enum class PieriKind { AddedToLambda, RemovedFromMu, AddedToMu, RemovedFromLambda };

inline const char* pieri_kind_name(PieriKind k) {
    switch (k) {
        case PieriKind::AddedToLambda: return "added-to-lambda";
        case PieriKind::RemovedFromMu: return "removed-from-mu";
        case PieriKind::AddedToMu: return "added-to-mu";
        case PieriKind::RemovedFromLambda: return "removed-from-lambda";
    }
    return "?";
}

template <class F>
struct PieriTerm {
    BiPartition target;
    F coeff;
    PieriKind kind;
};

/// p_1 P_{lam,mu} = sum over addable lambda-boxes + sum over removable mu-boxes.
template <class F>
std::vector<PieriTerm<F>> pieri_expand(const BiPartition& pr, const Params<F>& ps) {
    std::vector<PieriTerm<F>> out;
    for (const auto& [lt, box] : pr.lam.add_box_candidates())
        out.push_back({BiPartition{lt, pr.mu}, v_add(lt, pr.lam, pr.mu, ps),
                       PieriKind::AddedToLambda});
    for (const auto& [mt, box] : pr.mu.remove_box_candidates())
        out.push_back({BiPartition{pr.lam, mt}, v_remove(mt, pr.lam, pr.mu, ps),
                       PieriKind::RemovedFromMu});
    return out;
}

/// p_{-1} P_{lam,mu}: the *-conjugate of pieri_expand(mu, lam), roles interchanged.
template <class F>
std::vector<PieriTerm<F>> pieri_p_minus_one(const BiPartition& pr, const Params<F>& ps) {
    std::vector<PieriTerm<F>> out;
    for (const auto& t : pieri_expand<F>(BiPartition{pr.mu, pr.lam}, ps)) {
        PieriKind kind = t.kind == PieriKind::AddedToLambda ? PieriKind::AddedToMu
                                                            : PieriKind::RemovedFromLambda;
        out.push_back({BiPartition{t.target.mu, t.target.lam}, t.coeff, kind});
    }
    return out;
}

}  // namespace jacklaurent

#endif
