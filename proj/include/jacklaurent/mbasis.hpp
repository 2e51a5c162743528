#ifndef JACKLAURENT_MBASIS_HPP
#define JACKLAURENT_MBASIS_HPP

#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "jacklaurent/partition.hpp"
#include "jacklaurent/sym_func.hpp"

namespace jacklaurent {

/// Expansion in the monomial Laurent basis with coefficients polynomial in p0 (k never appears).
using MExpansion = std::map<BiPartition, ParamPoly>;

namespace detail {

inline long factorial(int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

template <class Fn>
void set_partition_rec(int i, int n, int nblocks, std::vector<int>& block, Fn& fn) {
    if (i == n) {
        fn(block, nblocks);
        return;
    }
    for (int b = 0; b <= nblocks; ++b) {
        block[static_cast<std::size_t>(i)] = b;
        set_partition_rec(i + 1, n, b == nblocks ? nblocks + 1 : nblocks, block, fn);
    }
}

/// Visits every set partition of {0..n-1} as a restricted-growth string (block labels).
template <class Fn>
void for_each_set_partition(int n, Fn&& fn) {
    std::vector<int> block(static_cast<std::size_t>(n), 0);
    set_partition_rec(0, n, 0, block, fn);
}

}  // namespace detail

/// Exact expansion of p_alpha * p_{-beta} in the m basis: enumerate set partitions of the
/// signed parts; each zero-net block contributes one step of the falling factorial
/// (p0 - t1)(p0 - t1 - 1)...; repeated nonzero block exponents contribute multiplicity
/// factorials; the nonzero exponents, split by sign, index the target pair.
inline MExpansion p_product_to_m(const Partition& alpha, const Partition& beta) {
    std::vector<int> parts;
    for (int p : alpha.parts()) parts.push_back(p);
    for (int p : beta.parts()) parts.push_back(-p);
    const int n = static_cast<int>(parts.size());

    MExpansion out;
    auto visit = [&](const std::vector<int>& block, int nblocks) {
        std::vector<long> net(static_cast<std::size_t>(nblocks), 0);
        for (int t = 0; t < n; ++t) net[static_cast<std::size_t>(block[static_cast<std::size_t>(t)])] += parts[static_cast<std::size_t>(t)];
        std::vector<int> pos, neg;
        int t0 = 0;
        for (long e : net) {
            if (e > 0)
                pos.push_back(static_cast<int>(e));
            else if (e < 0)
                neg.push_back(static_cast<int>(-e));
            else
                ++t0;
        }
        const int t1 = static_cast<int>(pos.size() + neg.size());
        std::sort(pos.rbegin(), pos.rend());
        std::sort(neg.rbegin(), neg.rend());

        long mult = 1;
        for (const auto& vals : {pos, neg}) {
            int run = 1;
            for (std::size_t i = 1; i <= vals.size(); ++i) {
                if (i < vals.size() && vals[i] == vals[i - 1]) {
                    ++run;
                } else {
                    mult *= detail::factorial(run);
                    run = 1;
                }
            }
        }

        ParamPoly coeff(mult);
        for (int q = 0; q < t0; ++q)
            coeff *= ParamPoly::p0() - ParamPoly(t1 + q);

        BiPartition target{Partition(pos), Partition(neg)};
        auto it = out.find(target);
        if (it == out.end())
            out.emplace(std::move(target), std::move(coeff));
        else
            it->second += coeff;
    };
    detail::for_each_set_partition(n, visit);
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

namespace detail {

/// The bidegree band (d,e): all pairs on the rungs (d-r, e-r) together with the transition
/// matrix from p-products to m entries. Shared, parameter-free data; built once per band.
struct MBand {
    std::vector<BiPartition> index;                 // canonical order, rung 0 first
    std::map<BiPartition, int> pos;
    std::vector<std::vector<ParamPoly>> transition;  // [m-row][product-column]
};

inline const MBand& m_band(long d, long e) {
    static std::map<std::pair<long, long>, MBand> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(d, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    MBand band;
    for (long r = 0; d - r >= 0 && e - r >= 0; ++r)
        for (const auto& al : Partition::all_of_size(static_cast<int>(d - r)))
            for (const auto& be : Partition::all_of_size(static_cast<int>(e - r)))
                band.index.emplace_back(al, be);
    for (std::size_t i = 0; i < band.index.size(); ++i) band.pos[band.index[i]] = static_cast<int>(i);

    const std::size_t n = band.index.size();
    band.transition.assign(n, std::vector<ParamPoly>(n));
    for (std::size_t col = 0; col < n; ++col) {
        MExpansion ex = p_product_to_m(band.index[col].lam, band.index[col].mu);
        for (auto& [pair, c] : ex) band.transition[static_cast<std::size_t>(band.pos.at(pair))][col] = std::move(c);
    }
    return cache.emplace(key, std::move(band)).first->second;
}

/// Columns of the inverse transition for band (d,e): m_{pair} expressed in p-products.
/// Coefficients are k-free rational functions, polynomial in p0 by construction.
inline const std::vector<std::vector<RatFunc>>& m_band_inverse(long d, long e) {
    static std::map<std::pair<long, long>, std::vector<std::vector<RatFunc>>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto key = std::make_pair(d, e);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    const MBand& band = m_band(d, e);
    const std::size_t n = band.index.size();
    std::vector<std::vector<RatFunc>> aug(n, std::vector<RatFunc>(2 * n, RatFunc(0)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug[i][j] = RatFunc(band.transition[i][j]);
        aug[i][n + i] = RatFunc(1);
    }
    // Gauss-Jordan over Q(p0)
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col].is_zero()) ++piv;
        if (piv == n)
            throw SingularTransitionError("m-basis transition singular at band (" +
                                          std::to_string(d) + "," + std::to_string(e) + ")");
        std::swap(aug[piv], aug[col]);
        RatFunc inv = RatFunc(1) / aug[col][col];
        for (std::size_t j = col; j < 2 * n; ++j) aug[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            RatFunc f = aug[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    std::vector<std::vector<RatFunc>> inv_cols(n, std::vector<RatFunc>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) inv_cols[j][i] = aug[i][n + j];
    return cache.emplace(key, std::move(inv_cols)).first->second;
}

inline PMonomial product_monomial(const BiPartition& pr) {
    PMonomial m;
    for (int p : pr.lam.parts()) m = m.times_p(p);
    for (int p : pr.mu.parts()) m = m.times_p(-p);
    return m;
}

}  // namespace detail

/// The unique element of Lambda+- whose phi_N image is the finite monomial Laurent polynomial
/// m_chi for every large N, expanded in power-sum products. Symbolic; coefficients lie in Q[p0].
inline const SymFunc<RatFunc>& m_to_p_symbolic(const BiPartition& pair) {
    static std::map<BiPartition, SymFunc<RatFunc>> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(pair);
    if (it != cache.end()) return it->second;

    const long d = pair.lam.size(), e = pair.mu.size();
    const detail::MBand& band = detail::m_band(d, e);
    const auto& inv = detail::m_band_inverse(d, e);
    const auto& column = inv[static_cast<std::size_t>(band.pos.at(pair))];
    SymFunc<RatFunc> out;
    for (std::size_t i = 0; i < band.index.size(); ++i)
        if (!column[i].is_zero())
            out.add_term(detail::product_monomial(band.index[i]), column[i]);
    return cache.emplace(pair, std::move(out)).first->second;
}

/// m_{lam,mu} realized over the coefficient field F at the given parameter bindings.
template <class F>
SymFunc<F> m_to_p(const BiPartition& pair, const Params<F>& ps) {
    const SymFunc<RatFunc>& sym = m_to_p_symbolic(pair);
    SymFunc<F> out;
    for (const auto& [m, c] : sym.terms()) {
        if (!c.is_polynomial())
            throw std::logic_error("m_to_p: transition coefficient not polynomial in p0");
        // polynomial in p0, so evaluation cannot pole
        F v = c.num().template eval_at<F>(ps.k, ps.p0);
        out.add_term(m, v);
    }
    return out;
}

template <>
inline SymFunc<RatFunc> m_to_p<RatFunc>(const BiPartition& pair, const Params<RatFunc>& ps) {
    const SymFunc<RatFunc>& sym = m_to_p_symbolic(pair);
    if (is_symbolic(ps)) return sym;
    return sym.mapped_coeffs([&](const RatFunc& c) { return c.substitute(ps.k, ps.p0); });
}

/// Coefficients of f in the m basis; general coefficients are carried through linearly.
template <class F>
std::map<BiPartition, F> p_to_m(const SymFunc<F>& f, const Params<F>& ps) {
    std::map<BiPartition, F> out;
    for (const auto& [mono, c] : f.terms()) {
        if (mono.wexp() != 0) throw DomainError("p_to_m: operand must be w-free");
        std::vector<int> pos, neg;
        for (const auto& [i, e] : mono.factors())
            for (int q = 0; q < e; ++q) (i > 0 ? pos : neg).push_back(std::abs(i));
        std::sort(pos.rbegin(), pos.rend());
        std::sort(neg.rbegin(), neg.rend());
        MExpansion ex = p_product_to_m(Partition(pos), Partition(neg));
        for (const auto& [pair, poly] : ex) {
            F v = c * poly.template eval_at<F>(ps.k, ps.p0);
            if (v.is_zero()) continue;
            auto it = out.find(pair);
            if (it == out.end()) {
                out.emplace(pair, v);
            } else {
                it->second += v;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Classical (mu = empty, p0-free) fast path, used by the stable-operator solver
// at degrees where the set-partition enumeration is out of reach.
// ---------------------------------------------------------------------------

namespace classical {

/// Multiplication rule in the classical monomial basis: E * p_r adds r to one part value
/// (or appends a new part), with the multiplicity of the changed value in the target.
inline std::map<Partition, Rational> times_p(const std::map<Partition, Rational>& ex, int r) {
    std::map<Partition, Rational> out;
    for (const auto& [nu, c] : ex) {
        std::vector<int> values{0};
        for (std::size_t i = 0; i < nu.parts().size(); ++i)
            if (i == 0 || nu.parts()[i] != nu.parts()[i - 1]) values.push_back(nu.parts()[i]);
        for (int v : values) {
            std::vector<int> w = nu.parts();
            if (v == 0) {
                w.push_back(r);
            } else {
                for (auto& x : w)
                    if (x == v) {
                        x += r;
                        break;
                    }
            }
            std::sort(w.rbegin(), w.rend());
            Partition target(w);
            int mult = 0;
            for (int x : target.parts())
                if (x == v + r) ++mult;
            out[target] += Rational(mult) * c;
        }
    }
    for (auto it = out.begin(); it != out.end();)
        it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return out;
}

/// Expansion of p_alpha in the classical m basis.
inline std::map<Partition, Rational> p_to_m_row(const Partition& alpha) {
    std::map<Partition, Rational> ex{{Partition(), Rational(1)}};
    for (int r : alpha.parts()) ex = times_p(ex, r);
    return ex;
}

struct DegreeData {
    std::vector<Partition> index;
    std::map<Partition, int> pos;
    std::vector<std::vector<Rational>> inv;  // inv[m-index] = column over products
};

inline const DegreeData& degree_data(int d) {
    static std::map<int, DegreeData> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;

    DegreeData dd;
    dd.index = Partition::all_of_size(d);
    for (std::size_t i = 0; i < dd.index.size(); ++i) dd.pos[dd.index[i]] = static_cast<int>(i);
    const std::size_t n = dd.index.size();
    std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
    for (std::size_t col = 0; col < n; ++col) {
        auto row = p_to_m_row(dd.index[col]);
        for (const auto& [mu, c] : row) aug[static_cast<std::size_t>(dd.pos.at(mu))][col] = c;
    }
    for (std::size_t i = 0; i < n; ++i) aug[i][n + i] = Rational(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && aug[piv][col].is_zero()) ++piv;
        if (piv == n) throw SingularTransitionError("classical m-basis transition singular");
        std::swap(aug[piv], aug[col]);
        Rational inv = aug[col][col].inverse();
        for (std::size_t j = col; j < 2 * n; ++j) aug[col][j] *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || aug[i][col].is_zero()) continue;
            Rational f = aug[i][col];
            for (std::size_t j = col; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
        }
    }
    dd.inv.assign(n, std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) dd.inv[j][i] = aug[i][n + j];
    return cache.emplace(d, std::move(dd)).first->second;
}

/// Classical m_lambda in power sums; p0-free, so valid over any F.
template <class F>
SymFunc<F> m_to_p(const Partition& lam) {
    const DegreeData& dd = degree_data(static_cast<int>(lam.size()));
    const auto& col = dd.inv[static_cast<std::size_t>(dd.pos.at(lam))];
    SymFunc<F> out;
    for (std::size_t i = 0; i < dd.index.size(); ++i) {
        if (col[i].is_zero()) continue;
        PMonomial m;
        for (int p : dd.index[i].parts()) m = m.times_p(p);
        out.add_term(m, F(col[i]));
    }
    return out;
}

/// Coefficients of a homogeneous Lambda+ element in the classical m basis.
template <class F>
std::map<Partition, F> p_to_m(const SymFunc<F>& f) {
    std::map<Partition, F> out;
    for (const auto& [mono, c] : f.terms()) {
        std::vector<int> pos;
        for (const auto& [i, e] : mono.factors()) {
            if (i < 0 || mono.wexp() != 0) throw DomainError("classical p_to_m: Lambda+ only");
            for (int q = 0; q < e; ++q) pos.push_back(i);
        }
        std::sort(pos.rbegin(), pos.rend());
        for (const auto& [mu, v] : p_to_m_row(Partition(pos))) {
            F add = c * F(v);
            if (add.is_zero()) continue;
            auto it = out.find(mu);
            if (it == out.end()) {
                out.emplace(mu, add);
            } else {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

}  // namespace classical

}  // namespace jacklaurent

#endif
