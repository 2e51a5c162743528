#ifndef JACKLAURENT_PARTITION_HPP
#define JACKLAURENT_PARTITION_HPP

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "jacklaurent/rat_func.hpp"

namespace jacklaurent {

/// Integer partition: weakly decreasing positive parts; the empty sequence is the empty partition.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1])
                throw std::invalid_argument("Partition: parts must be weakly decreasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    long size() const {
        long s = 0;
        for (int p : parts_) s += p;
        return s;
    }
    bool empty() const { return parts_.empty(); }

    /// 1-based part access; 0 beyond the diagram.
    int part(int i) const {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    Partition conjugate() const {
        if (parts_.empty()) return {};
        std::vector<int> c(static_cast<std::size_t>(parts_[0]), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
        return Partition(std::move(c));
    }

    /// Column height lambda'_j, 1-based; 0 beyond the diagram.
    int conj_part(int j) const {
        if (j < 1) return 0;
        int n = 0;
        for (int p : parts_)
            if (p >= j) ++n;
        return n;
    }

    /// Prefix-sum domination: sum of the first n parts of *this <= same for other, for all n.
    bool prefix_dominated_by(const Partition& other) const {
        long sa = 0, sb = 0;
        const int n = std::max(length(), other.length());
        for (int i = 1; i <= n; ++i) {
            sa += part(i);
            sb += other.part(i);
            if (sa > sb) return false;
        }
        return true;
    }

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
    /// Canonical total order for containers: by size, then lexicographic.
    friend bool operator<(const Partition& a, const Partition& b) {
        const long sa = a.size(), sb = b.size();
        if (sa != sb) return sa < sb;
        return a.parts_ < b.parts_;
    }

    /// Lexicographic comparison (larger first parts first); refines dominance on equal size.
    static bool lex_less(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

    struct Box {
        int row;  // i, 1-based
        int col;  // j, 1-based
        friend bool operator==(Box a, Box b) { return a.row == b.row && a.col == b.col; }
    };

    std::vector<std::pair<Partition, Box>> add_box_candidates() const {
        std::vector<std::pair<Partition, Box>> out;
        for (int i = 1; i <= length() + 1; ++i) {
            if (part(i) < part(i - 1) || i == 1) {
                std::vector<int> v = parts_;
                if (i <= length())
                    ++v[static_cast<std::size_t>(i - 1)];
                else
                    v.push_back(1);
                out.emplace_back(Partition(std::move(v)), Box{i, part(i) + 1});
            }
        }
        return out;
    }

    std::vector<std::pair<Partition, Box>> remove_box_candidates() const {
        std::vector<std::pair<Partition, Box>> out;
        for (int i = 1; i <= length(); ++i) {
            if (part(i) > part(i + 1)) {
                std::vector<int> v = parts_;
                if (--v[static_cast<std::size_t>(i - 1)] == 0) v.pop_back();
                out.emplace_back(Partition(std::move(v)), Box{i, part(i)});
            }
        }
        return out;
    }

    /// All partitions of n (n >= 0), in decreasing lex order.
    static std::vector<Partition> all_of_size(int n) {
        std::vector<Partition> out;
        std::vector<int> cur;
        gen(n, n, cur, out);
        return out;
    }

    std::string str() const {
        std::ostringstream os;
        os << "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
        os << "]";
        return os.str();
    }

private:
    std::vector<int> parts_;

    static void gen(int n, int maxpart, std::vector<int>& cur, std::vector<Partition>& out) {
        if (n == 0) {
            out.emplace_back(Partition(cur));
            return;
        }
        for (int p = std::min(n, maxpart); p >= 1; --p) {
            cur.push_back(p);
            gen(n - p, p, cur, out);
            cur.pop_back();
        }
    }
};

/// Ordered pair of partitions indexing monomial and Jack-Laurent functions; weight = |lam| - |mu|.
struct BiPartition {
    Partition lam;
    Partition mu;

    BiPartition() = default;
    BiPartition(Partition l, Partition m) : lam(std::move(l)), mu(std::move(m)) {}

    long weight() const { return lam.size() - mu.size(); }
    long total() const { return lam.size() + mu.size(); }

    friend bool operator==(const BiPartition& a, const BiPartition& b) {
        return a.lam == b.lam && a.mu == b.mu;
    }
    friend bool operator!=(const BiPartition& a, const BiPartition& b) { return !(a == b); }
    friend bool operator<(const BiPartition& a, const BiPartition& b) {
        if (!(a.lam == b.lam)) return a.lam < b.lam;
        return a.mu < b.mu;
    }

    std::string str() const { return "(" + lam.str() + "," + mu.str() + ")"; }
};

/// Pair dominance order: equal weight plus prefix-sum domination in both components.
inline bool dominance_leq(const BiPartition& a, const BiPartition& b) {
    return a.weight() == b.weight() && a.lam.prefix_dominated_by(b.lam) &&
           a.mu.prefix_dominated_by(b.mu);
}

/// All pairs <= b in pair dominance, b first, sorted by total degree descending with a
/// fixed lexicographic tiebreak; a linear extension of the order, so a backward sweep works.
inline std::vector<BiPartition> ladder(const BiPartition& b) {
    std::vector<BiPartition> out;
    const long w = b.weight(), la = b.lam.size(), lb = b.mu.size();
    for (long d = 0; d <= la; ++d) {
        const long e = d - w;
        if (e < 0 || e > lb) continue;
        for (const auto& al : Partition::all_of_size(static_cast<int>(d))) {
            if (!al.prefix_dominated_by(b.lam)) continue;
            for (const auto& be : Partition::all_of_size(static_cast<int>(e))) {
                if (!be.prefix_dominated_by(b.mu)) continue;
                out.emplace_back(al, be);
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const BiPartition& x, const BiPartition& y) {
        const long tx = x.total(), ty = y.total();
        if (tx != ty) return tx > ty;
        if (x.lam != y.lam) return Partition::lex_less(y.lam, x.lam);
        return Partition::lex_less(y.mu, x.mu);
    });
    return out;
}

/// The figure Y = Y_lam ∪ Y_(-mu) ∪ Pi of a pair of partitions; rows y_i and columns y'_j
/// indexed by nonzero integers, zero outside the diagram.
class DiagramY {
public:
    DiagramY(Partition lam, Partition mu)
        : lam_(std::move(lam)), mu_(std::move(mu)), lamc_(lam_.conjugate()), muc_(mu_.conjugate()) {}

    const Partition& lam() const { return lam_; }
    const Partition& mu() const { return mu_; }

    int y(int i) const {
        if (i >= 1) return lam_.part(i);
        if (i <= -1) return -mu_.part(-i);
        return 0;
    }
    int yprime(int j) const {
        if (j >= 1) return lamc_.part(j);
        if (j <= -1) return -muc_.part(-j);
        return 0;
    }

    long y_lam_size() const { return lam_.size(); }
    long y_neg_mu_size() const { return mu_.size(); }
    long pi_size() const { return static_cast<long>(lam_.length()) * muc_.length(); }

    /// c_Y(box, x) = y_i - j - k (y'_j - i) + x for the box at figure coordinates (j, i).
    template <class F>
    F c(int j, int i, const F& x, const Params<F>& ps) const {
        return F(y(i)) - F(j) - ps.k * (F(yprime(j)) - F(i)) + x;
    }

private:
    Partition lam_, mu_, lamc_, muc_;
};

inline DiagramY build_figure_Y(const Partition& lam, const Partition& mu) { return {lam, mu}; }

struct FigureBox {
    int j;  // figure column
    int i;  // figure row
};

/// pi_1 for a box added to lambda at (row, col): the column below it inside Y_lam.
inline std::vector<FigureBox> pi1_boxes(const Partition::Box& added) {
    std::vector<FigureBox> out;
    for (int r = 1; r < added.row; ++r) out.push_back({added.col, r});
    return out;
}

/// pi_2 for a box deleted from mu at (row, col): figure column -col, rows -l(mu) .. -mu'_col - 1.
/// mu' refers to the diagram before deletion; rect_neg >= l(mu) enlarges the bounding rectangle.
inline std::vector<FigureBox> pi2_boxes(const Partition& mu, const Partition::Box& deleted,
                                        int rect_neg = -1) {
    if (rect_neg < 0) rect_neg = mu.length();
    std::vector<FigureBox> out;
    const int top = mu.conj_part(deleted.col);
    for (int r = -rect_neg; r < -top; ++r) out.push_back({-deleted.col, r});
    return out;
}

/// pi_3 for a box deleted from mu: figure column -col, rows 1 .. l(lambda) (or the enlarged height).
inline std::vector<FigureBox> pi3_boxes(const Partition& lam, const Partition::Box& deleted,
                                        int rect_pos = -1) {
    if (rect_pos < 0) rect_pos = lam.length();
    std::vector<FigureBox> out;
    for (int r = 1; r <= rect_pos; ++r) out.push_back({-deleted.col, r});
    return out;
}

}  // namespace jacklaurent

#endif
