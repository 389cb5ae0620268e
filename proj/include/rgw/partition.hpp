#pragma once

// Partitions of d and the combinatorial quantities the closed RGW formulas
// consume: conjugate, rank, hooks, contents, zeta, sq, sign.
//
// The canonical order of the partitions of d is reverse lexicographic,
// (d) first and (1^d) last; every table and operator matrix in this library
// is indexed in that order.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "rgw/errors.hpp"
#include "rgw/rational.hpp"

namespace rgw {

// Hard bound protecting the exact-arithmetic tables; p(24) is already past
// anything the formulas here are used for.
inline constexpr int kDefaultMaxDegree = 12;
inline constexpr int kHardMaxDegree = 24;

class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        for (int p : parts_)
            if (p <= 0) throw argument_error("partition parts must be positive");
    }

    const std::vector<int>& parts() const { return parts_; }
    int size() const {
        return std::accumulate(parts_.begin(), parts_.end(), 0);
    }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    friend bool operator==(const Partition& a, const Partition& b) = default;
    // Canonical (reverse lexicographic) order: descending comparison of the
    // padded part lists, so (d) < (d-1,1) < ... < (1^d).
    friend bool operator<(const Partition& a, const Partition& b) {
        return std::lexicographical_compare(
            b.parts_.begin(), b.parts_.end(), a.parts_.begin(), a.parts_.end());
    }

    std::string to_string() const {
        std::string s = "(";
        for (size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

  private:
    std::vector<int> parts_;
};

inline void check_degree(int d, int maxd = kDefaultMaxDegree) {
    if (d < 1 || d > maxd || maxd > kHardMaxDegree)
        throw argument_error("degree d=" + std::to_string(d) +
                             " out of range [1," + std::to_string(maxd) + "]");
}

// All partitions of d in canonical order; count is p(d).
inline std::vector<Partition> partitions_of(int d, int maxd = kDefaultMaxDegree) {
    check_degree(d, maxd);
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, d, d);
    return out;
}

inline Partition conjugate(const Partition& la) {
    std::vector<int> cols;
    const auto& p = la.parts();
    if (!p.empty()) {
        cols.assign(p[0], 0);
        for (int part : p)
            for (int j = 0; j < part; ++j) ++cols[j];
    }
    return Partition(cols);
}

// Length of the main diagonal of the Young diagram.
inline int rank(const Partition& la) {
    int r = 0;
    const auto& p = la.parts();
    while (r < la.length() && p[r] >= r + 1) ++r;
    return r;
}

inline bool is_self_conjugate(const Partition& la) { return conjugate(la) == la; }

// Hooklengths of all cells, row by row.
inline std::vector<int> hooks(const Partition& la) {
    const auto& p = la.parts();
    Partition conj = conjugate(la);
    const auto& q = conj.parts();
    std::vector<int> h;
    h.reserve(la.size());
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < p[i]; ++j)
            h.push_back((p[i] - j - 1) + (q[j] - i - 1) + 1);
    return h;
}

// dim of the irreducible S_d-representation, by the hook length formula.
inline Int dim_rep(const Partition& la) {
    Int num = factorial(la.size());
    for (int h : hooks(la)) num /= h;
    return num;
}

// Total content sum over cells (column - row), zero for self-conjugate shapes.
inline Int content_sum(const Partition& la) {
    Int c = 0;
    const auto& p = la.parts();
    for (int i = 0; i < la.length(); ++i)
        for (int j = 0; j < p[i]; ++j) c += j - i;
    return c;
}

inline std::map<int, int> multiplicities(const Partition& la) {
    std::map<int, int> m;
    for (int p : la.parts()) ++m[p];
    return m;
}

// zeta = prod m_k! k^{m_k}, the order of the centralizer of a permutation of
// cycle type la; the class size is d!/zeta.
inline Int zeta(const Partition& la) {
    Int z = 1;
    for (auto [k, m] : multiplicities(la)) {
        z *= factorial(m);
        for (int i = 0; i < m; ++i) z *= k;
    }
    return z;
}

// Cycle type of g^2 for g of cycle type la: even parts split into two halves.
inline Partition sq(const Partition& la) {
    std::vector<int> parts;
    for (int p : la.parts()) {
        if (p % 2 == 0) {
            parts.push_back(p / 2);
            parts.push_back(p / 2);
        } else {
            parts.push_back(p);
        }
    }
    return Partition(std::move(parts));
}

// (-1)^{d - l(la)}, the sign of the conjugacy class.
inline int sign(const Partition& la) {
    return (la.size() - la.length()) % 2 == 0 ? 1 : -1;
}

} // namespace rgw
