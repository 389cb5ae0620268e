#pragma once

// Irreducible characters of S_d by the Murnaghan-Nakayama rule, and the full
// character table chi[rho][alpha] with rows and columns in canonical
// partition order.

#include <map>
#include <utility>
#include <vector>

#include "rgw/partition.hpp"
#include "rgw/rational.hpp"

namespace rgw {

namespace detail {

// One Murnaghan-Nakayama step on the beta-set of rho: removing a border strip
// of length r corresponds to replacing some b in B by b - r (valid when
// b - r >= 0 and not already in B); the sign is (-1)^{#elements skipped}.
inline Int mn_char(const std::vector<int>& rho, const std::vector<int>& alpha,
                   size_t ai, std::map<std::pair<std::vector<int>, size_t>, Int>& memo) {
    if (ai == alpha.size()) return rho.empty() ? 1 : 0;
    auto key = std::make_pair(rho, ai);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const int r = alpha[ai];
    const int n = static_cast<int>(rho.size());
    std::vector<int> beta(n);
    for (int i = 0; i < n; ++i) beta[i] = rho[i] + (n - 1 - i); // decreasing

    Int total = 0;
    for (int i = 0; i < n; ++i) {
        int b = beta[i] - r;
        if (b < 0) continue;
        bool clash = false;
        int skipped = 0;
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            if (beta[j] == b) { clash = true; break; }
            if (beta[j] > b && beta[j] < beta[i]) ++skipped;
        }
        if (clash) continue;
        std::vector<int> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        std::vector<int> nrho;
        for (int j = 0; j < n; ++j) {
            int part = nb[j] - (n - 1 - j);
            if (part > 0) nrho.push_back(part);
        }
        Int sub = mn_char(nrho, alpha, ai + 1, memo);
        total += (skipped % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

} // namespace detail

// chi_rho(alpha), exact. Requires |rho| = |alpha|.
inline Int character(const Partition& rho, const Partition& alpha) {
    if (rho.size() != alpha.size())
        throw argument_error("character: |rho|=" + std::to_string(rho.size()) +
                             " but |alpha|=" + std::to_string(alpha.size()));
    std::map<std::pair<std::vector<int>, size_t>, Int> memo;
    return detail::mn_char(rho.parts(), alpha.parts(), 0, memo);
}

struct CharacterTable {
    int d = 0;
    std::vector<Partition> classes;   // canonical order; also indexes the rows
    std::vector<std::vector<Int>> values; // values[rho][alpha]
    std::vector<Int> dims;            // dim rho = values[rho][index of (1^d)]

    int index_of(const Partition& la) const {
        auto it = std::lower_bound(classes.begin(), classes.end(), la);
        if (it == classes.end() || !(*it == la))
            throw argument_error("partition " + la.to_string() +
                                 " is not a partition of " + std::to_string(d));
        return static_cast<int>(it - classes.begin());
    }

    const Int& chi(int rho, int alpha) const { return values[rho][alpha]; }
    const Int& chi(const Partition& rho, const Partition& alpha) const {
        return values[index_of(rho)][index_of(alpha)];
    }
};

inline CharacterTable character_table(int d, int maxd = kDefaultMaxDegree) {
    check_degree(d, maxd);
    CharacterTable t;
    t.d = d;
    t.classes = partitions_of(d, maxd);
    const size_t n = t.classes.size();
    t.values.assign(n, std::vector<Int>(n));
    for (size_t a = 0; a < n; ++a) {
        // The memo key (shape, strip position) is tied to one class alpha, so
        // it is shared across all rows of a column but not across columns.
        std::map<std::pair<std::vector<int>, size_t>, Int> memo;
        for (size_t r = 0; r < n; ++r)
            t.values[r][a] =
                detail::mn_char(t.classes[r].parts(), t.classes[a].parts(), 0, memo);
    }
    t.dims.resize(n);
    const int id_col = static_cast<int>(n) - 1; // (1^d) is last in canonical order
    for (size_t r = 0; r < n; ++r) t.dims[r] = t.values[r][id_col];
    return t;
}

} // namespace rgw
