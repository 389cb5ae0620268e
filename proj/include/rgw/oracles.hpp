#pragma once

// Independent brute-force computations that validate the representation-
// theoretic formulas before the main engine is allowed to rely on them:
// signed Frobenius-Schur indicators by direct summation, the level-0 cap
// coefficients by abstract p-variable expansion, characters by the Frobenius
// determinant formula, and the class algebra by explicit permutation
// products. Nothing here reuses the closed-form constants it is checking.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "rgw/characters.hpp"
#include "rgw/partition.hpp"

namespace rgw {

// ---------------------------------------------------------------------------
// Permutation helpers (one-line cycle-type utilities on 0-based arrays).

inline Partition cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size(), false);
    std::vector<int> cycles;
    for (size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        cycles.push_back(len);
    }
    return Partition(std::move(cycles));
}

inline std::vector<int> compose_perm(const std::vector<int>& g, const std::vector<int>& h) {
    std::vector<int> r(g.size());
    for (size_t i = 0; i < g.size(); ++i) r[i] = g[h[i]];
    return r;
}

template <typename F>
void for_each_permutation(int d, F&& f) {
    std::vector<int> p(d);
    std::iota(p.begin(), p.end(), 0);
    do {
        f(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

// ---------------------------------------------------------------------------
// Signed Frobenius-Schur indicator SFS(rho) = (1/d!) sum_g chi_rho(g^2) sign(g).

// Element-by-element mode: iterates all of S_d. Feasible through d = 7.
inline Rational sfs_bruteforce_elements(const CharacterTable& t, const Partition& rho) {
    const int d = t.d;
    if (d > 7) throw argument_error("sfs element mode: d must be <= 7");
    const int r = t.index_of(rho);
    // Tally sign(g) per cycle type of g^2, then one character sum.
    std::map<int, Int> tally;
    for_each_permutation(d, [&](const std::vector<int>& g) {
        Partition sq_type = cycle_type(compose_perm(g, g));
        int s = sign(cycle_type(g));
        tally[t.index_of(sq_type)] += s;
    });
    Rational acc = 0;
    for (const auto& [a, w] : tally) acc += rat(w * t.values[r][a], 1);
    return acc / rat(factorial(d));
}

// Class-sum mode: sum_alpha sign(alpha) chi_rho(sq(alpha)) / zeta(alpha).
inline Rational sfs_bruteforce_classes(const CharacterTable& t, const Partition& rho) {
    const int r = t.index_of(rho);
    Rational acc = 0;
    for (const auto& alpha : t.classes) {
        int a = t.index_of(sq(alpha));
        acc += rat(Int(sign(alpha)) * t.values[r][a], zeta(alpha));
    }
    return acc;
}

// o(rho) = sum over odd classes beta of chi_rho(sq(beta))/zeta(beta); an
// integer in {0,1} on self-conjugate irreducibles.
inline Rational sfs_o_value(const CharacterTable& t, const Partition& rho) {
    const int r = t.index_of(rho);
    Rational acc = 0;
    for (const auto& beta : t.classes) {
        if (sign(beta) != -1) continue;
        acc += rat(t.values[r][t.index_of(sq(beta))], zeta(beta));
    }
    return acc;
}

// Both sides of the key combinatorial identity
//   sum_{sq(beta)=alpha} (-1)^{s(beta)} zeta(alpha)/zeta(beta)
//     = sum_{rho=rho'} (-1)^{(d-r(rho))/2} chi_rho(alpha),
// computed independently.
inline std::pair<Rational, Rational> sfs_identity_sides(const CharacterTable& t,
                                                        const Partition& alpha) {
    Rational lhs = 0;
    for (const auto& beta : t.classes)
        if (sq(beta) == alpha)
            lhs += rat(Int(sign(beta)) * zeta(alpha), zeta(beta));
    Rational rhs = 0;
    for (size_t r = 0; r < t.classes.size(); ++r) {
        const Partition& rho = t.classes[r];
        if (!is_self_conjugate(rho)) continue;
        int eps = ((t.d - rank(rho)) / 2) % 2 == 0 ? 1 : -1;
        rhs += rat(Int(eps) * t.values[r][t.index_of(alpha)], 1);
    }
    return {lhs, rhs};
}

inline bool sfs_identity_check(const CharacterTable& t, const Partition& alpha) {
    auto [lhs, rhs] = sfs_identity_sides(t, alpha);
    return lhs == rhs;
}

// ---------------------------------------------------------------------------
// Abstract p-variable expansion: sparse polynomials in p_1, p_2, ... with
// monomials keyed by partitions (p_lambda) and truncated at total degree D.

class PPoly {
  public:
    explicit PPoly(int degree_cap) : cap_(degree_cap) {}
    static PPoly constant(int degree_cap, const Rational& c) {
        PPoly p(degree_cap);
        if (c != 0) p.terms_[Partition()] = c;
        return p;
    }
    static PPoly monomial(int degree_cap, const Partition& la, const Rational& c) {
        PPoly p(degree_cap);
        if (c != 0 && la.size() <= degree_cap) p.terms_[la] = c;
        return p;
    }

    const std::map<Partition, Rational>& terms() const { return terms_; }
    int degree_cap() const { return cap_; }
    Rational coeff(const Partition& la) const {
        auto it = terms_.find(la);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    PPoly& operator+=(const PPoly& o) {
        for (const auto& [la, c] : o.terms_) {
            Rational& v = terms_[la];
            v += c;
            if (v == 0) terms_.erase(la);
        }
        return *this;
    }
    friend PPoly operator*(const PPoly& a, const PPoly& b) {
        PPoly r(std::min(a.cap_, b.cap_));
        for (const auto& [la, ca] : a.terms_)
            for (const auto& [mu, cb] : b.terms_) {
                if (la.size() + mu.size() > r.cap_) continue;
                std::vector<int> parts = la.parts();
                parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
                Partition prod(std::move(parts));
                Rational& v = r.terms_[prod];
                v += ca * cb;
                if (v == 0) r.terms_.erase(prod);
            }
        return r;
    }
    PPoly& operator*=(const Rational& c) {
        if (c == 0) { terms_.clear(); return *this; }
        for (auto& [la, v] : terms_) v *= c;
        return *this;
    }

    // exp of a polynomial with no constant term, truncated at the degree cap.
    PPoly exp() const {
        if (terms_.count(Partition()))
            throw argument_error("PPoly::exp: nonzero constant term");
        PPoly r = constant(cap_, 1);
        PPoly power = constant(cap_, 1);
        Int nfact = 1;
        for (int n = 1; n <= cap_; ++n) {
            power = power * *this;
            if (power.terms_.empty()) break;
            nfact *= n;
            PPoly term = power;
            term *= rat(Int(1), nfact);
            r += term;
        }
        return r;
    }

  private:
    int cap_;
    std::map<Partition, Rational> terms_;
};

// Coefficient of p_alpha in exp(sum_{k odd} p_k/k - 1/2 sum_m p_m^2/m),
// truncated at total degree |alpha|. Independent route to r_alpha.
inline Rational r_alpha_by_expansion(const Partition& alpha) {
    const int d = alpha.size();
    PPoly x(d);
    for (int k = 1; k <= d; k += 2)
        x += PPoly::monomial(d, Partition({k}), rat(1, k));
    for (int m = 1; 2 * m <= d; ++m)
        x += PPoly::monomial(d, Partition({m, m}), rat(-1, 2 * m));
    return x.exp().coeff(alpha);
}

// The sq-fiber route, stated over plain partitions (the engine has its own
// indexed copy; this one is for cross-checking it).
inline Rational r_alpha_by_fibers(const Partition& alpha) {
    const int d = alpha.size();
    Rational acc = 0;
    for (const auto& la : partitions_of(d))
        if (sq(la) == alpha) acc += rat(Int(sign(la)), zeta(la));
    return acc;
}

inline bool r_alpha_crosscheck(int d) {
    for (const auto& alpha : partitions_of(d)) {
        Rational a = r_alpha_by_expansion(alpha);
        Rational b = r_alpha_by_fibers(alpha);
        if (a != b) return false;
        // Vanishing unless alpha has an even number of even parts.
        int evens = 0;
        for (int p : alpha.parts())
            if (p % 2 == 0) ++evens;
        if (evens % 2 == 1 && a != 0) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Frobenius determinant formula: chi_lambda(alpha) is the coefficient of
// x^{lambda + delta} in Vandermonde(x) * p_alpha(x) with n = l(lambda)
// variables. Independent of the Murnaghan-Nakayama recursion.

namespace detail {
using MPoly = std::map<std::vector<int>, Int>;

inline MPoly mpoly_mul(const MPoly& a, const MPoly& b, int max_total) {
    MPoly r;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            int total = 0;
            for (size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
                total += e[i];
            }
            if (total > max_total) continue;
            Int& v = r[e];
            v += ca * cb;
            if (v == 0) r.erase(e);
        }
    return r;
}
} // namespace detail

inline Int character_frobenius(const Partition& la, const Partition& alpha) {
    if (la.size() != alpha.size())
        throw argument_error("character_frobenius: size mismatch");
    const int n = std::max(la.length(), 1);
    const int d = la.size();
    const int max_total = d + n * (n - 1) / 2;
    // Vandermonde as a signed sum over permutations of delta = (n-1, ..., 0).
    detail::MPoly vdm;
    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> arr(n);
    do {
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (idx[i] > idx[j]) ++inv;
        for (int i = 0; i < n; ++i) arr[i] = n - 1 - idx[i];
        vdm[arr] += (inv % 2 == 0) ? 1 : -1;
    } while (std::next_permutation(idx.begin(), idx.end()));
    detail::MPoly acc = vdm;
    for (int part : alpha.parts()) {
        detail::MPoly pk;
        for (int i = 0; i < n; ++i) {
            std::vector<int> e(n, 0);
            e[i] = part;
            pk[e] += 1;
        }
        acc = detail::mpoly_mul(acc, pk, max_total);
    }
    std::vector<int> target(n, 0);
    for (int i = 0; i < la.length(); ++i) target[i] = la.parts()[i];
    for (int i = 0; i < n; ++i) target[i] += n - 1 - i;
    auto it = acc.find(target);
    return it == acc.end() ? Int(0) : it->second;
}

// ---------------------------------------------------------------------------
// Class algebra of S_d by explicit permutation products: structure constants
// a_{alpha beta}^gamma with C_alpha C_beta = sum a^gamma C_gamma.

inline std::vector<std::vector<std::vector<Int>>> class_algebra_bruteforce(int d) {
    if (d > 6) throw argument_error("class_algebra_bruteforce: d must be <= 6");
    auto classes = partitions_of(d);
    const int n = static_cast<int>(classes.size());
    auto index_of = [&](const Partition& p) {
        return static_cast<int>(std::lower_bound(classes.begin(), classes.end(), p) -
                                classes.begin());
    };
    std::vector<std::vector<int>> elements;
    std::vector<int> type_of;
    for_each_permutation(d, [&](const std::vector<int>& g) {
        elements.push_back(g);
        type_of.push_back(index_of(cycle_type(g)));
    });
    std::vector<Int> class_size(n, 0);
    for (int t : type_of) class_size[t] += 1;
    std::vector counts(n, std::vector(n, std::vector<Int>(n, Int(0))));
    for (size_t i = 0; i < elements.size(); ++i)
        for (size_t j = 0; j < elements.size(); ++j) {
            int c = type_of[i], b = type_of[j];
            int g = index_of(cycle_type(compose_perm(elements[i], elements[j])));
            counts[c][b][g] += 1;
        }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int g = 0; g < n; ++g) {
                if (counts[a][b][g] % class_size[g] != 0)
                    throw verification_error("class algebra: count not divisible");
                counts[a][b][g] /= class_size[g];
            }
    return counts;
}

} // namespace rgw
