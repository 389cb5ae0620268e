#pragma once

// The degree-d Frobenius algebra H with its Klein structure, and the
// evaluation of the RGW functor on closed, relative and doublet decorated
// cobordisms.
//
// Conventions, fixed once here:
//  * H has standard basis {e_alpha} indexed by partitions of d in canonical
//    order, and idempotent basis {v_rho} indexed by irreducible
//    representations (again partitions, same order).
//  * v_rho = (dim rho/d!) sum_alpha (-t)^{l(alpha)-d} chi_rho(alpha) e_alpha,
//    e_alpha = (-t)^{d-l(alpha)} sum_rho (d!/dim rho) chi_rho(alpha)/zeta(alpha) v_rho.
//  * Pairing <e_a, e_b> = delta_ab / (zeta(a) t^{2 l(a)}); raising an index
//    multiplies by zeta(a) t^{2 l(a)}.
//  * Eigenvalues: G ~ lambda_rho = t^{2d} (d!/dim)^2; the level-decreasing
//    tubes A, Abar ~ eta_rho = t^d s^{c_rho} (d!/dim) prod_h (s^h - s^-h)^{-1}
//    and the conjugate; the crosscap K ~ U_rho = eps_rho t^d d!/dim on
//    self-conjugate rho with eps_rho = (-1)^{(d - r(rho))/2}, else 0.
//  * A closed connected genus-g level-k surface evaluates to
//    sum_{rho=rho'} U_rho^{g-1} eta_rho^{-k}; its t-exponent is d(g-1-k).

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "rgw/characters.hpp"
#include "rgw/partition.hpp"
#include "rgw/qseries.hpp"
#include "rgw/scalar.hpp"

namespace rgw {

struct DegreeContext {
    int d = 0;
    CharacterTable chi;
    int n = 0; // p(d)
    std::vector<Int> zetas;
    std::vector<int> lens;
    std::vector<int> ranks;
    std::vector<int> conj_idx;
    std::vector<bool> selfconj;
    std::vector<int> signs;
    std::vector<Int> contents;               // content sum per representation
    std::vector<std::vector<int>> hook_list; // hooklengths per representation
    std::vector<int> sq_idx;                 // index of sq(lambda) per class

    const Partition& cls(int i) const { return chi.classes[i]; }
    int index(const Partition& la) const { return chi.index_of(la); }
    const Int& dim(int rho) const { return chi.dims[rho]; }
    int identity_class() const { return n - 1; } // (1^d) is last

    static DegreeContext make(CharacterTable table) {
        DegreeContext c;
        c.d = table.d;
        c.chi = std::move(table);
        c.n = static_cast<int>(c.chi.classes.size());
        c.zetas.resize(c.n);
        c.lens.resize(c.n);
        c.ranks.resize(c.n);
        c.conj_idx.resize(c.n);
        c.selfconj.resize(c.n);
        c.signs.resize(c.n);
        c.contents.resize(c.n);
        c.hook_list.resize(c.n);
        c.sq_idx.resize(c.n);
        for (int i = 0; i < c.n; ++i) {
            const Partition& la = c.chi.classes[i];
            c.zetas[i] = zeta(la);
            c.lens[i] = la.length();
            c.ranks[i] = rank(la);
            c.conj_idx[i] = c.chi.index_of(conjugate(la));
            c.selfconj[i] = (c.conj_idx[i] == i);
            c.signs[i] = sign(la);
            c.contents[i] = content_sum(la);
            c.hook_list[i] = hooks(la);
            c.sq_idx[i] = c.chi.index_of(sq(la));
        }
        return c;
    }
    static DegreeContext make(int d, int maxd = kDefaultMaxDegree) {
        return make(character_table(d, maxd));
    }
};

// ---------------------------------------------------------------------------
// Structure monomials: c * t^a * s^b * prod_k (s^k - s^{-k})^{e_k}. All
// eigenvalues of the elementary operators have this shape, so arbitrary
// integer powers of them stay exact as long as no net negative sinh power
// remains; otherwise they expand to a truncated u-series.

struct StructureMonomial {
    Rational c = 0;
    int t_exp = 0;
    int s_exp = 0;
    std::map<int, int> sinh_pows; // k -> exponent of (s^k - s^{-k})

    static StructureMonomial one() { return {1, 0, 0, {}}; }
    bool is_zero() const { return c == 0; }

    friend StructureMonomial operator*(const StructureMonomial& a,
                                       const StructureMonomial& b) {
        if (a.is_zero() || b.is_zero()) return {};
        StructureMonomial r{a.c * b.c, a.t_exp + b.t_exp, a.s_exp + b.s_exp,
                            a.sinh_pows};
        for (auto [k, e] : b.sinh_pows) {
            r.sinh_pows[k] += e;
            if (r.sinh_pows[k] == 0) r.sinh_pows.erase(k);
        }
        return r;
    }

    StructureMonomial pow(int e) const {
        if (e == 0) return one();
        if (is_zero()) {
            if (e < 0) throw argument_error("StructureMonomial: 0^negative");
            return {};
        }
        StructureMonomial r{pow_rational(c, e), t_exp * e, s_exp * e, {}};
        for (auto [k, m] : sinh_pows)
            if (m * e != 0) r.sinh_pows[k] = m * e;
        return r;
    }

    bool exact() const {
        for (auto [k, e] : sinh_pows)
            if (e < 0) return false;
        return true;
    }

    Scalar to_scalar(int uorder) const {
        if (is_zero()) return Scalar();
        if (exact()) {
            SPoly p = SPoly::monomial(s_exp, c);
            for (auto [k, e] : sinh_pows) p *= sinh_factor(k).pow(e);
            return Scalar::t_monomial(t_exp, SCoeff(p));
        }
        // Split into numerator (exact) and denominator (product of sinh
        // factors); expand with enough headroom that the result window
        // still covers uorder after the inversion shifts it.
        SPoly num = SPoly::monomial(s_exp, c);
        SPoly den(Rational(1));
        int den_val = 0; // u-valuation: every sinh factor vanishes to first order
        for (auto [k, e] : sinh_pows) {
            if (e >= 0) num *= sinh_factor(k).pow(e);
            else {
                den *= sinh_factor(k).pow(-e);
                den_val += -e;
            }
        }
        int work = uorder + 2 * den_val + 4;
        USeries u = to_u_series(num, work) * to_u_series(den, work).inverse();
        return Scalar::t_monomial(t_exp, SCoeff(u));
    }
};

// lambda, eta, eta-bar and the crosscap coefficient U as structure monomials.
inline StructureMonomial lambda_monomial(const DegreeContext& ctx, int rho) {
    Rational r = rat(factorial(ctx.d), ctx.dim(rho));
    return {r * r, 2 * ctx.d, 0, {}};
}

inline StructureMonomial eta_monomial(const DegreeContext& ctx, int rho, bool bar) {
    StructureMonomial m;
    m.c = rat(factorial(ctx.d), ctx.dim(rho));
    m.t_exp = ctx.d;
    Int c2 = ctx.contents[rho];
    if (!c2.fits_sint_p()) throw argument_error("content overflow");
    m.s_exp = static_cast<int>(bar ? -c2.get_si() : c2.get_si());
    for (int h : ctx.hook_list[rho]) m.sinh_pows[h] -= 1;
    for (auto it = m.sinh_pows.begin(); it != m.sinh_pows.end();)
        it = it->second == 0 ? m.sinh_pows.erase(it) : std::next(it);
    return m;
}

inline int crosscap_sign(const DegreeContext& ctx, int rho) {
    return ((ctx.d - ctx.ranks[rho]) / 2) % 2 == 0 ? 1 : -1;
}

inline StructureMonomial crosscap_monomial(const DegreeContext& ctx, int rho) {
    if (!ctx.selfconj[rho]) return {};
    Rational c = rat(factorial(ctx.d), ctx.dim(rho));
    if (crosscap_sign(ctx, rho) < 0) c = -c;
    return {c, ctx.d, 0, {}};
}

struct StructureScalars {
    Scalar lambda, eta, eta_bar;
};

// (lambda_rho, eta_rho, eta-bar_rho); the etas carry inverse sinh products,
// so they come back in the expanded u-series view.
inline StructureScalars structure_scalars(const DegreeContext& ctx,
                                          const Partition& rho,
                                          int uorder = kDefaultUOrder) {
    int i = ctx.index(rho);
    return {lambda_monomial(ctx, i).to_scalar(uorder),
            eta_monomial(ctx, i, false).to_scalar(uorder),
            eta_monomial(ctx, i, true).to_scalar(uorder)};
}

// ---------------------------------------------------------------------------
// Vectors and basis change.

enum class Basis { Standard, Idempotent };

struct TqftVector {
    int d = 0;
    Basis basis = Basis::Standard;
    std::map<int, Scalar> coords; // partition index -> coefficient

    Scalar coord(int i) const {
        auto it = coords.find(i);
        return it == coords.end() ? Scalar() : it->second;
    }
    void set(int i, Scalar s) {
        if (s.is_zero()) coords.erase(i);
        else coords[i] = std::move(s);
    }
    Scalar coord(const DegreeContext& ctx, const Partition& la) const {
        return coord(ctx.index(la));
    }

    friend TqftVector operator+(const TqftVector& a, const TqftVector& b) {
        if (a.d != b.d || a.basis != b.basis)
            throw argument_error("TqftVector: basis/degree mismatch in +");
        TqftVector r = a;
        for (const auto& [i, s] : b.coords) r.set(i, r.coord(i) + s);
        return r;
    }
    friend TqftVector operator-(const TqftVector& a, const TqftVector& b) {
        if (a.d != b.d || a.basis != b.basis)
            throw argument_error("TqftVector: basis/degree mismatch in -");
        TqftVector r = a;
        for (const auto& [i, s] : b.coords) r.set(i, r.coord(i) - s);
        return r;
    }
    friend TqftVector operator*(const TqftVector& a, const Scalar& s) {
        TqftVector r;
        r.d = a.d;
        r.basis = a.basis;
        for (const auto& [i, c] : a.coords) r.set(i, c * s);
        return r;
    }
    friend bool operator==(const TqftVector& a, const TqftVector& b) {
        if (a.d != b.d || a.basis != b.basis) return false;
        for (const auto& [i, s] : a.coords)
            if (!(b.coord(i) == s)) return false;
        for (const auto& [i, s] : b.coords)
            if (!(a.coord(i) == s)) return false;
        return true;
    }
};

// Coefficient of e_beta in v_rho.
inline Scalar basis_v_in_e(const DegreeContext& ctx, int rho, int beta) {
    Rational c = rat(ctx.dim(rho) * ctx.chi.values[rho][beta], factorial(ctx.d));
    int e = ctx.lens[beta] - ctx.d;
    if (e % 2 != 0) c = -c; // (-t)^e
    return Scalar::t_monomial(e, SCoeff(c));
}

// Coefficient of v_rho in e_alpha.
inline Scalar basis_e_in_v(const DegreeContext& ctx, int alpha, int rho) {
    Rational c = rat(factorial(ctx.d) * ctx.chi.values[rho][alpha],
                     ctx.dim(rho) * ctx.zetas[alpha]);
    int e = ctx.d - ctx.lens[alpha];
    if (e % 2 != 0) c = -c;
    return Scalar::t_monomial(e, SCoeff(c));
}

inline TqftVector e_to_v(const DegreeContext& ctx, const TqftVector& x) {
    if (x.basis == Basis::Idempotent) return x;
    TqftVector r;
    r.d = x.d;
    r.basis = Basis::Idempotent;
    for (int rho = 0; rho < ctx.n; ++rho) {
        Scalar acc;
        for (const auto& [alpha, c] : x.coords) acc += c * basis_e_in_v(ctx, alpha, rho);
        r.set(rho, std::move(acc));
    }
    return r;
}

inline TqftVector v_to_e(const DegreeContext& ctx, const TqftVector& x) {
    if (x.basis == Basis::Standard) return x;
    TqftVector r;
    r.d = x.d;
    r.basis = Basis::Standard;
    for (int beta = 0; beta < ctx.n; ++beta) {
        Scalar acc;
        for (const auto& [rho, c] : x.coords) acc += c * basis_v_in_e(ctx, rho, beta);
        r.set(beta, std::move(acc));
    }
    return r;
}

inline TqftVector to_basis(const DegreeContext& ctx, const TqftVector& x, Basis b) {
    return b == Basis::Standard ? v_to_e(ctx, x) : e_to_v(ctx, x);
}

inline TqftVector unit_vector(const DegreeContext& ctx) {
    TqftVector r;
    r.d = ctx.d;
    r.basis = Basis::Standard;
    r.set(ctx.identity_class(), Scalar(Rational(1)));
    return r;
}

// v_rho v_mu = delta v_rho, transported to whatever basis the inputs use.
inline TqftVector multiply(const DegreeContext& ctx, const TqftVector& x,
                           const TqftVector& y) {
    if (x.d != y.d) throw argument_error("multiply: degree mismatch");
    if (x.basis != y.basis) throw argument_error("multiply: basis mismatch");
    TqftVector xv = e_to_v(ctx, x);
    TqftVector yv = e_to_v(ctx, y);
    TqftVector r;
    r.d = x.d;
    r.basis = Basis::Idempotent;
    for (const auto& [rho, c] : xv.coords) {
        auto it = yv.coords.find(rho);
        if (it != yv.coords.end()) r.set(rho, c * it->second);
    }
    return to_basis(ctx, r, x.basis);
}

// <x, y> with <e_a, e_b> = delta_ab / (zeta(a) t^{2 l(a)}).
inline Scalar pairing(const DegreeContext& ctx, const TqftVector& x,
                      const TqftVector& y) {
    TqftVector xe = v_to_e(ctx, x);
    TqftVector ye = v_to_e(ctx, y);
    Scalar acc;
    for (const auto& [a, cx] : xe.coords) {
        auto it = ye.coords.find(a);
        if (it == ye.coords.end()) continue;
        Scalar w = Scalar::t_monomial(-2 * ctx.lens[a], SCoeff(rat(Int(1), ctx.zetas[a])));
        acc += cx * it->second * w;
    }
    return acc;
}

// Omega: e_alpha -> (-1)^{d - l(alpha)} e_alpha, v_rho -> v_{rho'}.
inline TqftVector omega(const DegreeContext& ctx, const TqftVector& x) {
    TqftVector r;
    r.d = x.d;
    r.basis = x.basis;
    for (const auto& [i, c] : x.coords) {
        if (x.basis == Basis::Standard)
            r.set(i, ctx.signs[i] < 0 ? Scalar(-c) : c);
        else
            r.set(ctx.conj_idx[i], c);
    }
    return r;
}

// ---------------------------------------------------------------------------
// The crosscap element, by its two independent routes.

// Idempotent-basis form: U = sum_{rho=rho'} (-1)^{(d-r)/2} t^d (d!/dim) v_rho.
inline TqftVector crosscap_U(const DegreeContext& ctx, int uorder = kDefaultUOrder) {
    TqftVector r;
    r.d = ctx.d;
    r.basis = Basis::Idempotent;
    for (int rho = 0; rho < ctx.n; ++rho)
        if (ctx.selfconj[rho]) r.set(rho, crosscap_monomial(ctx, rho).to_scalar(uorder));
    return r;
}

// Coefficient r_alpha of p_alpha in the level-0 cap series: the fiber sum
// over lambda with sq(lambda) = alpha of (-1)^{d-l(lambda)}/zeta(lambda).
inline Rational r_alpha(const DegreeContext& ctx, int alpha) {
    Rational r = 0;
    for (int la = 0; la < ctx.n; ++la)
        if (ctx.sq_idx[la] == alpha)
            r += rat(Int(ctx.signs[la]), ctx.zetas[la]);
    return r;
}

// Standard-basis form: U = sum_alpha r_alpha zeta(alpha) t^{l(alpha)} e_alpha
// (the level-0 relative invariant r_alpha t^{-l(alpha)} with the index raised
// by zeta(alpha) t^{2 l(alpha)}).
inline TqftVector crosscap_standard_basis(const DegreeContext& ctx) {
    TqftVector r;
    r.d = ctx.d;
    r.basis = Basis::Standard;
    for (int a = 0; a < ctx.n; ++a) {
        Rational c = r_alpha(ctx, a) * rat(ctx.zetas[a]);
        r.set(a, Scalar::t_monomial(ctx.lens[a], SCoeff(c)));
    }
    return r;
}

// ---------------------------------------------------------------------------
// Operators.

using TupleKey = std::pair<std::vector<int>, std::vector<int>>;

struct TqftOperator {
    int d = 0;
    int n_in = 0, n_out = 0;
    Basis basis = Basis::Idempotent;
    std::map<TupleKey, Scalar> entries; // (input tuple, output tuple) -> coeff

    void add(const std::vector<int>& in, const std::vector<int>& out, const Scalar& s) {
        if (s.is_zero()) return;
        auto key = TupleKey{in, out};
        auto [it, fresh] = entries.emplace(key, s);
        if (!fresh) {
            it->second += s;
            if (it->second.is_zero() && it->second.fully_exact()) entries.erase(it);
        }
    }
    Scalar entry(const std::vector<int>& in, const std::vector<int>& out) const {
        auto it = entries.find(TupleKey{in, out});
        return it == entries.end() ? Scalar() : it->second;
    }
};

inline TqftOperator identity_operator(const DegreeContext& ctx, int arity, Basis b) {
    TqftOperator op;
    op.d = ctx.d;
    op.n_in = op.n_out = arity;
    op.basis = b;
    std::vector<int> tuple(arity, 0);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == arity) {
            op.add(tuple, tuple, Scalar(Rational(1)));
            return;
        }
        for (int i = 0; i < ctx.n; ++i) {
            tuple[pos] = i;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return op;
}

// second o first (apply `first`, then `second`).
inline TqftOperator compose(const TqftOperator& second,
                            const TqftOperator& first) {
    if (first.d != second.d) throw argument_error("compose: degree mismatch");
    if (first.basis != second.basis) throw argument_error("compose: basis mismatch");
    if (first.n_out != second.n_in)
        throw argument_error("compose: arity mismatch (" + std::to_string(first.n_out) +
                             " outputs vs " + std::to_string(second.n_in) + " inputs)");
    TqftOperator r;
    r.d = first.d;
    r.basis = first.basis;
    r.n_in = first.n_in;
    r.n_out = second.n_out;
    // Group second's entries by input tuple for the contraction.
    std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, const Scalar*>>> by_in;
    for (const auto& [key, s] : second.entries) by_in[key.first].emplace_back(key.second, &s);
    for (const auto& [key, s1] : first.entries) {
        auto it = by_in.find(key.second);
        if (it == by_in.end()) continue;
        for (const auto& [out, s2] : it->second) r.add(key.first, out, s1 * *s2);
    }
    return r;
}

inline TqftOperator tensor(const TqftOperator& a, const TqftOperator& b) {
    if (a.d != b.d) throw argument_error("tensor: degree mismatch");
    if (a.basis != b.basis) throw argument_error("tensor: basis mismatch");
    TqftOperator r;
    r.d = a.d;
    r.basis = a.basis;
    r.n_in = a.n_in + b.n_in;
    r.n_out = a.n_out + b.n_out;
    for (const auto& [ka, sa] : a.entries)
        for (const auto& [kb, sb] : b.entries) {
            std::vector<int> in = ka.first;
            in.insert(in.end(), kb.first.begin(), kb.first.end());
            std::vector<int> out = ka.second;
            out.insert(out.end(), kb.second.begin(), kb.second.end());
            r.add(in, out, sa * sb);
        }
    return r;
}

enum class ElemKind { Cap, Cup, Pants, Copants, Tube, Twist, G, K, A, Abar, Omega, Xcap };

// Elementary cobordism operators, built in the idempotent basis.
//   cap: 0->1, the unit.     cup: 1->0, the counit v_rho -> lambda^{-1}.
//   pants: 1->2, coproduct v -> lambda v (x) v.   copants: 2->1, the product.
//   tube(a,b) = A^{-a} Abar^{-b} (levels a, b <= 0 are literal tubes; positive
//   levels are the formal inverses and force the expanded view).
inline TqftOperator elementary_operator(const DegreeContext& ctx, ElemKind kind,
                                        int level_a = 0, int level_b = 0,
                                        int uorder = kDefaultUOrder) {
    TqftOperator op;
    op.d = ctx.d;
    op.basis = Basis::Idempotent;
    auto diag = [&](const std::function<StructureMonomial(int)>& eig) {
        op.n_in = op.n_out = 1;
        for (int rho = 0; rho < ctx.n; ++rho) {
            Scalar s = eig(rho).to_scalar(uorder);
            op.add({rho}, {rho}, s);
        }
    };
    switch (kind) {
    case ElemKind::Cap:
        op.n_in = 0;
        op.n_out = 1;
        for (int rho = 0; rho < ctx.n; ++rho) op.add({}, {rho}, Scalar(Rational(1)));
        break;
    case ElemKind::Cup:
        op.n_in = 1;
        op.n_out = 0;
        for (int rho = 0; rho < ctx.n; ++rho)
            op.add({rho}, {}, lambda_monomial(ctx, rho).pow(-1).to_scalar(uorder));
        break;
    case ElemKind::Pants:
        op.n_in = 1;
        op.n_out = 2;
        for (int rho = 0; rho < ctx.n; ++rho)
            op.add({rho}, {rho, rho}, lambda_monomial(ctx, rho).to_scalar(uorder));
        break;
    case ElemKind::Copants:
        op.n_in = 2;
        op.n_out = 1;
        for (int rho = 0; rho < ctx.n; ++rho) op.add({rho, rho}, {rho}, Scalar(Rational(1)));
        break;
    case ElemKind::Tube:
        diag([&](int rho) {
            return eta_monomial(ctx, rho, false).pow(-level_a) *
                   eta_monomial(ctx, rho, true).pow(-level_b);
        });
        break;
    case ElemKind::Twist:
        op.n_in = 2;
        op.n_out = 2;
        for (int r1 = 0; r1 < ctx.n; ++r1)
            for (int r2 = 0; r2 < ctx.n; ++r2)
                op.add({r1, r2}, {r2, r1}, Scalar(Rational(1)));
        break;
    case ElemKind::G:
        diag([&](int rho) { return lambda_monomial(ctx, rho); });
        break;
    case ElemKind::K:
        diag([&](int rho) { return crosscap_monomial(ctx, rho); });
        break;
    case ElemKind::A:
        diag([&](int rho) { return eta_monomial(ctx, rho, false); });
        break;
    case ElemKind::Abar:
        diag([&](int rho) { return eta_monomial(ctx, rho, true); });
        break;
    case ElemKind::Omega:
        op.n_in = 1;
        op.n_out = 1;
        for (int rho = 0; rho < ctx.n; ++rho)
            op.add({rho}, {ctx.conj_idx[rho]}, Scalar(Rational(1)));
        break;
    case ElemKind::Xcap:
        op.n_in = 0;
        op.n_out = 1;
        for (int rho = 0; rho < ctx.n; ++rho)
            if (ctx.selfconj[rho]) op.add({}, {rho}, crosscap_monomial(ctx, rho).to_scalar(uorder));
        break;
    }
    return op;
}

// Change of basis on every tensor slot.
inline TqftOperator operator_to_basis(const DegreeContext& ctx, const TqftOperator& op,
                                      Basis target) {
    if (op.basis == target) return op;
    TqftOperator r;
    r.d = op.d;
    r.basis = target;
    r.n_in = op.n_in;
    r.n_out = op.n_out;
    // Standard -> Idempotent on inputs means expressing e in v on the source
    // side; the matrix applied on inputs is the inverse of the one applied on
    // outputs.
    auto in_coeff = [&](int from, int to) {
        return op.basis == Basis::Idempotent ? basis_e_in_v(ctx, from, to)
                                             : basis_v_in_e(ctx, from, to);
    };
    auto out_coeff = [&](int from, int to) {
        return op.basis == Basis::Idempotent ? basis_v_in_e(ctx, from, to)
                                             : basis_e_in_v(ctx, from, to);
    };
    for (const auto& [key, s] : op.entries) {
        std::vector<int> in(op.n_in, 0), out(op.n_out, 0);
        auto rec_out = [&](auto&& self, int pos, const Scalar& acc) -> void {
            if (pos == op.n_out) {
                r.add(in, out, acc);
                return;
            }
            for (int j = 0; j < ctx.n; ++j) {
                out[pos] = j;
                Scalar next = acc * out_coeff(key.second[pos], j);
                if (!next.is_zero() || !next.fully_exact()) self(self, pos + 1, next);
            }
        };
        auto rec_in = [&](auto&& self, int pos, const Scalar& acc) -> void {
            if (pos == op.n_in) {
                rec_out(rec_out, 0, acc);
                return;
            }
            for (int j = 0; j < ctx.n; ++j) {
                in[pos] = j;
                Scalar next = acc * in_coeff(j, key.first[pos]);
                if (!next.is_zero() || !next.fully_exact()) self(self, pos + 1, next);
            }
        };
        rec_in(rec_in, 0, s);
    }
    return r;
}

// (0,0) operators are scalars.
inline Scalar operator_scalar(const TqftOperator& op) {
    if (op.n_in != 0 || op.n_out != 0)
        throw argument_error("operator_scalar: arity is not (0,0)");
    return op.entry({}, {});
}

// ---------------------------------------------------------------------------
// Invariants of closed, relative and doublet surfaces.

inline Rational orientation_factor(int d, bool flip) {
    return (flip && d % 2 == 1) ? Rational(-1) : Rational(1);
}

// RGW_d(g|k) = sum_{rho=rho'} U_rho^{g-1} eta_rho^{-k}. Exact s-Laurent
// whenever k >= 0; otherwise the inverse sinh products force the u-series
// view at the given order.
inline Scalar closed_invariant(const DegreeContext& ctx, int g, int k,
                               int uorder = kDefaultUOrder, bool flip = false) {
    if (g < 0) throw argument_error("closed_invariant: genus must be >= 0");
    Scalar acc;
    for (int rho = 0; rho < ctx.n; ++rho) {
        if (!ctx.selfconj[rho]) continue;
        StructureMonomial m =
            crosscap_monomial(ctx, rho).pow(g - 1) * eta_monomial(ctx, rho, false).pow(-k);
        acc += m.to_scalar(uorder);
    }
    if (!acc.is_zero() && acc.is_t_monomial() && acc.t_exponent() != ctx.d * (g - 1 - k))
        throw verification_error("closed_invariant: t-exponent " +
                                 std::to_string(acc.t_exponent()) + " != d(g-1-k)");
    return acc * orientation_factor(ctx.d, flip);
}

// The same value through the cobordism decomposition cup . A^{-k} . K^g . xcap,
// composed as operator matrices in the standard basis.
inline Scalar closed_invariant_by_composition(const DegreeContext& ctx, int g, int k,
                                              int uorder = kDefaultUOrder,
                                              bool flip = false) {
    if (g < 0) throw argument_error("closed_invariant: genus must be >= 0");
    auto to_std = [&](const TqftOperator& op) {
        return operator_to_basis(ctx, op, Basis::Standard);
    };
    TqftOperator acc = to_std(elementary_operator(ctx, ElemKind::Xcap, 0, 0, uorder));
    TqftOperator kop = to_std(elementary_operator(ctx, ElemKind::K, 0, 0, uorder));
    for (int i = 0; i < g; ++i) acc = compose(kop, acc);
    if (k != 0) {
        TqftOperator aop =
            to_std(elementary_operator(ctx, ElemKind::Tube, k, 0, uorder));
        acc = compose(aop, acc);
    }
    TqftOperator cup = to_std(elementary_operator(ctx, ElemKind::Cup, 0, 0, uorder));
    acc = compose(cup, acc);
    return operator_scalar(acc) * orientation_factor(ctx.d, flip);
}

// Doublet invariants: sum over all rho of lambda^{g-1} eta^{-k1} etabar^{-k2};
// equals (-1)^{d k2} GW_d(g|k1,k2)(iu, it), the Bryan-Pandharipande bridge.
inline Scalar doublet_invariant(const DegreeContext& ctx, int g, int k1, int k2,
                                int uorder = kDefaultUOrder, bool flip = false) {
    if (g < 0) throw argument_error("doublet_invariant: genus must be >= 0");
    Scalar acc;
    for (int rho = 0; rho < ctx.n; ++rho) {
        StructureMonomial m = lambda_monomial(ctx, rho).pow(g - 1) *
                              eta_monomial(ctx, rho, false).pow(-k1) *
                              eta_monomial(ctx, rho, true).pow(-k2);
        acc += m.to_scalar(uorder);
    }
    return acc * orientation_factor(ctx.d, flip);
}

// Relative invariant of the connected genus-g level-k surface with r boundary
// pairs, as the lowered standard-basis tensor. The raised v-basis tensor is
// diagonal with coefficient U^{g-1} lambda^r eta^{-k} on v_rho^{(x) r}.
inline StructureMonomial relative_v_coefficient(const DegreeContext& ctx, int rho,
                                                int g, int k, int r) {
    return crosscap_monomial(ctx, rho).pow(g - 1) * lambda_monomial(ctx, rho).pow(r) *
           eta_monomial(ctx, rho, false).pow(-k);
}

inline Scalar relative_invariant(const DegreeContext& ctx, int g, int k,
                                 const std::vector<Partition>& boundary,
                                 int uorder = kDefaultUOrder, bool flip = false) {
    if (boundary.empty())
        throw argument_error("relative_invariant: need at least one boundary profile");
    if (g < 0) throw argument_error("relative_invariant: genus must be >= 0");
    const int r = static_cast<int>(boundary.size());
    std::vector<int> idx;
    for (const auto& la : boundary) {
        if (la.size() != ctx.d)
            throw argument_error("relative_invariant: boundary profile " + la.to_string() +
                                 " is not a partition of " + std::to_string(ctx.d));
        idx.push_back(ctx.index(la));
    }
    Scalar acc;
    for (int rho = 0; rho < ctx.n; ++rho) {
        if (!ctx.selfconj[rho]) continue;
        StructureMonomial m = relative_v_coefficient(ctx, rho, g, k, r);
        if (m.is_zero()) continue;
        Scalar s = m.to_scalar(uorder);
        for (int i : idx) s *= basis_v_in_e(ctx, rho, i);
        acc += s;
    }
    // Lower every index: divide by zeta(la) t^{2 l(la)}.
    for (int i : idx)
        acc *= Scalar::t_monomial(-2 * ctx.lens[i], SCoeff(rat(Int(1), ctx.zetas[i])));
    return acc * orientation_factor(ctx.d, flip);
}

// All boundary tuples at once (for r-legged splitting sums).
inline std::map<std::vector<int>, Scalar> relative_tensor(const DegreeContext& ctx,
                                                          int g, int k, int r,
                                                          int uorder = kDefaultUOrder) {
    std::map<std::vector<int>, Scalar> out;
    std::vector<int> tuple(r, 0);
    std::vector<Scalar> vcoeff(ctx.n);
    std::vector<bool> used(ctx.n, false);
    for (int rho = 0; rho < ctx.n; ++rho) {
        if (!ctx.selfconj[rho]) continue;
        StructureMonomial m = relative_v_coefficient(ctx, rho, g, k, r);
        if (m.is_zero()) continue;
        vcoeff[rho] = m.to_scalar(uorder);
        used[rho] = true;
    }
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == r) {
            Scalar acc;
            for (int rho = 0; rho < ctx.n; ++rho) {
                if (!used[rho]) continue;
                Scalar s = vcoeff[rho];
                for (int i : tuple) s *= basis_v_in_e(ctx, rho, i);
                acc += s;
            }
            for (int i : tuple)
                acc *= Scalar::t_monomial(-2 * ctx.lens[i], SCoeff(rat(Int(1), ctx.zetas[i])));
            if (!acc.is_zero()) out[tuple] = std::move(acc);
            return;
        }
        for (int i = 0; i < ctx.n; ++i) {
            tuple[pos] = i;
            self(self, pos + 1);
        }
    };
    rec(rec, 0);
    return out;
}

// ---------------------------------------------------------------------------
// Splitting checks.

struct SplitReport {
    bool pass = true;
    std::string detail; // offending profile and both values on failure
};

// Separating split along a pair of conjugate circles: the glued surface has
// genus g1 + g2 + 1 (the two boundary pairs close up into an extra handle of
// the quotient) and level k1 + k2. Verifies
//   RGW(g1+g2+1 | k1+k2) = sum_la RGW(g1|k1)_la zeta(la) t^{2 l(la)} RGW(g2|k2)_la.
inline SplitReport split_check_separating(const DegreeContext& ctx, int g1, int k1,
                                          int g2, int k2, int uorder = kDefaultUOrder) {
    const int g = g1 + g2 + 1;
    const int k = k1 + k2;
    Scalar lhs = closed_invariant(ctx, g, k, uorder);
    Scalar rhs;
    for (int la = 0; la < ctx.n; ++la) {
        Partition p = ctx.cls(la);
        Scalar a = relative_invariant(ctx, g1, k1, {p}, uorder);
        Scalar b = relative_invariant(ctx, g2, k2, {p}, uorder);
        rhs += a * b * Scalar::t_monomial(2 * ctx.lens[la], SCoeff(rat(ctx.zetas[la])));
    }
    SplitReport rep;
    if (!(lhs == rhs)) {
        rep.pass = false;
        rep.detail = "separating (" + std::to_string(g1) + "|" + std::to_string(k1) +
                     ")+(" + std::to_string(g2) + "|" + std::to_string(k2) +
                     "): lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
    }
    return rep;
}

// Non-separating split: cutting along a non-separating pair of conjugate
// circles leaves a two-boundary surface of genus g-2 (the doublet cylinder,
// i.e. the identity tube, when g = 1), reglued through the component swap.
// Verifies RGW(g|k) = sum_la zeta(la) t^{2 l(la)} [Omega o M]_{la,la} with the
// trace taken over the standard basis.
inline SplitReport split_check_nonseparating(const DegreeContext& ctx, int g, int k,
                                             int uorder = kDefaultUOrder) {
    if (g < 1) throw argument_error("non-separating split needs g >= 1");
    Scalar lhs = closed_invariant(ctx, g, k, uorder);
    Scalar rhs;
    if (g == 1) {
        // Cut surface is the level-k doublet tube; its lowered matrix is
        // diagonal. Trace with the swap Omega.
        TqftOperator tube = operator_to_basis(
            ctx, elementary_operator(ctx, ElemKind::Tube, k, 0, uorder), Basis::Standard);
        for (int la = 0; la < ctx.n; ++la) {
            Scalar m = tube.entry({la}, {la});
            if (ctx.signs[la] < 0) m = -m;
            rhs += m;
        }
    } else {
        auto tens = relative_tensor(ctx, g - 2, k, 2, uorder);
        for (int la = 0; la < ctx.n; ++la) {
            auto it = tens.find(std::vector<int>{la, la});
            if (it == tens.end()) continue;
            Scalar m = it->second;
            if (ctx.signs[la] < 0) m = -m;
            rhs += m * Scalar::t_monomial(2 * ctx.lens[la], SCoeff(rat(ctx.zetas[la])));
        }
    }
    SplitReport rep;
    if (!(lhs == rhs)) {
        rep.pass = false;
        rep.detail = "non-separating (g=" + std::to_string(g) + ",k=" + std::to_string(k) +
                     "): lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
    }
    return rep;
}

} // namespace rgw
