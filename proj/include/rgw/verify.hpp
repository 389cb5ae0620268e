#pragma once

// Named verification suites behind the CLI `verify` command and the
// acceptance run: Klein axioms, splitting formulas, signed Frobenius-Schur,
// level-0 cap coefficients, the sphere and torus CY identities, and DSL
// functoriality fuzzing. Each case carries its own independent computation
// of both sides.

#include <random>

#include "rgw/dsl.hpp"
#include "rgw/gv.hpp"
#include "rgw/oracles.hpp"
#include "rgw/tqft.hpp"

namespace rgw {

struct VerifyCase {
    std::string name;
    bool pass = false;
    std::string detail;
};

using VerifyResult = std::vector<VerifyCase>;

inline bool all_pass(const VerifyResult& r) {
    for (const auto& c : r)
        if (!c.pass) return false;
    return true;
}

namespace detail {
inline void add_case(VerifyResult& out, std::string name, bool pass,
                     std::string detail = "") {
    out.push_back({std::move(name), pass, std::move(detail)});
}
inline TqftVector basis_vector(const DegreeContext& ctx, Basis b, int i) {
    TqftVector v;
    v.d = ctx.d;
    v.basis = b;
    v.set(i, Scalar(Rational(1)));
    return v;
}
} // namespace detail

// --------------------------------------------------------------------------
// Klein axioms and elementary-cobordism identities, all exact.

inline VerifyResult klein_axioms_suite(const DegreeContext& ctx,
                                       int frobenius_max_d = 6,
                                       int uorder = kDefaultUOrder) {
    VerifyResult out;
    const int n = ctx.n;
    auto e = [&](int i) { return detail::basis_vector(ctx, Basis::Standard, i); };

    // Omega^2 = id and the pairing invariance <Ox, Oy> = <x, y>.
    bool omega2 = true, pairs = true;
    for (int i = 0; i < n; ++i) {
        if (!(omega(ctx, omega(ctx, e(i))) == e(i))) omega2 = false;
        for (int j = 0; j < n; ++j)
            if (!(pairing(ctx, omega(ctx, e(i)), omega(ctx, e(j))) == pairing(ctx, e(i), e(j))))
                pairs = false;
    }
    detail::add_case(out, "omega involution", omega2);
    detail::add_case(out, "pairing Omega-invariant", pairs);

    // Omega is an (anti)automorphism; the algebra is commutative, so
    // Omega(xy) = Omega(y) Omega(x) = Omega(x) Omega(y) on basis pairs.
    bool antiauto = true;
    for (int i = 0; i < n && antiauto; ++i)
        for (int j = 0; j < n && antiauto; ++j) {
            TqftVector lhs = omega(ctx, multiply(ctx, e(i), e(j)));
            TqftVector rhs = multiply(ctx, omega(ctx, e(j)), omega(ctx, e(i)));
            if (!(lhs == rhs)) antiauto = false;
        }
    detail::add_case(out, "Omega(xy) = Omega(y)Omega(x)", antiauto);

    // Unit axiom.
    bool unit = true;
    TqftVector one = unit_vector(ctx);
    for (int i = 0; i < n; ++i)
        if (!(multiply(ctx, one, e(i)) == e(i))) unit = false;
    detail::add_case(out, "e_(1^d) is the unit", unit);

    // (aU)^* = aU on every basis element.
    TqftVector U = v_to_e(ctx, crosscap_U(ctx, uorder));
    bool au = true;
    for (int i = 0; i < n; ++i) {
        TqftVector prod = multiply(ctx, e(i), U);
        if (!(omega(ctx, prod) == prod)) au = false;
    }
    detail::add_case(out, "Omega(aU) = aU", au);

    // U^2 = m (id x Omega) Delta(1), the punctured Klein bottle relation,
    // with the right side built from elementary operators.
    TqftVector U2 = multiply(ctx, U, U);
    TqftOperator rhs_op = compose(
        elementary_operator(ctx, ElemKind::Copants),
        compose(tensor(identity_operator(ctx, 1, Basis::Idempotent),
                       elementary_operator(ctx, ElemKind::Omega)),
                compose(elementary_operator(ctx, ElemKind::Pants),
                        elementary_operator(ctx, ElemKind::Cap))));
    TqftVector rhs;
    rhs.d = ctx.d;
    rhs.basis = Basis::Idempotent;
    for (const auto& [key, s] : rhs_op.entries) rhs.set(key.second[0], s);
    bool klein_bottle = e_to_v(ctx, U2) == rhs;
    // both sides also equal sum over self-conjugate rho of lambda_rho v_rho
    TqftVector expected;
    expected.d = ctx.d;
    expected.basis = Basis::Idempotent;
    for (int rho = 0; rho < n; ++rho)
        if (ctx.selfconj[rho])
            expected.set(rho, lambda_monomial(ctx, rho).to_scalar(uorder));
    klein_bottle = klein_bottle && (rhs == expected);
    detail::add_case(out, "U^2 = m(id x Omega)Delta(1)", klein_bottle);

    // K^2 = G on the self-conjugate block (U_rho^2 = lambda_rho).
    bool k2 = true;
    for (int rho = 0; rho < n; ++rho) {
        if (!ctx.selfconj[rho]) continue;
        StructureMonomial u2m = crosscap_monomial(ctx, rho).pow(2);
        if (!(u2m.to_scalar(uorder) == lambda_monomial(ctx, rho).to_scalar(uorder)))
            k2 = false;
    }
    detail::add_case(out, "U_rho^2 = lambda_rho", k2);

    // Two independent routes to the crosscap element.
    bool cc = v_to_e(ctx, crosscap_U(ctx, uorder)) == crosscap_standard_basis(ctx);
    detail::add_case(out, "crosscap: sq-fiber route = idempotent route", cc);

    // Moving a puncture around the Moebius band: Omega o Xcap = Xcap.
    bool moeb = omega(ctx, U) == U;
    detail::add_case(out, "Omega(U) = U", moeb);

    // Frobenius compatibility <xy, z> = <x, yz> on basis triples.
    if (ctx.d <= frobenius_max_d) {
        bool frob = true;
        for (int i = 0; i < n && frob; ++i)
            for (int j = 0; j < n && frob; ++j) {
                TqftVector eij = multiply(ctx, e(i), e(j));
                for (int k = 0; k < n && frob; ++k) {
                    Scalar lhs = pairing(ctx, eij, e(k));
                    Scalar rhs2 = pairing(ctx, e(i), multiply(ctx, e(j), e(k)));
                    if (!(lhs == rhs2)) frob = false;
                }
            }
        detail::add_case(out, "Frobenius <xy,z> = <x,yz>", frob);
    }
    return out;
}

// --------------------------------------------------------------------------
// Splitting formulas.

inline VerifyResult splitting_suite(const DegreeContext& ctx, int g, int k,
                                    int uorder = kDefaultUOrder) {
    VerifyResult out;
    // Separating: the glued surface has genus g1 + g2 + 1, so enumerate
    // g1 + g2 = g - 1 with all level distributions in a window around k.
    for (int g1 = 0; g1 <= g - 1; ++g1) {
        int g2 = g - 1 - g1;
        int klo = std::min(0, k) - 1, khi = std::max(0, k) + 1;
        for (int k1 = klo; k1 <= khi; ++k1) {
            int k2 = k - k1;
            auto rep = split_check_separating(ctx, g1, k1, g2, k2, uorder);
            detail::add_case(out,
                             "separating (" + std::to_string(g1) + "|" + std::to_string(k1) +
                                 ")+(" + std::to_string(g2) + "|" + std::to_string(k2) + ")",
                             rep.pass, rep.detail);
        }
    }
    if (g >= 1) {
        auto rep = split_check_nonseparating(ctx, g, k, uorder);
        detail::add_case(out, "non-separating (g=" + std::to_string(g) + ")", rep.pass,
                         rep.detail);
    }
    // Trivial split: capping the unit boundary reproduces the closed value.
    {
        std::vector<int> ones(ctx.d, 1);
        Scalar rel = relative_invariant(ctx, g, k, {Partition(ones)}, uorder);
        Scalar closed = closed_invariant(ctx, g, k, uorder);
        detail::add_case(out, "unit-boundary capping", rel == closed);
    }
    return out;
}

// --------------------------------------------------------------------------
// Signed Frobenius-Schur.

inline VerifyResult sfs_suite(const CharacterTable& t, bool element_mode) {
    VerifyResult out;
    const int d = t.d;
    for (const auto& rho : t.classes) {
        Rational expected = 0;
        if (is_self_conjugate(rho))
            expected = ((d - rank(rho)) / 2) % 2 == 0 ? 1 : -1;
        Rational cls = sfs_bruteforce_classes(t, rho);
        bool ok = (cls == expected);
        std::string detail = "class-sum " + rational_to_string(cls);
        if (element_mode && d <= 7) {
            Rational elem = sfs_bruteforce_elements(t, rho);
            ok = ok && (elem == cls);
            detail += ", elements " + rational_to_string(elem);
        }
        if (is_self_conjugate(rho)) {
            Rational o = sfs_o_value(t, rho);
            ok = ok && (o == 0 || o == 1);
            detail += ", o=" + rational_to_string(o);
        }
        detail::add_case(out, "SFS " + rho.to_string(), ok, detail);
    }
    for (const auto& alpha : t.classes) {
        auto [lhs, rhs] = sfs_identity_sides(t, alpha);
        detail::add_case(out, "SFS identity at " + alpha.to_string(), lhs == rhs,
                         rational_to_string(lhs) + " vs " + rational_to_string(rhs));
    }
    return out;
}

// --------------------------------------------------------------------------
// Level-0 cap coefficients r_alpha, two routes.

inline VerifyResult r_alpha_suite(int d, int maxd = kDefaultMaxDegree) {
    VerifyResult out;
    for (const auto& alpha : partitions_of(d, maxd)) {
        Rational a = r_alpha_by_expansion(alpha);
        Rational b = r_alpha_by_fibers(alpha);
        int evens = 0;
        for (int p : alpha.parts())
            if (p % 2 == 0) ++evens;
        bool ok = (a == b) && (evens % 2 == 0 || a == 0);
        detail::add_case(out, "r_" + alpha.to_string(), ok,
                         rational_to_string(a) + " vs " + rational_to_string(b));
    }
    return out;
}

// --------------------------------------------------------------------------
// Sphere CY identity: the self-conjugate hook sum equals the exponential
// form, and the connected part is the odd-cover series.

inline VerifyResult sphere_cy_suite(ContextBank& bank, int qmax, int u_window,
                                    int uorder) {
    VerifyResult out;
    QSeries lhs = real_cy_partition_series(bank, 0, qmax, uorder);
    // exp( sum_{k odd} (1/k)(2sinh(ku/2))^{-1} q^k
    //      - 1/2 sum_k (1/k)(2sinh(ku/2))^{-2} q^{2k} )
    QSeries arg(qmax, 0);
    for (int k = 1; k <= qmax; k += 2) {
        USeries term = sinh_power(k, -1, uorder);
        term *= rat(1, k);
        arg.set_coeff(k, arg.coeff(k) + Scalar::t_monomial(0, SCoeff(term)));
    }
    for (int k = 1; 2 * k <= qmax; ++k) {
        USeries term = sinh_power(k, -2, uorder);
        term *= rat(-1, 2 * k);
        arg.set_coeff(2 * k, arg.coeff(2 * k) + Scalar::t_monomial(0, SCoeff(term)));
    }
    QSeries rhs = exp_q(arg);
    for (int dq = 1; dq <= qmax; ++dq) {
        USeries a = lhs.coeff(dq).coeff(0).expand(uorder);
        USeries b = rhs.coeff(dq).coeff(0).expand(uorder);
        bool ok = USeries::equal_on(a, b, -dq, u_window);
        detail::add_case(out, "sphere CY q^" + std::to_string(dq), ok);
    }
    // Connected part.
    GvConfig cfg;
    cfg.genus = 0;
    cfg.dmax = qmax;
    QSeries conn = connected_real_series(bank, 0, qmax, uorder, cfg.effective_hmax());
    for (int dq = 1; dq <= qmax; ++dq) {
        USeries expect = USeries::zero().truncated(uorder + 1);
        if (dq % 2 == 1) {
            expect = sinh_power(dq, -1, uorder);
            expect *= rat(1, dq);
        }
        USeries got = conn.coeff(dq).is_zero()
                          ? USeries::zero().truncated(uorder + 1)
                          : conn.coeff(dq).coeff(0).expand(uorder);
        bool ok = USeries::equal_on(got, expect, -dq, u_window);
        detail::add_case(out, "sphere CY connected q^" + std::to_string(dq), ok);
    }
    return out;
}

// --------------------------------------------------------------------------
// Torus identity: sum_d RGW_d(1|0) q^d = prod_d 1/(1+(-q)^d), and per-degree
// values equal the count of self-conjugate partitions.

inline VerifyResult torus_suite(ContextBank& bank, int dmax) {
    VerifyResult out;
    QSeries prod(dmax, 1);
    for (int d = 1; d <= dmax; ++d) {
        // 1/(1+(-q)^d) = sum_n (-1)^{n(d+1)} q^{dn}
        QSeries factor(dmax, 1);
        for (int nn = 1; nn * d <= dmax; ++nn) {
            int s = (nn * (d + 1)) % 2 == 0 ? 1 : -1;
            factor.set_coeff(nn * d, Scalar(Rational(s)));
        }
        prod *= factor;
    }
    for (int d = 1; d <= dmax; ++d) {
        Scalar inv = closed_invariant(bank.get(d), 1, 0);
        int count = 0;
        for (const auto& la : partitions_of(d, bank.max_degree()))
            if (is_self_conjugate(la)) ++count;
        bool ok = (inv == Scalar(Rational(count))) && (prod.coeff(d) == inv);
        detail::add_case(out, "torus q^" + std::to_string(d), ok,
                         "self-conjugate count " + std::to_string(count));
    }
    return out;
}

// --------------------------------------------------------------------------
// DSL functoriality fuzzing: for random well-typed e1, e2 with matching
// arities, evaluate(e1 . e2) = evaluate(e1) o evaluate(e2), and the tensor
// analogue.

class RandomExprGen {
  public:
    RandomExprGen(std::uint64_t seed, int max_arity = 3, int max_layers = 4)
        : rng_(seed), max_arity_(max_arity), max_layers_(max_layers) {}

    // Random well-typed expression with the given input arity (output arity
    // comes out of the construction).
    ExprPtr generate(int n_in) {
        int layers = 1 + static_cast<int>(rng_() % max_layers_);
        ExprPtr e = random_layer(n_in);
        for (int i = 1; i < layers; ++i) {
            int mid = typecheck(e).n_out;
            if (mid == 0 || mid > max_arity_) break;
            e = CobExpr::compose(random_layer(mid), e, 0);
        }
        return e;
    }

  private:
    std::mt19937_64 rng_;
    int max_arity_;
    int max_layers_;

    ExprPtr random_generator(int need) {
        // pick among generators with n_in <= need, favoring arity-1 tubes
        struct G { const char* name; int n_in; };
        static const G gens[] = {{"cup", 1},   {"pants", 1},   {"omega", 1}, {"G", 1},
                                 {"K", 1},     {"tube", 1},    {"copants", 2},
                                 {"twist", 2}, {"cap", 0},     {"xcap", 0}};
        while (true) {
            const G& g = gens[rng_() % std::size(gens)];
            if (g.n_in > need) continue;
            std::optional<std::pair<int, int>> level;
            if (std::string(g.name) == "tube" || std::string(g.name) == "cap") {
                int a = -static_cast<int>(rng_() % 2);
                int b = -static_cast<int>(rng_() % 2);
                if (a || b) level = {a, b};
            }
            return CobExpr::generator(g.name, level, 0);
        }
    }

    ExprPtr random_layer(int n_in) {
        // tensor of generators and identities consuming exactly n_in strands
        std::vector<ExprPtr> parts;
        int need = n_in;
        int outs = 0;
        while (need > 0) {
            if (rng_() % 4 == 0) {
                parts.push_back(CobExpr::identity(1, 0));
                --need;
                ++outs;
                continue;
            }
            ExprPtr g = random_generator(need);
            Arity a = typecheck(g);
            need -= a.n_in;
            outs += a.n_out;
            parts.push_back(g);
        }
        if (parts.empty() || (outs == 0 && rng_() % 2 == 0))
            parts.push_back(random_generator(0)); // keep something flowing
        ExprPtr e = parts[0];
        for (size_t i = 1; i < parts.size(); ++i) e = CobExpr::tensor(e, parts[i], 0);
        return e;
    }
};

inline VerifyResult functoriality_suite(const DegreeContext& ctx, int count,
                                        std::uint64_t seed, int uorder = kDefaultUOrder) {
    VerifyResult out;
    RandomExprGen gen(seed);
    int done = 0, attempts = 0;
    while (done < count && attempts < count * 20) {
        ++attempts;
        ExprPtr e2 = gen.generate(1 + static_cast<int>(attempts % 2));
        Arity a2 = typecheck(e2);
        if (a2.n_out > 3) continue;
        ExprPtr e1 = gen.generate(a2.n_out);
        Arity a1 = typecheck(e1);
        if (a1.n_in + a1.n_out > 5 || a2.n_in + a2.n_out > 5) continue;

        TqftOperator op1 = evaluate(e1, ctx, uorder);
        TqftOperator op2 = evaluate(e2, ctx, uorder);
        ExprPtr comp = CobExpr::compose(e1, e2, 0);
        bool ok_c = true, ok_t = true;
        {
            TqftOperator whole = evaluate(comp, ctx, uorder);
            TqftOperator parts = compose(op1, op2);
            for (const auto& [key, s] : whole.entries)
                if (!(parts.entry(key.first, key.second) == s)) ok_c = false;
            for (const auto& [key, s] : parts.entries)
                if (!(whole.entry(key.first, key.second) == s)) ok_c = false;
        }
        if (a1.n_in + a2.n_in <= 3 && a1.n_out + a2.n_out <= 3) {
            ExprPtr tens = CobExpr::tensor(e1, e2, 0);
            TqftOperator whole = evaluate(tens, ctx, uorder);
            TqftOperator parts = tensor(op1, op2);
            for (const auto& [key, s] : whole.entries)
                if (!(parts.entry(key.first, key.second) == s)) ok_t = false;
            for (const auto& [key, s] : parts.entries)
                if (!(whole.entry(key.first, key.second) == s)) ok_t = false;
        }
        ++done;
        detail::add_case(out, "fuzz #" + std::to_string(done), ok_c && ok_t,
                         print(comp));
    }
    if (done < count)
        detail::add_case(out, "generation", false,
                         "only generated " + std::to_string(done) + " cases");
    return out;
}

} // namespace rgw
