#include <catch2/catch_amalgamated.hpp>

#include <thread>

#include "rgw/tqft.hpp"
#include "rgw/verify.hpp"

using namespace rgw;

namespace {
TqftVector e_basis(const DegreeContext& ctx, const Partition& la) {
    TqftVector v;
    v.d = ctx.d;
    v.basis = Basis::Standard;
    v.set(ctx.index(la), Scalar(Rational(1)));
    return v;
}
TqftVector v_basis(const DegreeContext& ctx, const Partition& rho) {
    TqftVector v;
    v.d = ctx.d;
    v.basis = Basis::Idempotent;
    v.set(ctx.index(rho), Scalar(Rational(1)));
    return v;
}
} // namespace

TEST_CASE("basis change", "[tqft]") {
    DegreeContext ctx = DegreeContext::make(2);
    // v_(2) has coefficient (1/2)(-t)^{-1} on e_(2)
    TqftVector v2 = v_to_e(ctx, v_basis(ctx, Partition({2})));
    CHECK(v2.coord(ctx, Partition({2})) == Scalar::t_monomial(-1, SCoeff(rat(-1, 2))));
    CHECK(v2.coord(ctx, Partition({1, 1})) == Scalar(rat(1, 2)));

    for (int d = 1; d <= 8; ++d) {
        DegreeContext c = DegreeContext::make(d);
        // unit: e_(1^d) = sum of all idempotents
        TqftVector one = e_to_v(c, unit_vector(c));
        for (int rho = 0; rho < c.n; ++rho) CHECK(one.coord(rho) == Scalar(Rational(1)));
        // roundtrips
        for (int i = 0; i < c.n; ++i) {
            TqftVector ve = v_basis(c, c.cls(i));
            CHECK(e_to_v(c, v_to_e(c, ve)) == ve);
            TqftVector ee = e_basis(c, c.cls(i));
            CHECK(v_to_e(c, e_to_v(c, ee)) == ee);
        }
    }
}

TEST_CASE("pants product", "[tqft]") {
    DegreeContext ctx = DegreeContext::make(2);
    TqftVector e2 = e_basis(ctx, Partition({2}));
    TqftVector prod = multiply(ctx, e2, e2);
    CHECK(prod.coord(ctx, Partition({1, 1})) == Scalar::t_monomial(2, SCoeff(Rational(1))));
    CHECK(prod.coord(ctx, Partition({2})).is_zero());

    for (int d = 2; d <= 6; ++d) {
        DegreeContext c = DegreeContext::make(d);
        TqftVector one = unit_vector(c);
        for (int i = 0; i < c.n; ++i) {
            CHECK(multiply(c, one, e_basis(c, c.cls(i))) == e_basis(c, c.cls(i)));
            TqftVector vr = v_basis(c, c.cls(i));
            CHECK(multiply(c, vr, vr) == vr);
            if (i > 0) CHECK(multiply(c, vr, v_basis(c, c.cls(0))).coords.empty());
        }
    }
}

TEST_CASE("structure scalars", "[tqft]") {
    DegreeContext c1 = DegreeContext::make(1);
    auto s1 = structure_scalars(c1, Partition({1}), 10);
    CHECK(s1.lambda == Scalar::t_monomial(2, SCoeff(Rational(1))));
    // eta = t (2sinh(u/2))^{-1}
    CHECK(s1.eta.is_t_monomial());
    CHECK(s1.eta.t_exponent() == 1);
    CHECK(s1.eta.coeff(1).series().coeff(-1) == 1);
    CHECK(s1.eta.coeff(1).series().coeff(1) == rat(-1, 24));

    DegreeContext c3 = DegreeContext::make(3);
    auto s3 = structure_scalars(c3, Partition({2, 1}), 10);
    CHECK(s3.lambda == Scalar::t_monomial(6, SCoeff(Rational(9))));
    // self-conjugate: zero total content, eta and eta-bar agree
    CHECK(s3.eta == s3.eta_bar);

    // non self-conjugate: conjugation swaps eta and eta-bar (content flips)
    DegreeContext c4 = DegreeContext::make(4);
    int rho = c4.index(Partition({3, 1}));
    int rhoc = c4.conj_idx[rho];
    CHECK(eta_monomial(c4, rho, false).s_exp == -eta_monomial(c4, rhoc, false).s_exp);
}

TEST_CASE("omega", "[tqft]") {
    DegreeContext ctx = DegreeContext::make(3);
    CHECK(omega(ctx, unit_vector(ctx)) == unit_vector(ctx));
    TqftVector e2 = e_basis(ctx, Partition({2, 1}));
    CHECK(omega(ctx, e2) == e2 * Scalar(Rational(-1)));
    CHECK(omega(ctx, v_basis(ctx, Partition({3}))) == v_basis(ctx, Partition({1, 1, 1})));
}

TEST_CASE("crosscap element", "[tqft]") {
    DegreeContext c1 = DegreeContext::make(1);
    TqftVector u1 = crosscap_U(c1);
    CHECK(u1.coord(c1, Partition({1})) == Scalar::t_monomial(1, SCoeff(Rational(1))));

    DegreeContext c2 = DegreeContext::make(2);
    CHECK(crosscap_U(c2).coords.empty());
    CHECK(crosscap_standard_basis(c2) == v_to_e(c2, crosscap_U(c2)));

    DegreeContext c3 = DegreeContext::make(3);
    TqftVector u3 = crosscap_U(c3);
    CHECK(u3.coord(c3, Partition({2, 1})) == Scalar::t_monomial(3, SCoeff(Rational(-3))));
    CHECK(u3.coord(c3, Partition({3})).is_zero());

    for (int d = 1; d <= 8; ++d) {
        DegreeContext c = DegreeContext::make(d);
        CHECK(crosscap_standard_basis(c) == v_to_e(c, crosscap_U(c)));
        for (int rho = 0; rho < c.n; ++rho) {
            if (!c.selfconj[rho]) continue;
            StructureMonomial u = crosscap_monomial(c, rho);
            CHECK(u.pow(2).to_scalar(8) == lambda_monomial(c, rho).to_scalar(8));
        }
    }
}

TEST_CASE("closed invariants", "[tqft]") {
    // torus level 0 counts self-conjugate partitions
    CHECK(closed_invariant(DegreeContext::make(2), 1, 0).is_zero());
    CHECK(closed_invariant(DegreeContext::make(3), 1, 0) == Scalar(Rational(1)));
    CHECK(closed_invariant(DegreeContext::make(4), 1, 0) == Scalar(Rational(1)));

    // RGW_3(2|1) = -(s^3 - s^-3)(s - s^-1)^2
    DegreeContext c3 = DegreeContext::make(3);
    Scalar golden = Scalar::t_monomial(
        0, SCoeff(-(sinh_factor(3) * sinh_factor(1) * sinh_factor(1))));
    CHECK(closed_invariant(c3, 2, 1) == golden);

    // g=3 CY, d=1: (s - s^-1)^2
    CHECK(closed_invariant(DegreeContext::make(1), 3, 2) ==
          Scalar::t_monomial(0, SCoeff(sinh_factor(1) * sinh_factor(1))));

    // level-0 remark: RGW(g|0) via the formula at k=0
    for (int d = 1; d <= 6; ++d) {
        DegreeContext c = DegreeContext::make(d);
        for (int g = 0; g <= 3; ++g) {
            Scalar direct;
            for (int rho = 0; rho < c.n; ++rho)
                if (c.selfconj[rho]) direct += crosscap_monomial(c, rho).pow(g - 1).to_scalar(12);
            CHECK(closed_invariant(c, g, 0, 12) == direct);
        }
    }
}

TEST_CASE("formula route equals composition route", "[tqft]") {
    for (int d = 1; d <= 4; ++d) {
        DegreeContext c = DegreeContext::make(d);
        for (int g = 0; g <= 3; ++g)
            for (int k = -3; k <= 3; ++k) {
                int order = 16 + 2 * d;
                CHECK(closed_invariant(c, g, k, order) ==
                      closed_invariant_by_composition(c, g, k, order));
            }
    }
    for (int d : {5, 6}) {
        DegreeContext c = DegreeContext::make(d);
        for (int g = 0; g <= 3; ++g)
            for (int k = -3; k <= 3; ++k)
                CHECK(closed_invariant(c, g, k, 20) ==
                      closed_invariant_by_composition(c, g, k, 20));
    }
}

TEST_CASE("CY t-freeness and u-parity", "[tqft]") {
    for (int d = 1; d <= 6; ++d) {
        DegreeContext c = DegreeContext::make(d);
        for (int g = 1; g <= 3; ++g) {
            Scalar cy = closed_invariant(c, g, g - 1);
            if (cy.is_zero()) continue;
            CHECK(cy.is_t_monomial());
            CHECK(cy.t_exponent() == 0);
            // (-u) substitution multiplies by (-1)^{d(g-1)}
            Scalar flipped = cy.flip_su();
            Scalar expect = (d * (g - 1)) % 2 == 0 ? cy : Scalar() - cy;
            CHECK(flipped == expect);
        }
        // general level: single t-exponent d(g-1-k)
        Scalar s = closed_invariant(c, 2, -1, 20);
        if (!s.is_zero()) CHECK(s.t_exponent() == c.d * 2);
    }
}

TEST_CASE("orientation flip flag", "[tqft]") {
    DegreeContext c3 = DegreeContext::make(3);
    CHECK(closed_invariant(c3, 2, 1, 12, true) ==
          Scalar() - closed_invariant(c3, 2, 1, 12, false));
    DegreeContext c4 = DegreeContext::make(4);
    CHECK(closed_invariant(c4, 2, 1, 12, true) == closed_invariant(c4, 2, 1, 12, false));
}

TEST_CASE("doublet invariants", "[tqft]") {
    for (int d = 1; d <= 6; ++d) {
        DegreeContext c = DegreeContext::make(d);
        CHECK(doublet_invariant(c, 1, 0, 0) == Scalar(Rational(c.n)));
    }
    DegreeContext c1 = DegreeContext::make(1);
    CHECK(doublet_invariant(c1, 0, 0, 0) == Scalar::t_monomial(-2, SCoeff(Rational(1))));

    // CY doublet = sum over all partitions of the hook sinh-product power
    for (int d = 1; d <= 5; ++d) {
        DegreeContext c = DegreeContext::make(d);
        for (int g = 2; g <= 3; ++g) {
            SPoly expect;
            for (const auto& rho : partitions_of(d)) {
                SPoly term(Rational(1));
                for (int h : hooks(rho)) term *= sinh_factor(h);
                expect += term.pow(2 * g - 2);
            }
            CHECK(doublet_invariant(c, g, g - 1, g - 1) ==
                  Scalar::t_monomial(0, SCoeff(expect)));
        }
    }
}

TEST_CASE("relative invariants", "[tqft]") {
    DegreeContext c1 = DegreeContext::make(1);
    CHECK(relative_invariant(c1, 0, 0, {Partition({1})}) ==
          Scalar::t_monomial(-1, SCoeff(Rational(1))));

    DegreeContext c2 = DegreeContext::make(2);
    // r_(2) = 0 and r_(1,1) = 0: no degree-2 level-0 cap coefficients
    CHECK(relative_invariant(c2, 0, 0, {Partition({2})}).is_zero());
    CHECK(relative_invariant(c2, 0, 0, {Partition({1, 1})}).is_zero());

    // capping the unit boundary reproduces the closed invariant
    for (int d = 1; d <= 5; ++d) {
        DegreeContext c = DegreeContext::make(d);
        std::vector<int> ones(d, 1);
        for (int g = 0; g <= 3; ++g)
            for (int k : {0, 1})
                CHECK(relative_invariant(c, g, k, {Partition(ones)}, 16) ==
                      closed_invariant(c, g, k, 16));
    }

    // level-0 one-boundary values are the raised-and-lowered cap series
    for (int d = 1; d <= 6; ++d) {
        DegreeContext c = DegreeContext::make(d);
        for (int a = 0; a < c.n; ++a) {
            Scalar expect = Scalar::t_monomial(-c.lens[a], SCoeff(r_alpha(c, a)));
            CHECK(relative_invariant(c, 0, 0, {c.cls(a)}) == expect);
        }
    }

    CHECK_THROWS_AS(relative_invariant(c2, 0, 0, {Partition({3})}), argument_error);
    CHECK_THROWS_AS(relative_invariant(c2, 0, 0, {}), argument_error);
}

TEST_CASE("splitting checks", "[tqft]") {
    DegreeContext c2 = DegreeContext::make(2);
    DegreeContext c3 = DegreeContext::make(3);
    CHECK(split_check_separating(c2, 1, 1, 0, 0).pass); // glued: (2|1), d=2
    CHECK(split_check_separating(c3, 1, 1, 0, 0).pass); // glued: (2|1), d=3
    CHECK(split_check_separating(c3, 1, -1, 1, 0, 24).pass);
    CHECK(split_check_nonseparating(c3, 1, 0).pass);
    CHECK(split_check_nonseparating(c3, 2, 1).pass);
    CHECK(split_check_nonseparating(c2, 3, -1, 24).pass);
}

TEST_CASE("Klein axioms quick pass", "[tqft]") {
    for (int d = 1; d <= 5; ++d) {
        auto result = klein_axioms_suite(DegreeContext::make(d), 5);
        for (const auto& c : result) {
            INFO("d=" << d << " case " << c.name << " " << c.detail);
            CHECK(c.pass);
        }
    }
}

TEST_CASE("independent evaluations share a context across threads", "[tqft]") {
    const DegreeContext ctx = DegreeContext::make(5);
    std::vector<Scalar> results(8);
    std::vector<std::thread> workers;
    for (int i = 0; i < 8; ++i)
        workers.emplace_back([&, i] {
            results[i] = closed_invariant(ctx, 1 + i % 3, (i % 3), 16);
        });
    for (auto& w : workers) w.join();
    for (int i = 0; i < 8; ++i)
        CHECK(results[i] == closed_invariant(ctx, 1 + i % 3, (i % 3), 16));
}

TEST_CASE("operator plumbing", "[tqft]") {
    DegreeContext c2 = DegreeContext::make(2);
    // twist . twist = id
    TqftOperator tw = elementary_operator(c2, ElemKind::Twist);
    TqftOperator tw2 = compose(tw, tw);
    TqftOperator id2 = identity_operator(c2, 2, Basis::Idempotent);
    CHECK(tw2.entries == id2.entries);

    // cup . cap = sum lambda^{-1} = t^{-4}/2 at d=2
    TqftOperator cupcap = compose(elementary_operator(c2, ElemKind::Cup),
                                  elementary_operator(c2, ElemKind::Cap));
    CHECK(operator_scalar(cupcap) == Scalar::t_monomial(-4, SCoeff(rat(1, 2))));

    // K . K = G on the self-conjugate block of d=3
    DegreeContext c3 = DegreeContext::make(3);
    TqftOperator kk = compose(elementary_operator(c3, ElemKind::K),
                              elementary_operator(c3, ElemKind::K));
    TqftOperator g = elementary_operator(c3, ElemKind::G);
    for (int rho = 0; rho < c3.n; ++rho)
        if (c3.selfconj[rho]) CHECK(kk.entry({rho}, {rho}) == g.entry({rho}, {rho}));

    // basis conversion roundtrip on a non-diagonal operator
    TqftOperator pants = elementary_operator(c3, ElemKind::Pants);
    TqftOperator back =
        operator_to_basis(c3, operator_to_basis(c3, pants, Basis::Standard),
                          Basis::Idempotent);
    for (const auto& [key, s] : pants.entries)
        CHECK(back.entry(key.first, key.second) == s);
    for (const auto& [key, s] : back.entries)
        CHECK(pants.entry(key.first, key.second) == s);

    CHECK_THROWS_AS(compose(pants, pants), argument_error);
    CHECK_THROWS_AS(operator_scalar(pants), argument_error);
}
