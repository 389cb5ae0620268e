#include <catch2/catch_amalgamated.hpp>

#include "rgw/gv.hpp"
#include "rgw/verify.hpp"

using namespace rgw;

TEST_CASE("basis triangularity", "[gv]") {
    for (int h = 0; h <= 12; ++h) {
        USeries b = sinh_power(1, h - 1, 30);
        CHECK(b.lo() == h - 1);
        CHECK(b.coeff(h - 1) == 1);
    }
    for (int k : {2, 3}) CHECK(sinh_power(k, -1, 20).coeff(-1) == rat(1, k));
}

TEST_CASE("genus 0 extraction: resolved conifold", "[gv]") {
    ContextBank bank;
    GvConfig cfg;
    cfg.genus = 0;
    cfg.dmax = 6;
    GvReport rep = gv_verify(bank, cfg);
    CHECK(rep.pass());
    REQUIRE(rep.real_table.entries.size() == 1);
    CHECK(rep.real_table.value(1, 0) == 1);
    REQUIRE(rep.complex_table.entries.size() == 1);
    CHECK(rep.complex_table.value(1, 0) == 1);
}

TEST_CASE("genus 1 extraction", "[gv]") {
    ContextBank bank;
    GvConfig cfg;
    cfg.genus = 1;
    cfg.dmax = 6;
    GvReport rep = gv_verify(bank, cfg);
    CHECK(rep.pass());
    for (int d = 1; d <= 6; ++d) {
        CHECK(rep.real_table.value(d, 1) == (d % 2 == 1 ? 1 : -1));
        // complex side: log prod 1/(1-q^d) has n_{d,1} = 1 for all d
        CHECK(rep.complex_table.value(d, 1) == 1);
    }
    for (const auto& [dh, n] : rep.real_table.entries) CHECK(dh.second == 1);
}

TEST_CASE("genus 2 structure", "[gv]") {
    ContextBank bank;
    GvConfig cfg;
    cfg.genus = 2;
    cfg.dmax = 4;
    GvReport rep = gv_verify(bank, cfg);
    CHECK(rep.pass());
    CHECK(rep.real_table.value(1, 2) == 1); // clause (c)
    for (const auto& [dh, n] : rep.real_table.entries) {
        CHECK(is_integer(n));
        CHECK((dh.first * 1 + dh.second - 1) % 2 == 0); // vanishing pattern
        CHECK(dh.second >= 2);                          // h >= g
    }
}

TEST_CASE("doublet series matches the sphere factor", "[gv]") {
    // For g = 0 the rebuilt doublet series must be
    // -1/2 sum_k (1/k)(2sinh(ku/2))^{-2} q^{2k}.
    int order = 40;
    BpsTable cx = extract_complex_bps(0, 3, 6, order);
    QSeries built = doublet_series_from_complex(cx, 6, order);
    for (int k = 1; 2 * k <= 6; ++k) {
        USeries expect = sinh_power(k, -2, order);
        expect *= rat(-1, 2 * k);
        USeries got = built.coeff(2 * k).coeff(0).expand(order);
        CHECK(USeries::equal_on(got, expect, -2, 20));
    }
    for (int dq = 1; dq <= 5; dq += 2) CHECK(built.coeff(dq).is_zero());
}

TEST_CASE("re-synthesis is an involution of extraction", "[gv]") {
    ContextBank bank;
    for (int g : {2, 3}) {
        GvConfig cfg;
        cfg.genus = g;
        cfg.dmax = 6;
        int order = cfg.effective_uorder();
        QSeries conn = connected_real_series(bank, g, cfg.dmax, order, cfg.effective_hmax());
        BpsTable table = extract_real_bps(conn, g, cfg.effective_hmax(), order);
        CHECK(table.report.ok());
        CHECK(resynthesize(table, cfg.dmax, order) == conn);
    }
}

TEST_CASE("truncation failure is loud", "[gv]") {
    ContextBank bank;
    QSeries conn = connected_real_series(bank, 2, 2, 40, 10);
    CHECK_THROWS_AS(extract_real_bps(conn, 2, /*hmax=*/30, /*order=*/8),
                    truncation_error);
}

TEST_CASE("f and F powers agree mod 2", "[gv]") {
    // f(Q) = Q - Q^{-1}, F(Q) = 2 - Q - Q^{-1}
    SPoly f = SPoly::monomial(1, 1) + SPoly::monomial(-1, -1);
    SPoly F = SPoly::monomial(0, 2) + SPoly::monomial(1, -1) + SPoly::monomial(-1, -1);
    for (int s = 0; s <= 12; ++s) {
        SPoly fs = f.pow(s);
        SPoly Fs = F.pow(s);
        if (s > 0) {
            CHECK((fs.coeff(s) == 1 || fs.coeff(s) == -1));
            CHECK((Fs.coeff(s) == 1 || Fs.coeff(s) == -1));
            CHECK((fs.coeff(-s) == 1 || fs.coeff(-s) == -1));
        }
        for (int l = -s; l <= s; ++l) {
            Rational a = fs.coeff(l), b = Fs.coeff(l);
            REQUIRE(is_integer(a));
            REQUIRE(is_integer(b));
            CHECK((a.get_num() - b.get_num()) % 2 == 0);
        }
    }
}

TEST_CASE("arm-length expansion of the sphere coefficient", "[gv]") {
    // The q^d coefficient of the sphere series has a second expansion over
    // all partitions with arm-length signs:
    //   sum_{rho=rho'} eps_rho / prod 2sinh(h u/2)
    //     = sum_{rho |- d} (-1)^{a(rho)} / prod 2sinh(h u/2).
    int order = 30;
    for (int d = 1; d <= 8; ++d) {
        USeries all = USeries::zero().truncated(order + 1);
        USeries selfconj = USeries::zero().truncated(order + 1);
        for (const auto& rho : partitions_of(d)) {
            SPoly prod(Rational(1));
            for (int h : hooks(rho)) prod *= sinh_factor(h);
            int work = order + 2 * d + 4; // the hook product vanishes to order d
            USeries inv = to_u_series(prod, work).inverse().truncated(order + 1);
            long arms = 0;
            for (int p : rho.parts()) arms += static_cast<long>(p) * (p - 1) / 2;
            all += arms % 2 == 0 ? inv : -inv;
            if (is_self_conjugate(rho)) {
                int eps = ((d - rank(rho)) / 2) % 2 == 0 ? 1 : -1;
                selfconj += eps > 0 ? inv : -inv;
            }
        }
        CHECK(USeries::equal_on(all, selfconj, -d, 16));
    }
}

TEST_CASE("torus and sphere suites", "[gv]") {
    ContextBank bank;
    auto torus = torus_suite(bank, 8);
    for (const auto& c : torus) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
    auto sphere = sphere_cy_suite(bank, 4, 14, 30);
    for (const auto& c : sphere) {
        INFO(c.name << " " << c.detail);
        CHECK(c.pass);
    }
}
