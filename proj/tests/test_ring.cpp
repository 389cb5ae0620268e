#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "rgw/qseries.hpp"

using namespace rgw;

namespace {
SPoly random_spoly(std::mt19937_64& rng) {
    SPoly p;
    int terms = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < terms; ++i) {
        int e = static_cast<int>(rng() % 11) - 5;
        long num = static_cast<long>(rng() % 9) - 4;
        long den = 1 + static_cast<long>(rng() % 4);
        if (num != 0) p.set(e, p.coeff(e) + rat(num, den));
    }
    return p;
}
} // namespace

TEST_CASE("rational strings", "[ring]") {
    CHECK(rational_to_string(rat(-3, 4)) == "-3/4");
    CHECK(rational_to_string(rat(5)) == "5/1");
    CHECK(rational_from_string("6/8") == rat(3, 4));
    CHECK(rational_from_string("7") == rat(7));
    CHECK_THROWS_AS(rational_from_string("x"), argument_error);
    CHECK_THROWS_AS(rational_from_string("1/0"), argument_error);
    CHECK(pow_rational(rat(2, 3), -2) == rat(9, 4));
}

TEST_CASE("sinh factors", "[ring]") {
    CHECK(sinh_factor(1) == SPoly::monomial(1, 1) + SPoly::monomial(-1, -1));
    CHECK(sinh_factor(3).coeff(3) == 1);
    CHECK(sinh_factor(3).coeff(-3) == -1);
    CHECK_THROWS_AS(sinh_factor(0), argument_error);

    // product over hooks of (2,1): (s^3 - s^-3)(s - s^-1)^2
    SPoly prod = sinh_factor(3) * sinh_factor(1) * sinh_factor(1);
    CHECK(prod.coeff(5) == 1);
    CHECK(prod.coeff(3) == -2);
    CHECK(prod.coeff(1) == 1);
    CHECK(prod.coeff(-1) == -1);
    CHECK(prod.coeff(-3) == 2);
    CHECK(prod.coeff(-5) == -1);

    // s -> s^{-1} negates every sinh factor
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + static_cast<int>(rng() % 4);
        SPoly f(Rational(1));
        for (int i = 0; i < m; ++i) f *= sinh_factor(1 + static_cast<int>(rng() % 5));
        SPoly flipped = f.invert_s();
        CHECK(flipped == (m % 2 == 0 ? f : -f));
    }
}

TEST_CASE("u-expansion", "[ring]") {
    USeries u = to_u_series(sinh_factor(1), 5);
    CHECK(u.coeff(1) == 1);
    CHECK(u.coeff(2) == 0);
    CHECK(u.coeff(3) == rat(1, 24));
    CHECK(u.coeff(5) == rat(1, 1920));
    CHECK(to_u_series(SPoly(Rational(1)), 3).coeff(0) == 1);

    // homomorphism: expand(a*b) = expand(a)*expand(b) on the common window
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        SPoly a = random_spoly(rng), b = random_spoly(rng);
        USeries lhs = to_u_series(a * b, 12);
        USeries rhs = to_u_series(a, 12) * to_u_series(b, 12);
        CHECK(USeries::equal_on(lhs, rhs, 0, 10));
    }

    // (s-s^-1)(s+s^-1) = s^2 - s^-2 expands to the k=2 sinh series
    SPoly s2 = sinh_factor(1) * (SPoly::monomial(1, 1) + SPoly::monomial(-1, 1));
    CHECK(s2 == sinh_factor(2));
    CHECK(to_u_series(s2, 7).coeff(1) == 2);
    CHECK(to_u_series(s2, 7).coeff(3) == rat(8, 24));
}

TEST_CASE("series inversion", "[ring]") {
    USeries x = to_u_series(sinh_factor(1), 12);
    USeries y = invert_u(x);
    CHECK(y.lo() == -1);
    CHECK(y.coeff(-1) == 1);
    CHECK(y.coeff(1) == rat(-1, 24));
    CHECK(y.coeff(3) == rat(7, 5760));
    USeries prod = x * y;
    CHECK(USeries::equal_on(prod, USeries::monomial(0, 1), -1, 8));

    USeries one = USeries::monomial(0, 1, 20);
    CHECK(USeries::equal_on(invert_u(one), one, 0, 10));

    USeries x2 = to_u_series(sinh_factor(2), 12);
    USeries y2 = invert_u(x2);
    CHECK(y2.coeff(-1) == rat(1, 2));
    CHECK(USeries::equal_on(x2 * y2, one, -1, 8));

    CHECK_THROWS_AS(invert_u(USeries::zero()), argument_error);
}

TEST_CASE("truncation windows", "[ring]") {
    USeries x = to_u_series(sinh_factor(1), 6); // valid below 7
    CHECK(x.covers(6));
    CHECK(!x.covers(7));
    CHECK_THROWS_AS(x.coeff(7), truncation_error);
    CHECK_THROWS_AS(USeries::equal_on(x, x, 0, 7), truncation_error);
    USeries inv = x.inverse(); // valid below 5
    CHECK(inv.covers(4));
    CHECK(!inv.covers(5));
    // u -> -u flips the odd part
    USeries neg = x.negate_u();
    CHECK(neg.coeff(1) == -1);
    CHECK(neg.coeff(3) == rat(-1, 24));
}

TEST_CASE("scalar t-Laurent arithmetic", "[ring]") {
    Scalar a = Scalar::t_monomial(2, SCoeff(sinh_factor(1)));
    Scalar b = Scalar::t_monomial(-1, SCoeff(Rational(3)));
    Scalar p = a * b;
    CHECK(p.is_t_monomial());
    CHECK(p.t_exponent() == 1);
    CHECK(p.coeff(1).poly() == sinh_factor(1) * Rational(3));
    CHECK((a + Scalar()) == a);
    CHECK((a - a).is_zero());
    CHECK_THROWS_AS((a + b).t_exponent(), argument_error);

    // mixed exact/expanded comparison
    Scalar exact = Scalar::t_monomial(0, SCoeff(sinh_factor(2)));
    Scalar expanded = exact.expanded_view(16);
    CHECK(exact == expanded);
    CHECK(exact * expanded == exact * exact);

    // flip s -> s^{-1}
    CHECK(exact.flip_su() == Scalar::t_monomial(0, SCoeff(-sinh_factor(2))));
}

TEST_CASE("q-series exp and log", "[ring]") {
    QSeries zero(6, 0);
    CHECK(exp_q(zero).constant_term() == 1);
    CHECK(exp_q(zero).terms().empty());

    QSeries q(8, 0);
    q.set_coeff(1, Scalar(Rational(1)));
    QSeries e = exp_q(q);
    for (int d = 1; d <= 8; ++d)
        CHECK(e.coeff(d) == Scalar(rat(Int(1), factorial(d))));
    QSeries l = log_q(e);
    CHECK(l == q);

    CHECK_THROWS_AS(exp_q(e), argument_error);
    CHECK_THROWS_AS(log_q(q), argument_error);

    // roundtrip with u-series coefficients, including q * u^{-1}
    QSeries f(5, 0);
    f.set_coeff(1, Scalar::t_monomial(0, SCoeff(invert_u(to_u_series(sinh_factor(1), 20)))));
    f.set_coeff(2, Scalar::t_monomial(0, SCoeff(to_u_series(sinh_factor(3), 20))));
    CHECK(log_q(exp_q(f)) == f);

    // random rational roundtrips
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        QSeries g(6, 0);
        for (int d = 1; d <= 6; ++d) {
            long num = static_cast<long>(rng() % 11) - 5;
            long den = 1 + static_cast<long>(rng() % 5);
            g.set_coeff(d, Scalar(rat(num, den)));
        }
        CHECK(log_q(exp_q(g)) == g);
    }
}
