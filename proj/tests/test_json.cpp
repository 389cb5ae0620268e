#include <catch2/catch_amalgamated.hpp>

#include "rgw/bps_json.hpp"
#include "rgw/json_io.hpp"

using namespace rgw;

TEST_CASE("spoly round trip", "[json]") {
    SPoly p = sinh_factor(3) * sinh_factor(1) * rat(-5, 6);
    Json j = to_json(p);
    CHECK(spoly_from_json(j) == p);
    CHECK(spoly_from_json(to_json(SPoly())).is_zero());
    CHECK(j.contains("s"));
}

TEST_CASE("useries round trip", "[json]") {
    USeries u = invert_u(to_u_series(sinh_factor(2), 14));
    Json j = to_json(u);
    USeries back = useries_from_json(j);
    CHECK(back.lo() == u.lo());
    CHECK(back.valid_to() == u.valid_to());
    CHECK(USeries::equal_on(u, back, u.lo(), u.valid_to() - 1));

    USeries z = USeries::zero();
    CHECK(useries_from_json(to_json(z)).is_zero());
    CHECK(useries_from_json(to_json(z)).valid_to() == z.valid_to());
}

TEST_CASE("scalar round trip in both views", "[json]") {
    Scalar exact = Scalar::t_monomial(2, SCoeff(sinh_factor(1))) +
                   Scalar::t_monomial(-1, SCoeff(rat(3, 7)));
    CHECK(scalar_from_json(to_json(exact)) == exact);

    Scalar expanded = exact.expanded_view(12);
    Scalar back = scalar_from_json(to_json(expanded));
    CHECK(back == expanded);
    CHECK(back.coeff(2).expanded());

    CHECK(scalar_from_json(to_json(Scalar())).is_zero());
}

TEST_CASE("qseries round trip", "[json]") {
    QSeries q(5, 1);
    q.set_coeff(1, Scalar::t_monomial(0, SCoeff(sinh_factor(1))));
    q.set_coeff(4, Scalar(rat(-2, 9)));
    QSeries back = qseries_from_json(to_json(q));
    CHECK(back == q);
    CHECK(back.dmax() == q.dmax());
    CHECK(back.constant_term() == q.constant_term());
}

TEST_CASE("bps table round trip", "[json]") {
    BpsTable t;
    t.genus = 2;
    t.real_side = true;
    t.set(1, 2, 1);
    t.set(3, 4, -3);
    t.report.integrality_failures.push_back("n(d=9,h=9) = 1/2");
    BpsTable back = bps_from_json(to_json(t));
    CHECK(back.genus == 2);
    CHECK(back.real_side);
    CHECK(back.entries == t.entries);
    CHECK(back.report.integrality_failures == t.report.integrality_failures);
    CHECK(back.report.max_h == t.report.max_h);
    Json j = to_json(t);
    CHECK(to_json(back) == j);
}

TEST_CASE("malformed input", "[json]") {
    CHECK_THROWS_AS(spoly_from_json(Json{{"s", {{"2", "1/0"}}}}), argument_error);
    CHECK_THROWS_AS(scalar_from_json(Json{{"t", {{"0", {{"s", {{"1", "zz"}}}}}}}}),
                    argument_error);
}
