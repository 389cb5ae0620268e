#pragma once

// JSON wire formats. Everything is exact: rationals are strings "num/den",
// exponents are decimal integer keys (possibly negative).
//   SPoly    {"s": {"<exp>": "num/den", ...}}
//   USeries  {"u_min": int, "coeffs": ["num/den", ...], "u_valid": int}
//   Scalar   {"t": {"<exp>": SPoly-or-USeries, ...}}
//   QSeries  {"qmax": int, "constant": "num/den", "q": {"<deg>": Scalar, ...}}

#include <json.hpp>

#include "rgw/qseries.hpp"
#include "rgw/scalar.hpp"

namespace rgw {

using Json = nlohmann::json;

inline Json to_json(const SPoly& p) {
    Json s = Json::object();
    for (const auto& [e, c] : p.coeffs()) s[std::to_string(e)] = rational_to_string(c);
    return Json{{"s", s}};
}

inline SPoly spoly_from_json(const Json& j) {
    SPoly p;
    for (const auto& [k, v] : j.at("s").items())
        p.set(std::stoi(k), rational_from_string(v.get<std::string>()));
    return p;
}

inline Json to_json(const USeries& u) {
    Json out;
    out["u_min"] = u.lo();
    out["u_valid"] = u.valid_to() >= kExactBound ? Json(nullptr) : Json(u.valid_to());
    Json coeffs = Json::array();
    for (int e = u.lo(); e < u.stored_hi(); ++e)
        coeffs.push_back(rational_to_string(u.coeff(e)));
    out["coeffs"] = coeffs;
    return out;
}

inline USeries useries_from_json(const Json& j) {
    int lo = j.at("u_min").get<int>();
    int valid = j.at("u_valid").is_null() ? kExactBound : j.at("u_valid").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coeffs")) coeffs.push_back(rational_from_string(c.get<std::string>()));
    return USeries::from_coeffs(lo, std::move(coeffs), valid);
}

inline Json to_json(const SCoeff& c) {
    return c.expanded() ? to_json(c.series()) : to_json(c.poly());
}

inline SCoeff scoeff_from_json(const Json& j) {
    if (j.contains("s")) return SCoeff(spoly_from_json(j));
    return SCoeff(useries_from_json(j));
}

inline Json to_json(const Scalar& s) {
    Json t = Json::object();
    for (const auto& [e, c] : s.coeffs()) t[std::to_string(e)] = to_json(c);
    return Json{{"t", t}};
}

inline Scalar scalar_from_json(const Json& j) {
    Scalar s;
    for (const auto& [k, v] : j.at("t").items())
        s += Scalar::t_monomial(std::stoi(k), scoeff_from_json(v));
    return s;
}

inline Json to_json(const QSeries& q) {
    Json terms = Json::object();
    for (const auto& [d, s] : q.terms()) terms[std::to_string(d)] = to_json(s);
    return Json{{"qmax", q.dmax()},
                {"constant", rational_to_string(q.constant_term())},
                {"q", terms}};
}

inline QSeries qseries_from_json(const Json& j) {
    QSeries q(j.at("qmax").get<int>(), rational_from_string(j.at("constant").get<std::string>()));
    for (const auto& [k, v] : j.at("q").items()) q.set_coeff(std::stoi(k), scalar_from_json(v));
    return q;
}

} // namespace rgw
