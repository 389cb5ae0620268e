#pragma once

// JSON form of BPS tables:
//   {"genus": g, "side": "real"|"complex",
//    "entries": [{"d": int, "h": int, "n": "num/den"}, ...],
//    "report": {...failure lists..., "max_h": {"<d>": int}}}

#include "rgw/gv.hpp"
#include "rgw/json_io.hpp"

namespace rgw {

inline Json to_json(const BpsTable& t) {
    Json entries = Json::array();
    for (const auto& [dh, n] : t.entries)
        entries.push_back({{"d", dh.first}, {"h", dh.second}, {"n", rational_to_string(n)}});
    Json max_h = Json::object();
    for (const auto& [d, h] : t.report.max_h) max_h[std::to_string(d)] = h;
    return Json{{"genus", t.genus},
                {"side", t.real_side ? "real" : "complex"},
                {"entries", entries},
                {"report",
                 {{"integrality_failures", t.report.integrality_failures},
                  {"parity_failures", t.report.parity_failures},
                  {"vanishing_failures", t.report.vanishing_failures},
                  {"support_failures", t.report.support_failures},
                  {"max_h", max_h}}}};
}

inline BpsTable bps_from_json(const Json& j) {
    BpsTable t;
    t.genus = j.at("genus").get<int>();
    t.real_side = j.at("side").get<std::string>() == "real";
    for (const auto& e : j.at("entries"))
        t.set(e.at("d").get<int>(), e.at("h").get<int>(),
              rational_from_string(e.at("n").get<std::string>()));
    const Json& rep = j.at("report");
    t.report.integrality_failures = rep.at("integrality_failures").get<std::vector<std::string>>();
    t.report.parity_failures = rep.at("parity_failures").get<std::vector<std::string>>();
    t.report.vanishing_failures = rep.at("vanishing_failures").get<std::vector<std::string>>();
    t.report.support_failures = rep.at("support_failures").get<std::vector<std::string>>();
    t.report.max_h.clear();
    for (const auto& [k, v] : rep.at("max_h").items())
        t.report.max_h[std::stoi(k)] = v.get<int>();
    return t;
}

} // namespace rgw
