#pragma once

// On-disk cache for character tables: one JSON document per degree, keyed by
// d and a format version. Recomputing d = 12 is cheap; caching keeps CLI
// latency flat across invocations.

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "rgw/characters.hpp"
#include "rgw/json_io.hpp"

namespace rgw {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCacheDirEnvVar = "RGW_CACHE_DIR";

inline std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv(kCacheDirEnvVar); env && *env)
        return std::filesystem::path(env);
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg)
        return std::filesystem::path(xdg) / "rgw-tqft";
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "rgw-tqft";
    return std::filesystem::temp_directory_path() / "rgw-tqft";
}

inline std::filesystem::path cache_file_for(int d, const std::filesystem::path& dir) {
    return dir / ("chars-d" + std::to_string(d) + "-v" +
                  std::to_string(kCacheFormatVersion) + ".json");
}

inline Json character_table_to_json(const CharacterTable& t) {
    Json classes = Json::array();
    for (const auto& c : t.classes) classes.push_back(c.parts());
    Json values = Json::array();
    for (const auto& row : t.values) {
        Json r = Json::array();
        for (const auto& v : row) r.push_back(v.get_str());
        values.push_back(std::move(r));
    }
    Json dims = Json::array();
    for (const auto& v : t.dims) dims.push_back(v.get_str());
    return Json{{"format_version", kCacheFormatVersion},
                {"d", t.d},
                {"classes", classes},
                {"dims", dims},
                {"values", values}};
}

inline CharacterTable character_table_from_json(const Json& j) {
    if (j.at("format_version").get<int>() != kCacheFormatVersion)
        throw argument_error("character table cache: format version mismatch");
    CharacterTable t;
    t.d = j.at("d").get<int>();
    for (const auto& c : j.at("classes"))
        t.classes.emplace_back(c.get<std::vector<int>>());
    for (const auto& row : j.at("values")) {
        std::vector<Int> r;
        for (const auto& v : row) r.emplace_back(v.get<std::string>());
        t.values.push_back(std::move(r));
    }
    for (const auto& v : j.at("dims")) t.dims.emplace_back(v.get<std::string>());
    return t;
}

// Loads the table for degree d from the cache, computing and persisting it on
// a miss. A corrupt cache file is recomputed and overwritten.
inline CharacterTable cached_character_table(int d, const std::filesystem::path& dir,
                                             int maxd = kDefaultMaxDegree) {
    check_degree(d, maxd);
    auto file = cache_file_for(d, dir);
    if (std::filesystem::exists(file)) {
        try {
            std::ifstream in(file);
            Json j = Json::parse(in);
            return character_table_from_json(j);
        } catch (...) {
            // fall through to recompute
        }
    }
    CharacterTable t = character_table(d, maxd);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (!ec) {
        std::ofstream out(file);
        out << character_table_to_json(t).dump();
    }
    return t;
}

} // namespace rgw
