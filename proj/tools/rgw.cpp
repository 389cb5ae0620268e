// Command-line front end: exact local RGW invariants, BPS extraction,
// verification suites, cobordism-expression evaluation and character tables.
//
// Exit codes: 0 success, 2 verification failure, 3 argument error,
// 4 truncation insufficient.

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>

#include "rgw/bps_json.hpp"
#include "rgw/cache.hpp"
#include "rgw/dsl.hpp"
#include "rgw/gv.hpp"
#include "rgw/json_io.hpp"
#include "rgw/verify.hpp"

namespace {

using namespace rgw;

struct GlobalOpts {
    std::string cache_dir;
    bool no_cache = false;
    int max_d = kDefaultMaxDegree;

    std::filesystem::path dir() const {
        return cache_dir.empty() ? default_cache_dir() : std::filesystem::path(cache_dir);
    }
    ContextBank bank() const {
        if (no_cache) return ContextBank({}, max_d);
        auto dir_path = dir();
        int maxd = max_d;
        return ContextBank(
            [dir_path, maxd](int d) { return cached_character_table(d, dir_path, maxd); },
            max_d);
    }
};

std::vector<Partition> parse_boundary(const std::string& spec) {
    std::vector<Partition> out;
    std::stringstream ss(spec);
    std::string profile;
    while (std::getline(ss, profile, ';')) {
        std::vector<int> parts;
        std::stringstream ps(profile);
        std::string tok;
        while (std::getline(ps, tok, ','))
            if (!tok.empty()) parts.push_back(std::stoi(tok));
        if (parts.empty()) throw argument_error("empty boundary profile in '" + spec + "'");
        out.emplace_back(std::move(parts));
    }
    if (out.empty()) throw argument_error("no boundary profiles in '" + spec + "'");
    return out;
}

int run_invariant(GlobalOpts& gopts, int d, int genus, int level,
                  std::optional<int> level2, const std::string& boundary, int uorder,
                  bool flip, const std::string& format) {
    ContextBank bank = gopts.bank();
    const DegreeContext& ctx = bank.get(d);
    Json meta{{"d", d}, {"genus", genus}, {"level", level}};
    if (level2) {
        Scalar v = doublet_invariant(ctx, genus, level, *level2, uorder, flip);
        meta["level2"] = *level2;
        Json out{{"kind", "doublet"}, {"meta", meta}, {"invariant", to_json(v)}};
        std::cout << (format == "table" ? "doublet = " + v.to_string() + "\n"
                                        : out.dump(2) + "\n");
        return 0;
    }
    if (!boundary.empty()) {
        auto profiles = parse_boundary(boundary);
        Scalar v = relative_invariant(ctx, genus, level, profiles, uorder, flip);
        Json bnd = Json::array();
        for (const auto& p : profiles) bnd.push_back(p.parts());
        meta["boundary"] = bnd;
        Json out{{"kind", "relative"}, {"meta", meta}, {"invariant", to_json(v)}};
        std::cout << (format == "table" ? "relative = " + v.to_string() + "\n"
                                        : out.dump(2) + "\n");
        return 0;
    }
    Scalar formula = closed_invariant(ctx, genus, level, uorder, flip);
    Scalar composed = closed_invariant_by_composition(ctx, genus, level, uorder, flip);
    bool equal = (formula == composed);
    Json out{{"kind", "closed"},
             {"meta", meta},
             {"invariant", to_json(formula)},
             {"routes",
              {{"formula", to_json(formula)},
               {"composition", to_json(composed)},
               {"equal", equal}}}};
    if (format == "table")
        std::cout << "RGW_" << d << "(" << genus << "|" << level << ") = "
                  << formula.to_string() << "\n"
                  << "routes equal: " << (equal ? "yes" : "no") << "\n";
    else
        std::cout << out.dump(2) << "\n";
    if (!equal) {
        std::cerr << "error: formula and composition routes disagree\n";
        return 2;
    }
    return 0;
}

int run_gv(GlobalOpts& gopts, int genus, int dmax, int hmax, int uorder,
           const std::string& format) {
    ContextBank bank = gopts.bank();
    GvConfig cfg;
    cfg.genus = genus;
    cfg.dmax = dmax;
    cfg.hmax = hmax;
    cfg.uorder = uorder;
    cfg.maxd = gopts.max_d;
    GvReport rep = gv_verify(bank, cfg);
    if (format == "table") {
        std::cout << "real BPS states n_{d,h}(" << genus << "):\n";
        for (const auto& [dh, n] : rep.real_table.entries)
            std::cout << "  d=" << dh.first << " h=" << dh.second << "  n=" << n.get_str()
                      << "\n";
        std::cout << "complex BPS states:\n";
        for (const auto& [dh, n] : rep.complex_table.entries)
            std::cout << "  d=" << dh.first << " h=" << dh.second << "  n=" << n.get_str()
                      << "\n";
    } else {
        Json out{{"real", to_json(rep.real_table)},
                 {"complex", to_json(rep.complex_table)},
                 {"resynthesis_ok", rep.resynthesis_ok},
                 {"failures", rep.failures},
                 {"pass", rep.pass()}};
        std::cout << out.dump(2) << "\n";
    }
    std::cout << (rep.pass() ? "PASS" : "FAIL") << ": integrality, parity, vanishing, "
              << "support and re-synthesis\n";
    for (const auto& f : rep.failures) std::cerr << "  " << f << "\n";
    return rep.pass() ? 0 : 2;
}

int run_verify(GlobalOpts& gopts, const std::string& suite, int d, int dmax, int genus,
               int level, int count, std::uint64_t seed, int uorder) {
    ContextBank bank = gopts.bank();
    VerifyResult result;
    if (suite == "klein-axioms") {
        result = klein_axioms_suite(bank.get(d), /*frobenius_max_d=*/6, uorder);
    } else if (suite == "splitting") {
        result = splitting_suite(bank.get(d), genus, level, uorder);
    } else if (suite == "sfs") {
        result = sfs_suite(bank.get(d).chi, /*element_mode=*/d <= 7);
    } else if (suite == "r-alpha") {
        result = r_alpha_suite(d, gopts.max_d);
    } else if (suite == "sphere-cy") {
        int window = 20;
        result = sphere_cy_suite(bank, dmax, window, std::max(uorder, window + 2 * dmax + 6));
    } else if (suite == "torus") {
        result = torus_suite(bank, dmax);
    } else if (suite == "functoriality") {
        result = functoriality_suite(bank.get(d), count, seed, uorder);
    } else {
        throw argument_error("unknown suite '" + suite + "'");
    }
    for (const auto& c : result)
        std::cout << (c.pass ? "  ok  " : " FAIL ") << c.name
                  << (c.detail.empty() || c.pass ? "" : "  [" + c.detail + "]") << "\n";
    bool pass = all_pass(result);
    std::cout << (pass ? "PASS" : "FAIL") << " (" << result.size() << " cases)\n";
    return pass ? 0 : 2;
}

int run_eval(GlobalOpts& gopts, const std::string& expr_text, int d, int uorder,
             const std::string& format) {
    ContextBank bank = gopts.bank();
    const DegreeContext& ctx = bank.get(d);
    ExprPtr e = parse(expr_text);
    Arity ar = typecheck(e);
    TqftOperator op = evaluate(e, ctx, uorder);
    if (ar.n_in == 0 && ar.n_out == 0) {
        Scalar v = operator_scalar(op);
        if (format == "table")
            std::cout << print(e) << " = " << v.to_string() << "\n";
        else
            std::cout << Json{{"expr", print(e)},
                              {"arity", {ar.n_in, ar.n_out}},
                              {"value", to_json(v)}}
                             .dump(2)
                      << "\n";
        return 0;
    }
    TqftOperator std_op = operator_to_basis(ctx, op, Basis::Standard);
    Json entries = Json::array();
    for (const auto& [key, s] : std_op.entries) {
        Json in = Json::array(), out_t = Json::array();
        for (int i : key.first) in.push_back(ctx.cls(i).parts());
        for (int i : key.second) out_t.push_back(ctx.cls(i).parts());
        entries.push_back({{"in", in}, {"out", out_t}, {"coeff", to_json(s)}});
    }
    if (format == "table") {
        std::cout << print(e) << " : " << ar.n_in << " -> " << ar.n_out << "\n";
        for (const auto& [key, s] : std_op.entries) {
            std::cout << "  [";
            for (int i : key.first) std::cout << ctx.cls(i).to_string();
            std::cout << " -> ";
            for (int i : key.second) std::cout << ctx.cls(i).to_string();
            std::cout << "]  " << s.to_string() << "\n";
        }
    } else {
        std::cout << Json{{"expr", print(e)},
                          {"arity", {ar.n_in, ar.n_out}},
                          {"basis", "standard"},
                          {"entries", entries}}
                         .dump(2)
                  << "\n";
    }
    return 0;
}

int run_chars(GlobalOpts& gopts, int d, bool refresh, const std::string& format) {
    CharacterTable t;
    if (gopts.no_cache) {
        t = character_table(d, gopts.max_d);
    } else {
        auto file = cache_file_for(d, gopts.dir());
        if (refresh) std::filesystem::remove(file);
        t = cached_character_table(d, gopts.dir(), gopts.max_d);
    }
    if (format == "table") {
        std::cout << "chi_rho(alpha), d=" << d << "; rows/cols in canonical order\n";
        for (size_t r = 0; r < t.classes.size(); ++r) {
            std::cout << t.classes[r].to_string() << ":";
            for (size_t a = 0; a < t.classes.size(); ++a)
                std::cout << " " << t.values[r][a].get_str();
            std::cout << "\n";
        }
    } else {
        std::cout << character_table_to_json(t).dump(2) << "\n";
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Klein-TQFT engine for local real Gromov-Witten invariants"};
    app.require_subcommand(1);
    app.fallthrough(); // global options are accepted after the subcommand too

    GlobalOpts gopts;
    app.add_option("--cache-dir", gopts.cache_dir,
                   "character table cache directory (default: $" +
                       std::string(rgw::kCacheDirEnvVar) + " or the user cache dir)");
    app.add_flag("--no-cache", gopts.no_cache, "compute tables without touching the disk");
    app.add_option("--max-d", gopts.max_d, "largest admissible degree")
        ->default_val(rgw::kDefaultMaxDegree);

    int d = 3, genus = 0, level = 0, uorder = rgw::kDefaultUOrder;
    int dmax = 8, hmax = -1, count = 200;
    std::optional<int> level2;
    bool doublet = false, flip = false, refresh = false;
    std::uint64_t seed = 20240915;
    std::string boundary, format = "json", suite, expr_text;

    auto* inv = app.add_subcommand("invariant", "closed / relative / doublet invariants");
    inv->add_option("--d", d, "degree")->required();
    inv->add_option("--genus", genus, "genus")->required();
    inv->add_option("--level", level, "level k = c1(L)")->required();
    inv->add_option("--level2", level2, "second level (doublet)");
    inv->add_flag("--doublet", doublet, "doublet invariant (needs --level2)");
    inv->add_option("--boundary", boundary,
                    "relative boundary profiles, e.g. \"2,1;1,1,1\"");
    inv->add_option("--u-order", uorder, "u-series truncation order");
    inv->add_flag("--flip-orientation", flip,
                  "multiply degree-d outputs by (-1)^d (orientation comparison)");
    inv->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* gv = app.add_subcommand("gv", "BPS extraction and GV verification");
    gv->add_option("--genus", genus, "genus")->required();
    gv->add_option("--dmax", dmax, "q-truncation")->required();
    gv->add_option("--hmax", hmax, "largest admissible h (-1: automatic bound)");
    gv->add_option("--u-order", uorder, "u-series order (-1: automatic)")->default_val(-1);
    gv->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* ver = app.add_subcommand("verify", "axiom / identity suites");
    ver->add_option("--suite", suite, "one of: klein-axioms, splitting, sfs, r-alpha, "
                                      "sphere-cy, torus, functoriality")
        ->required();
    ver->add_option("--d", d, "degree");
    ver->add_option("--dmax", dmax, "q-truncation for series suites")->default_val(8);
    ver->add_option("--genus", genus, "genus (splitting)");
    ver->add_option("--level", level, "level (splitting)");
    ver->add_option("--count", count, "fuzz case count");
    ver->add_option("--seed", seed, "fuzz seed");
    ver->add_option("--u-order", uorder, "u-series truncation order");

    auto* ev = app.add_subcommand("eval", "evaluate a cobordism expression");
    ev->add_option("--expr", expr_text, "expression, e.g. \"cup . K . xcap\"")->required();
    ev->add_option("--d", d, "degree")->required();
    ev->add_option("--u-order", uorder, "u-series truncation order");
    ev->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    auto* ch = app.add_subcommand("chars", "character table of S_d");
    ch->add_option("--d", d, "degree")->required();
    ch->add_flag("--refresh", refresh, "recompute and overwrite the cache entry");
    ch->add_option("--format", format)->check(CLI::IsMember({"json", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 3;
    }

    try {
        if (inv->parsed()) {
            if (doublet && !level2)
                throw rgw::argument_error("--doublet requires --level2");
            return run_invariant(gopts, d, genus, level, doublet ? level2 : std::nullopt,
                                 boundary, uorder, flip, format);
        }
        if (gv->parsed()) return run_gv(gopts, genus, dmax, hmax, uorder, format);
        if (ver->parsed())
            return run_verify(gopts, suite, d, dmax, genus, level, count, seed, uorder);
        if (ev->parsed()) return run_eval(gopts, expr_text, d, uorder, format);
        if (ch->parsed()) return run_chars(gopts, d, refresh, format);
    } catch (const rgw::argument_error& e) {
        std::cerr << "argument error: " << e.what() << "\n";
        return 3;
    } catch (const rgw::truncation_error& e) {
        std::cerr << "truncation error: " << e.what() << "\n";
        return 4;
    } catch (const rgw::verification_error& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 3;
}
