#pragma once

#include "svoa/classifier.hpp"
#include "svoa/finite_invariants.hpp"
#include "svoa/tau_lab.hpp"

#include <cmath>
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace svoa::cli {

inline constexpr const char* engine_version = "1.0.0";

enum ExitCode : int { ok = 0, usage_error = 1, mismatch = 2 };

using nlohmann::json;

struct OutputRecord {
    std::string command;
    json parameters = json::object();
    json result = json::object();
    std::optional<std::uint64_t> seed;

    json to_json() const
    {
        json j{{"command", command}, {"parameters", parameters}, {"result", result}, {"engine_version", engine_version}};
        if (seed)
            j["seed"] = *seed;
        return j;
    }
};

// ---------------------------------------------------------------- serialisation helpers

inline std::string rat(const Rational& r) { return r.pq(); }

inline json candidate_json(const Candidate& c)
{
    json status = json::object();
    for (const auto& [k, s] : c.status)
        status[k] = s.reason.empty() ? json(s.pass) : json{{"pass", s.pass}, {"reason", s.reason}};
    return json{{"name", c.name()}, {"current", c.current_name()}, {"h", rat(c.h)}, {"dim", c.dim32},
                {"c", rat(c.c)}, {"status", status}, {"notes", c.notes}};
}

inline json family_json(const FamilyReport& f, std::size_t shown)
{
    json inst = json::array();
    for (std::size_t i = 0; i < f.instances.size() && i < shown; ++i) {
        const auto& [m, c] = f.instances[i];
        json row = candidate_json(c);
        row["m"] = m;
        inst.push_back(row);
    }
    std::vector<int> ms;
    for (const auto& [m, c] : f.instances)
        ms.push_back(m);
    return json{{"kind", "family"}, {"name", f.name}, {"dim", f.dim_formula}, {"c", f.c_formula},
                {"h", "3/2"}, {"instance_count", f.instances.size()}, {"m_values", ms}, {"instances", inst}};
}

// TSV: optional "# key\tvalue" summary lines, then a header of the union of
// row keys (sorted) and one line per row. Non-scalars are compact JSON.
inline void write_tsv(std::ostream& os, const OutputRecord& rec)
{
    auto cell = [](const json& v) -> std::string {
        if (v.is_string())
            return v.get<std::string>();
        return v.dump();
    };
    os << "# command\t" << rec.command << "\n";
    os << "# engine_version\t" << engine_version << "\n";
    if (rec.seed)
        os << "# seed\t" << *rec.seed << "\n";
    for (const auto& [k, v] : rec.parameters.items())
        os << "# parameter." << k << "\t" << cell(v) << "\n";
    for (const auto& [k, v] : rec.result.items())
        if (k != "rows")
            os << "# " << k << "\t" << cell(v) << "\n";
    if (!rec.result.contains("rows"))
        return;
    std::set<std::string> cols;
    for (const auto& row : rec.result["rows"])
        for (const auto& [k, v] : row.items())
            cols.insert(k);
    bool first = true;
    for (const auto& c : cols) {
        os << (first ? "" : "\t") << c;
        first = false;
    }
    os << "\n";
    for (const auto& row : rec.result["rows"]) {
        first = true;
        for (const auto& c : cols) {
            os << (first ? "" : "\t") << (row.contains(c) ? cell(row[c]) : "");
            first = false;
        }
        os << "\n";
    }
}

// ---------------------------------------------------------------- commands

inline OutputRecord cmd_anyons(const std::string& type, int rank, int level)
{
    LieType t = parse_type(type, rank);
    if (rank == 0 && is_exceptional(t))
        rank = fixed_rank(t);
    if (!valid_rank(t, rank))
        throw std::invalid_argument("invalid rank " + std::to_string(rank) + " for type " + type);
    if (level < 1)
        throw std::invalid_argument("level must be positive");
    OutputRecord rec;
    rec.command = "anyons";
    rec.parameters = {{"type", type_name(t)}, {"rank", rank}, {"level", level}};
    WZWFactor f{t, rank, level};
    auto rs = f.root_system();
    json rows = json::array();
    for (const auto& a : center_elements(rs)) {
        FactorCurrent cur{f, a.index, false};
        IVec w = cur.weight();
        // cyclic subgroup generated by the current
        std::vector<CurrentLabel> sub{CurrentLabel{{FactorCurrent{f, 0, false}}}};
        CurrentLabel x{{cur}};
        while (!(x == sub.front())) {
            sub.push_back(x);
            x = add_currents(x, CurrentLabel{{cur}});
        }
        json row{{"label", a.label()}, {"order", a.order()}, {"node", a.node()}, {"weight", w},
                 {"dim", weyl_dim(*rs, w)}, {"h", rat(conformal_dim_of_weight(*rs, w, level))},
                 {"q", rat(conformal_dim_of_weight(*rs, w, level).mod1())},
                 {"admissible", extension_admissible(sub)}};
        if (!a.trivial() && rs->center.size() > 1)
            row["h_closed_form"] = rat(closed_form_dim(a, level));
        rows.push_back(row);
    }
    rec.result = {{"factor", factor_name(f)}, {"c", rat(sugawara_c(f))}, {"rows", rows}};
    return rec;
}

inline OutputRecord cmd_classify_simple(const Rational& h, int max_rank, int max_level, std::size_t shown)
{
    OutputRecord rec;
    rec.command = "classify simple";
    rec.parameters = {{"h", rat(h)}, {"max_rank", max_rank}, {"max_level", max_level}, {"instances_shown", shown}};
    auto res = enumerate_simple(h, max_rank, max_level);
    json rows = json::array();
    for (const auto& f : res.families)
        rows.push_back(family_json(f, shown));
    for (const auto& c : res.sporadic) {
        json row = candidate_json(c);
        row["kind"] = "sporadic";
        rows.push_back(row);
    }
    rec.result = {{"count", res.size()}, {"rows", rows}};
    return rec;
}

inline OutputRecord cmd_classify_semisimple(int max_factors, int max_rank, int depth, bool iso_rule, std::size_t shown)
{
    OutputRecord rec;
    rec.command = "classify semisimple";
    rec.parameters = {{"max_factors", max_factors}, {"max_rank", max_rank}, {"depth", depth},
                      {"isomorphic_rule", iso_rule}, {"instances_shown", shown}};
    auto res = enumerate_semisimple(max_factors, max_rank, depth, iso_rule);
    json rows = json::array();
    for (const auto& f : res.families)
        rows.push_back(family_json(f, shown));
    for (const auto& c : res.sporadic) {
        json row = candidate_json(c);
        row["kind"] = "sporadic";
        rows.push_back(row);
    }
    rec.result = {{"count", res.size()}, {"examined", res.examined}, {"rejected", res.rejected}, {"rows", rows}};
    return rec;
}

inline OutputRecord cmd_table(int verify_up_to)
{
    OutputRecord rec;
    rec.command = "table";
    rec.parameters = {{"verify_up_to", verify_up_to}};
    json rows = json::array();
    for (const auto& r : svoa_table(verify_up_to)) {
        json row{{"name", r.name}, {"dim", r.dim}, {"c", r.c}, {"automorphisms", r.automorphisms},
                 {"kind", r.family ? "family" : "sporadic"}};
        if (r.family)
            row["verified_m"] = r.verified_m;
        if (r.candidate)
            row["c"] = rat(r.candidate->c);
        rows.push_back(row);
    }
    rec.result = {{"count", rows.size()}, {"rows", rows}};
    return rec;
}

inline OutputRecord cmd_chart(const std::string& path)
{
    OutputRecord rec;
    rec.command = "chart";
    rec.parameters = {{"data", path}};
    auto rep = verify_inclusion_chart(load_embeddings(path));
    json rows = json::array();
    int failures = 0;
    for (const auto& e : rep.edges) {
        json dims = json::object();
        for (const auto& [d, m] : e.restricted_dims)
            dims[std::to_string(d)] = m;
        rows.push_back(json{{"name", e.name}, {"contains", e.contains}, {"expect_contains", e.expect_contains},
                            {"triality", e.triality}, {"index", e.index}, {"index_ok", e.index_ok},
                            {"level_ok", e.level_ok}, {"fixtures_ok", e.fixtures_ok}, {"ok", e.ok()},
                            {"source_dim", e.source_dim}, {"target_dim", e.target_dim}, {"restricted_dims", dims},
                            {"detail", e.detail}});
        failures += !e.ok();
    }
    rec.result = {{"ok", rep.ok()}, {"edges", rep.edges.size()}, {"failures", failures}, {"rows", rows}};
    return rec;
}

// 10 decimals keeps the golden output stable across libm differences
inline double rounded(double v)
{
    double r = std::round(v * 1e10) / 1e10;
    return r == 0 ? 0.0 : r;
}

inline OutputRecord cmd_maxima(int m, int starts, double tol, std::uint64_t seed)
{
    if (starts <= 0)
        starts = 200 * (m + 1);
    OutputRecord rec;
    rec.command = "maxima";
    rec.seed = seed;
    rec.parameters = {{"m", m}, {"starts", starts}, {"tol", tol}};
    auto rep = find_strong_maxima(m, starts, tol, seed);
    json rows = json::array();
    for (const auto& p : rep.maxima) {
        std::vector<double> x, ev;
        for (double v : p.x)
            x.push_back(rounded(v));
        for (double v : p.restricted_eigenvalues)
            ev.push_back(rounded(v));
        rows.push_back(json{{"x", x}, {"tau", rounded(p.tau)}, {"c1", rounded(p.c1)}, {"c2", rounded(p.c2)},
                            {"a", rounded(p.a)}, {"b", rounded(p.b)},
                            {"restricted_eigenvalues", ev}, {"hessian_positive", p.hessian_positive},
                            {"hessian_negative", p.hessian_negative}});
    }
    rec.result = {{"count", rep.maxima.size()}, {"converged", rep.converged}, {"nonconverged", rep.nonconverged},
                  {"critical_points", rep.critical_points}, {"rows", rows}};
    return rec;
}

inline OutputRecord cmd_invariants(const std::string& kind, int m, const std::string& group, bool oracle)
{
    OutputRecord rec;
    rec.command = "invariants";
    json row{{"m", m}};
    if (kind == "sym3") {
        if (group != "S" && group != "A")
            throw std::invalid_argument("group must be S or A");
        auto g = group == "S" ? PermGroupKind::Symmetric : PermGroupKind::Alternating;
        rec.parameters = {{"kind", kind}, {"m", m}, {"group", group}, {"oracle", oracle}};
        row["group"] = group + std::to_string(m + 1);
        row["dim"] = invariant_dim_sym3_standard(m, g);
        row["dim_degree1"] = invariant_dim_sym_standard(m, 1, g);
        if (oracle)
            row["oracle"] = invariant_dim_sym3_bruteforce(m, g);
    } else if (kind == "cube") {
        rec.parameters = {{"kind", kind}, {"m", m}, {"oracle", oracle}};
        auto st = invariant_dim_cube_stages(m);
        row["group"] = "2^" + std::to_string(2 * m) + ":(S3xS" + std::to_string(m) + ")";
        row["sign_fixed"] = st.sign_fixed;
        row["dim"] = st.invariants;
        row["kernel_trivial"] = cube_kernel_acts_trivially(m);
        if (oracle)
            row["oracle"] = invariant_dim_cube_bruteforce(m);
    } else {
        throw std::invalid_argument("kind must be sym3 or cube");
    }
    rec.result = {{"rows", json::array({row})}};
    return rec;
}

inline bool record_mismatch(const OutputRecord& rec)
{
    if (rec.command == "chart")
        return !rec.result.at("ok").get<bool>();
    if (rec.command == "invariants") {
        const auto& row = rec.result["rows"][0];
        if (row.contains("oracle") && row["oracle"] != row["dim"])
            return true;
        if (row.contains("kernel_trivial") && !row["kernel_trivial"].get<bool>())
            return true;
    }
    return false;
}

// ---------------------------------------------------------------- entry point

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr)
{
    CLI::App app{"Classification engine for N=1 SVOAs with simply connected WZW even part", "svoa"};
    app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with classify simple --h
    app.require_subcommand(1);
    app.fallthrough();  // lets --format follow the subcommand
    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "tsv"}));

    std::string type;
    int rank = 0, level = 1;
    auto* anyons = app.add_subcommand("anyons", "Simple currents of a WZW factor");
    anyons->add_option("--type", type, "Lie type (A, B, C, D, E6, E7, ...)")->required();
    anyons->add_option("--rank", rank, "Rank");
    anyons->add_option("--level", level, "Level")->required();

    auto* classify = app.add_subcommand("classify", "Classification runs");
    classify->require_subcommand(1);
    std::string h = "3/2";
    int max_rank = 64, max_level = 24, max_factors = 6, ss_max_rank = 24, depth = default_rr_depth;
    std::size_t shown = 8;
    bool iso_rule = false;
    auto* simple = classify->add_subcommand("simple", "Simple WZW algebras with an order-two current of weight h");
    simple->add_option("--h", h, "Target conformal dimension p/q");
    simple->add_option("--max-rank", max_rank, "Rank cap");
    simple->add_option("--max-level", max_level, "Level cap");
    simple->add_option("--instances", shown, "Family instances to print");
    auto* semi = classify->add_subcommand("semisimple", "Semisimple even parts");
    semi->add_option("--max-factors", max_factors, "Maximum number of factors");
    semi->add_option("--max-rank", ss_max_rank, "Total rank cap");
    semi->add_option("--depth", depth, "R-R series depth");
    semi->add_flag("--isomorphic-rule", iso_rule, "Also require isomorphic factors (Spin(16)_1 x Spin(8)_1 excepted)");
    semi->add_option("--instances", shown, "Family instances to print");

    int verify_up_to = 16;
    auto* table = app.add_subcommand("table", "Reproduce the table of SVOAs with dim, c and automorphism groups");
    table->add_option("--verify-up-to", verify_up_to, "Largest m for the family formula check");

    std::string data;
    auto* chart = app.add_subcommand("chart", "Verify the inclusion chart");
    chart->add_option("--data", data, "Embeddings JSON (default: $SVOA_EMBEDDINGS)");

    int m = 3, starts = 0;
    double tol = 1e-8;
    std::uint64_t seed = 0;
    auto* maxima = app.add_subcommand("maxima", "Strong maxima of sum x_i^3 on the constrained sphere");
    maxima->add_option("--m", m, "m")->required();
    maxima->add_option("--starts", starts, "Random starts (default 200(m+1))");
    maxima->add_option("--tol", tol, "Convergence tolerance");
    maxima->add_option("--seed", seed, "RNG seed");

    std::string kind, group = "S";
    bool oracle = false;
    auto* inv = app.add_subcommand("invariants", "Finite-group invariant counts");
    inv->add_option("--kind", kind, "sym3 or cube")->required()->check(CLI::IsMember({"sym3", "cube"}));
    inv->add_option("--m", m, "m")->required();
    inv->add_option("--group", group, "S or A (sym3 only)")->check(CLI::IsMember({"S", "A"}));
    inv->add_flag("--oracle", oracle, "Also run the brute-force oracle (m <= 6)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return usage_error;
    }

    OutputRecord rec;
    try {
        if (anyons->parsed())
            rec = cmd_anyons(type, rank, level);
        else if (simple->parsed())
            rec = cmd_classify_simple(Rational::parse(h), max_rank, max_level, shown);
        else if (semi->parsed())
            rec = cmd_classify_semisimple(max_factors, ss_max_rank, depth, iso_rule, shown);
        else if (table->parsed())
            rec = cmd_table(verify_up_to);
        else if (chart->parsed()) {
            if (data.empty())
                if (const char* env = std::getenv("SVOA_EMBEDDINGS"))
                    data = env;
            if (data.empty())
                throw std::invalid_argument("no embeddings file: pass --data or set SVOA_EMBEDDINGS");
            rec = cmd_chart(data);
        } else if (maxima->parsed())
            rec = cmd_maxima(m, starts, tol, seed);
        else if (inv->parsed())
            rec = cmd_invariants(kind, m, group, oracle);
    } catch (const std::logic_error& e) {
        err << "error: " << e.what() << "\n";
        return dynamic_cast<const std::invalid_argument*>(&e) || dynamic_cast<const std::out_of_range*>(&e)
                   ? usage_error
                   : mismatch;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }

    if (format == "tsv")
        write_tsv(out, rec);
    else
        out << rec.to_json().dump(2) << "\n";
    return record_mismatch(rec) ? mismatch : ok;
}

} // namespace svoa::cli
