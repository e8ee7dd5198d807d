#include "svoa/cli.hpp"

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(std::vector<std::string> args)
{
    args.insert(args.begin(), "svoa");
    std::vector<const char*> argv;
    for (const auto& a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = svoa::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json parse(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST_CASE("cli_anyons_d12_level2")
{
    auto r = run({"anyons", "--type", "D", "--rank", "12", "--level", "2"});
    REQUIRE(r.code == 0);
    auto j = parse(r);
    CHECK(j["command"] == "anyons");
    CHECK(j["engine_version"] == svoa::cli::engine_version);
    std::map<std::string, std::string> h;
    for (const auto& row : j["result"]["rows"])
        h[row["label"]] = row["h"];
    CHECK(h["v"] == "1/1");
    CHECK(h["s+"] == "3/1");
    CHECK(h["s-"] == "3/1");
    CHECK(h["0"] == "0/1");
}

TEST_CASE("cli_anyons_closed_form_column")
{
    auto j = parse(run({"anyons", "--type", "E7", "--level", "3"}));
    for (const auto& row : j["result"]["rows"])
        if (row.contains("h_closed_form"))
            CHECK(row["h_closed_form"] == row["h"]);
    CHECK(j["result"]["rows"][1]["h"] == "9/4");
}

TEST_CASE("cli_table_has_twelve_rows")
{
    auto r = run({"table"});
    REQUIRE(r.code == 0);
    auto j = parse(r);
    CHECK(j["result"]["count"] == 12);
    CHECK(j["result"]["rows"].size() == 12);
}

TEST_CASE("cli_tsv_carries_the_json_values")
{
    auto js = parse(run({"table"}));
    auto tsv = run({"--format", "tsv", "table"});
    REQUIRE(tsv.code == 0);
    for (const auto& row : js["result"]["rows"]) {
        std::string line = row["c"].get<std::string>() + "\t" + row["dim"].get<std::string>();
        CHECK(tsv.out.find(line) != std::string::npos);
    }
    // format may follow the subcommand too
    CHECK(run({"table", "--format", "tsv"}).out == tsv.out);
}

TEST_CASE("cli_maxima_m3")
{
    auto r = run({"maxima", "--m", "3", "--seed", "0"});
    REQUIRE(r.code == 0);
    auto j = parse(r);
    CHECK(j["result"]["count"] == 4);
    CHECK(j["seed"] == 0);
    CHECK(run({"maxima", "--m", "3", "--seed", "0"}).out == r.out);
}

TEST_CASE("cli_invariants")
{
    auto j = parse(run({"invariants", "--kind", "sym3", "--m", "9"}));
    CHECK(j["result"]["rows"][0]["dim"] == 1);
    CHECK(j["result"]["rows"][0]["dim_degree1"] == 0);
    auto c = run({"invariants", "--kind", "cube", "--m", "4", "--oracle"});
    CHECK(c.code == 0);
    CHECK(parse(c)["result"]["rows"][0]["oracle"] == 1);
}

TEST_CASE("cli_usage_errors")
{
    auto r = run({"anyons", "--type", "D", "--rank", "12", "--level", "2", "--bogus"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    CHECK(r.out.empty());
    CHECK(run({}).code == 1);
    CHECK(run({"anyons", "--type", "D", "--rank", "2", "--level", "1"}).code == 1);
    CHECK(run({"invariants", "--kind", "quartic", "--m", "3"}).code == 1);
    CHECK(run({"maxima", "--m", "3", "--starts", "10"}).code == 1);
    CHECK(run({"chart", "--data", "/nonexistent.json"}).code == 1);
}

TEST_CASE("cli_chart_mismatch_exit_code")
{
    auto data = svoa::load_embeddings(std::string(SVOA_DATA_DIR) + "/embeddings.json");
    nlohmann::json small{{"version", 1}, {"edges", nlohmann::json::array()}};
    for (const auto& e : data["edges"])
        if (e["name"] == "E7,2 < E8,2") {
            auto wrong = e;
            wrong["expect_contains"] = true;
            small["edges"].push_back(wrong);
        }
    REQUIRE(small["edges"].size() == 1);
    std::string path = std::filesystem::temp_directory_path() / "svoa_chart_mismatch.json";
    std::ofstream(path) << small.dump();
    auto r = run({"chart", "--data", path});
    CHECK(r.code == 2);
    CHECK(parse(r)["result"]["ok"] == false);
    std::remove(path.c_str());
}

TEST_CASE("cli_chart_env_var")
{
    std::string path = std::string(SVOA_DATA_DIR) + "/embeddings.json";
    ::setenv("SVOA_EMBEDDINGS", path.c_str(), 1);
    auto r = run({"chart"});
    ::unsetenv("SVOA_EMBEDDINGS");
    CHECK(r.code == 0);
    CHECK(parse(r)["result"]["ok"] == true);
}

TEST_CASE("cli_help_goes_to_stdout")
{
    auto r = run({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("classify") != std::string::npos);
}
