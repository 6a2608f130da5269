#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "lab_cli/cli.hpp"
#include "lab_cli/run_config.hpp"

using lab_cli::json;

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;

    json doc() const { return json::parse(out); }
};

Outcome invoke(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    Outcome o;
    o.code = lab_cli::run(args, out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

fs::path scratch(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / "semicircle_lab_cli_test";
    fs::create_directories(dir);
    return dir / name;
}

std::string slurp(const fs::path& p)
{
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::size_t count_lines(const std::string& text, bool skip_comments)
{
    std::istringstream in(text);
    std::size_t lines = 0;
    for (std::string line; std::getline(in, line);) {
        lines += !(skip_comments && line.starts_with('#'));
    }
    return lines;
}

}  // namespace

TEST_CASE("graphs: row counts and the Catalan column")
{
    auto k2 = invoke({"graphs", "--k", "2", "--reproducible"});
    REQUIRE(k2.code == 0);
    CHECK(k2.doc()["result"]["graphs"].size() == 2);

    auto k4 = invoke({"graphs", "--k", "4", "--reproducible", "--assert"});
    REQUIRE(k4.code == 0);
    CHECK(k4.doc()["result"]["counts"]["c1"] == 2);
    CHECK(k4.doc()["result"]["counts"]["total"] == 15);
    CHECK(k4.doc()["result"]["graphs"][0]["contribution"].is_null());

    auto small = invoke({"graphs", "--k", "4", "--n", "3", "--reproducible"});
    REQUIRE(small.code == 0);
    const auto rows = small.doc()["result"]["graphs"];
    double sum = 0.0;
    for (const auto& row : rows) {
        sum += row["contribution"].get<double>();
    }
    // the per-graph contributions add up to the exact moment reported by `moments`
    auto exact = invoke({"moments", "--n", "3", "--max-k", "4", "--seeds", "1", "--reproducible"});
    REQUIRE(exact.code == 0);
    CHECK(sum == doctest::Approx(exact.doc()["result"]["moments"][3]["exact"].get<double>()).epsilon(1e-12));

    CHECK(invoke({"graphs", "--k", "13"}).code == lab_cli::exit_usage);
    CHECK(invoke({"graphs", "--k", "0"}).code == lab_cli::exit_usage);
}

TEST_CASE("graphs: csv quotes the g string")
{
    auto r = invoke({"graphs", "--k", "3", "--format", "csv"});
    REQUIRE(r.code == 0);
    CHECK(r.out.starts_with("g,t,category,contribution\n"));
    CHECK(r.out.find("\"1,2,3\",3,2,") != std::string::npos);
    CHECK(count_lines(r.out, false) == 1 + 5);
}

TEST_CASE("check: constant passes, block fails the average condition")
{
    auto c = invoke({"check", "--n", "64", "--seeds", "3", "--reproducible"});
    REQUIRE(c.code == 0);
    CHECK(c.doc()["result"]["all_pass"] == true);

    auto b = invoke({"check", "--n", "64", "--seeds", "3", "--profile", "block", "--assert"});
    CHECK(b.code == lab_cli::exit_assert);
    const auto res = b.doc()["result"];
    CHECK(res["avg_b_deviation"]["pass"] == false);
    CHECK(res["avg_b_deviation"]["value"].get<double>() == doctest::Approx(0.5 * (0.5 - 1.0 / 64)));

    auto s = invoke({"check", "--n", "64", "--seeds", "3", "--profile", "smooth", "--alpha", "0.5", "--assert"});
    CHECK(s.code == 0);
    CHECK(s.doc()["result"]["max_b_deviation"]["value"].get<double>() < 0.05);
}

TEST_CASE("simulate: zero profile sits at distance one half")
{
    auto r = invoke({"simulate", "--n", "8", "--seeds", "2", "--profile", "zero", "--reproducible"});
    REQUIRE(r.code == 0);
    const auto res = r.doc()["result"];
    CHECK(res["kolmogorov"].get<double>() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(res["histogram"]["bins"] == 401);
    CHECK(res["histogram"]["semicircle"].size() == 401);
    CHECK(res["esd"]["x"].size() == 401);

    auto a = invoke({"simulate", "--n", "8", "--seeds", "2", "--profile", "zero", "--assert"});
    CHECK(a.code == lab_cli::exit_assert);
    CHECK(a.err.find("assertion failed") != std::string::npos);
}

TEST_CASE("simulate: histogram integrates to one and csv is gnuplot-ready")
{
    auto r = invoke({"simulate", "--n", "40", "--seeds", "3", "--reproducible"});
    REQUIRE(r.code == 0);
    const auto h = r.doc()["result"]["histogram"];
    const double width = 6.0 / 401;
    double mass = 0.0;
    for (const auto& d : h["density"]) {
        mass += d.get<double>() * width;
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));

    auto c = invoke({"simulate", "--n", "40", "--seeds", "3", "--format", "csv"});
    REQUIRE(c.code == 0);
    CHECK(c.out.starts_with("# kolmogorov="));
    CHECK(count_lines(c.out, true) == 1 + 401);
}

TEST_CASE("reruns are byte-identical and independent of the thread count")
{
    const std::vector<std::string> base = {"simulate", "--n", "48", "--seeds", "5", "--kind", "dependent",
                                           "--delta", "0.5", "--reproducible"};
    auto one = base;
    one.insert(one.end(), {"--threads", "1"});
    auto three = base;
    three.insert(three.end(), {"--threads", "3"});
    const auto a = invoke(one);
    const auto b = invoke(one);
    const auto c = invoke(three);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out == c.out);
    CHECK(a.doc().contains("generated_at") == false);

    const auto stamped = invoke({"graphs", "--k", "2"});
    CHECK(stamped.doc().contains("generated_at"));
}

TEST_CASE("seed list overrides the seed count")
{
    auto r = invoke({"distance", "--n", "16", "--seed-list", "7,3,11", "--reproducible"});
    REQUIRE(r.code == 0);
    const auto per = r.doc()["result"]["per_seed"];
    REQUIRE(per.size() == 3);
    CHECK(per[0]["seed"] == 7);
    CHECK(per[1]["seed"] == 3);
    for (const auto& row : per) {
        CHECK(row["levy"].get<double>() <= row["kolmogorov"].get<double>() + 1e-12);
    }
}

TEST_CASE("moments: columns and the semicircle values")
{
    auto r = invoke({"moments", "--n", "64", "--seeds", "4", "--max-k", "6", "--reproducible"});
    REQUIRE(r.code == 0);
    const auto rows = r.doc()["result"]["moments"];
    REQUIRE(rows.size() == 6);
    const double beta[] = {0, 1, 0, 2, 0, 5};
    for (std::size_t k = 0; k < 6; ++k) {
        CHECK(rows[k]["semicircle"].get<double>() == beta[k]);
        CHECK_FALSE(rows[k].contains("exact"));
    }
    CHECK(invoke({"moments", "--max-k", "0"}).code == lab_cli::exit_usage);
}

TEST_CASE("interpolate: endpoints, csv and summary")
{
    const auto summary = scratch("summary.json");
    const auto table = scratch("path.csv");
    fs::remove(summary);
    auto r = invoke({"interpolate", "--n", "24", "--seeds", "3", "--kind", "rademacher", "--phi-points", "3",
                     "--format", "csv", "--out", table.string(), "--summary", summary.string(),
                     "--reproducible"});
    REQUIRE(r.code == 0);
    CHECK(r.out.empty());
    const auto csv = slurp(table);
    CHECK(csv.starts_with("phi,re_z,im_z,re_s,im_s,stderr\n"));
    CHECK(count_lines(csv, false) == 1 + 3 * 5);
    const auto doc = json::parse(slurp(summary));
    CHECK(doc["result"]["herglotz"] == true);
    CHECK(doc["result"]["gap"].get<double>() > 0.0);
    CHECK_FALSE(doc["result"].contains("samples"));

    auto j = invoke({"interpolate", "--n", "24", "--seeds", "3", "--kind", "rademacher", "--phi-points", "3",
                     "--reproducible"});
    REQUIRE(j.code == 0);
    CHECK(j.doc()["result"]["gap"] == doc["result"]["gap"]);
    CHECK(j.doc()["result"]["samples"].size() == 15);
}

TEST_CASE("counterexample: block profile, per-seed distances")
{
    auto r = invoke({"counterexample", "--n", "64", "--seeds", "3", "--reproducible"});
    REQUIRE(r.code == 0);
    const auto res = r.doc()["result"];
    CHECK(res["spec"]["profile"]["type"] == "block");
    CHECK(res["per_seed"].size() == 3);
    CHECK(res["conditions"]["avg_b_deviation"]["pass"] == false);
}

TEST_CASE("config file supplies defaults and flags override it")
{
    const auto path = scratch("config.json");
    std::ofstream(path) << R"({"spec": {"kind": "rademacher", "n": 20,
        "profile": {"type": "smooth", "params": {"alpha": 0.25}}, "delta": 0, "seed": 5},
        "seeds": 2, "grid": {"points": 11}, "format": "json", "reproducible": true})";
    auto r = invoke({"esd", "--config", path.string(), "--seeds", "3"});
    REQUIRE(r.code == 0);
    const auto cfg = r.doc()["config"];
    CHECK(cfg["spec"]["kind"] == "rademacher");
    CHECK(cfg["spec"]["n"] == 20);
    CHECK(cfg["spec"]["profile"]["params"]["alpha"] == 0.25);
    CHECK(cfg["seeds"] == json::array({5, 6, 7}));
    CHECK(r.doc()["result"]["x"].size() == 11);

    const auto bad = scratch("bad.json");
    std::ofstream(bad) << R"({"spec": {"kind": "gaussian", "n": 4, "colour": 1}})";
    CHECK(invoke({"esd", "--config", bad.string()}).code == lab_cli::exit_usage);
    const auto broken = scratch("broken.json");
    std::ofstream(broken) << "{ not json";
    CHECK(invoke({"esd", "--config", broken.string()}).code == lab_cli::exit_usage);
    CHECK(invoke({"esd", "--config", scratch("missing.json").string()}).code == lab_cli::exit_io);
}

TEST_CASE("ensemble spec json round trip")
{
    const auto spec = semicircle_lab::make_spec(semicircle_lab::EnsembleKind::dependent, 12,
                                                {semicircle_lab::ProfileRecipe::Type::smooth, 0.5}, 0.3, 99);
    const auto j = lab_cli::to_json(spec);
    CHECK(j.dump() ==
          R"({"kind":"dependent","n":12,"profile":{"type":"smooth","params":{"alpha":0.5}},"delta":0.3,"seed":99})");
    const auto back = lab_cli::spec_from_json(j);
    CHECK(back.kind == spec.kind);
    CHECK(back.profile.matrix() == spec.profile.matrix());
    CHECK(back.delta == spec.delta);
    CHECK(back.seed == spec.seed);
}

TEST_CASE("usage and io errors map to their exit codes")
{
    CHECK(invoke({}).code == lab_cli::exit_usage);
    CHECK(invoke({"frobnicate"}).code == lab_cli::exit_usage);
    CHECK(invoke({"simulate", "--n", "0"}).code == lab_cli::exit_usage);
    CHECK(invoke({"simulate", "--seeds", "0"}).code == lab_cli::exit_usage);
    CHECK(invoke({"simulate", "--format", "xml"}).code == lab_cli::exit_usage);
    CHECK(invoke({"simulate", "--kind", "cauchy"}).code == lab_cli::exit_usage);
    CHECK(invoke({"simulate", "--delta", "0.5"}).code == lab_cli::exit_usage);
    CHECK(invoke({"simulate", "--n", "4", "--seeds", "1", "--out", "/nonexistent/dir/out.json"}).code ==
          lab_cli::exit_io);
    auto help = invoke({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("simulate") != std::string::npos);
}

TEST_CASE("the installed binary honours the exit-code contract")
{
    const std::string bin = LAB_CLI_BINARY;
    const auto status = [&](const std::string& args) {
        const int raw = std::system((bin + ' ' + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("graphs --k 4") == 0);
    CHECK(status("graphs --k 13") == 2);
    CHECK(status("check --n 32 --seeds 2 --profile block --assert") == 4);
}

TEST_CASE("schema files are well-formed")
{
    for (const char* name : {"ensemble_spec", "run_config", "report"}) {
        const auto text = slurp(fs::path(LAB_SCHEMA_DIR) / (std::string(name) + ".schema.json"));
        REQUIRE_FALSE(text.empty());
        CHECK(json::parse(text).is_object());
    }
}
