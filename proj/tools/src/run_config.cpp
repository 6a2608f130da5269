#include "lab_cli/run_config.hpp"

#include <fstream>
#include <set>

#include "semicircle_lab/parallel.hpp"
#include "semicircle_lab/spectra.hpp"

namespace lab_cli {

using namespace semicircle_lab;

namespace {

void reject_unknown_keys(const json& j, const std::set<std::string>& allowed, const char* where)
{
    for (const auto& item : j.items()) {
        if (!allowed.contains(item.key())) {
            throw UsageError(std::string(where) + ": unknown key '" + item.key() + "'");
        }
    }
}

template <class T>
T get_as(const json& j, const char* key)
{
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw UsageError(std::string("config key '") + key + "': " + e.what());
    }
}

std::size_t get_count(const json& j, const char* key)
{
    const auto& v = j.at(key);
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw UsageError(std::string("config key '") + key + "' must be a nonnegative integer");
    }
    return v.get<std::size_t>();
}

}  // namespace

std::string_view to_string(Format f) noexcept
{
    return f == Format::json ? "json" : "csv";
}

Format parse_format(std::string_view name)
{
    if (name == "json") return Format::json;
    if (name == "csv") return Format::csv;
    throw UsageError("format must be json or csv, got '" + std::string(name) + "'");
}

std::vector<std::uint64_t> RunConfig::seed_values() const
{
    if (!seed_list.empty()) {
        return seed_list;
    }
    return seed_range(seed, seeds);
}

std::size_t RunConfig::thread_count() const
{
    return threads > 0 ? threads : default_thread_count();
}

EnsembleSpec RunConfig::spec() const
{
    return make_spec(kind, n, profile, delta, seed);
}

EnsembleSpec RunConfig::y_spec() const
{
    return make_spec(y_kind, n, profile, 0.0, seed);
}

void RunConfig::validate() const
{
    if (n < 1) {
        throw UsageError("n must be at least 1");
    }
    if (seed_list.empty() && seeds < 1) {
        throw UsageError("seeds must be at least 1");
    }
    if (grid.points < 2 || !(grid.max > grid.min)) {
        throw UsageError("grid needs at least 2 points and grid-max > grid-min");
    }
    if (bins < 1) {
        throw UsageError("bins must be at least 1");
    }
    if (phi_points < 2) {
        throw UsageError("phi-points must be at least 2");
    }
    if (tau && !(*tau > 0.0)) {
        throw UsageError("tau must be positive");
    }
}

json to_json(const EnsembleSpec& spec)
{
    json params = json::object();
    if (spec.recipe.type == ProfileRecipe::Type::smooth) {
        params["alpha"] = spec.recipe.alpha;
    }
    return json{
        {"kind", to_string(spec.kind)},
        {"n", spec.size()},
        {"profile", {{"type", to_string(spec.recipe.type)}, {"params", params}}},
        {"delta", spec.delta},
        {"seed", spec.seed},
    };
}

EnsembleSpec spec_from_json(const json& j)
{
    if (!j.is_object()) {
        throw UsageError("ensemble spec must be a JSON object");
    }
    reject_unknown_keys(j, {"kind", "n", "profile", "delta", "seed"}, "ensemble spec");
    const auto kind = parse_ensemble_kind(get_as<std::string>(j, "kind"));
    const auto n = get_count(j, "n");
    ProfileRecipe recipe;
    if (j.contains("profile")) {
        const auto& p = j.at("profile");
        reject_unknown_keys(p, {"type", "params"}, "profile");
        recipe.type = parse_profile_type(get_as<std::string>(p, "type"));
        if (p.contains("params")) {
            reject_unknown_keys(p.at("params"), {"alpha"}, "profile params");
            if (p.at("params").contains("alpha")) {
                recipe.alpha = get_as<double>(p.at("params"), "alpha");
            }
        }
    }
    const double delta = j.contains("delta") ? get_as<double>(j, "delta") : 0.0;
    const auto seed = j.contains("seed") ? get_as<std::uint64_t>(j, "seed") : 0;
    return make_spec(kind, n, recipe, delta, seed);
}

json to_json(const RunConfig& cfg)
{
    json spec = {
        {"kind", to_string(cfg.kind)},
        {"n", cfg.n},
        {"profile", {{"type", to_string(cfg.profile.type)}, {"params", json::object()}}},
        {"delta", cfg.delta},
        {"seed", cfg.seed},
    };
    if (cfg.profile.type == ProfileRecipe::Type::smooth) {
        spec["profile"]["params"]["alpha"] = cfg.profile.alpha;
    }
    json j = {
        {"subcommand", cfg.subcommand},
        {"spec", spec},
        {"seeds", cfg.seed_values()},
        {"grid", {{"min", cfg.grid.min}, {"max", cfg.grid.max}, {"points", cfg.grid.points}}},
        {"bins", cfg.bins},
        {"format", to_string(cfg.format)},
    };
    if (cfg.tau) {
        j["tau"] = *cfg.tau;
    }
    if (cfg.subcommand == "graphs") {
        j["k"] = cfg.k;
    }
    if (cfg.subcommand == "moments") {
        j["max_k"] = cfg.max_k;
    }
    if (cfg.subcommand == "interpolate") {
        j["y_kind"] = to_string(cfg.y_kind);
        j["phi_points"] = cfg.phi_points;
    }
    if (cfg.assert_mode) {
        j["assert"] = true;
        if (cfg.threshold) {
            j["threshold"] = *cfg.threshold;
        }
    }
    return j;
}

void apply_json(RunConfig& cfg, const json& j)
{
    if (!j.is_object()) {
        throw UsageError("config must be a JSON object");
    }
    reject_unknown_keys(j,
                        {"subcommand", "spec", "seeds", "grid", "bins", "tau", "format", "out",
                         "summary", "threads", "assert", "threshold", "reproducible", "k", "max_k",
                         "y_kind", "phi_points"},
                        "config");
    if (j.contains("subcommand")) cfg.subcommand = get_as<std::string>(j, "subcommand");
    if (j.contains("spec")) {
        const auto spec = spec_from_json(j.at("spec"));
        cfg.kind = spec.kind;
        cfg.n = spec.size();
        cfg.profile = spec.recipe;
        cfg.delta = spec.delta;
        cfg.seed = spec.seed;
    }
    if (j.contains("seeds")) {
        const auto& s = j.at("seeds");
        if (s.is_array()) {
            cfg.seed_list = s.get<std::vector<std::uint64_t>>();
            if (cfg.seed_list.empty()) {
                throw UsageError("config key 'seeds' must not be an empty list");
            }
        } else {
            cfg.seeds = get_count(j, "seeds");
            cfg.seed_list.clear();
        }
    }
    if (j.contains("grid")) {
        const auto& g = j.at("grid");
        reject_unknown_keys(g, {"min", "max", "points"}, "grid");
        if (g.contains("min")) cfg.grid.min = get_as<double>(g, "min");
        if (g.contains("max")) cfg.grid.max = get_as<double>(g, "max");
        if (g.contains("points")) cfg.grid.points = get_count(g, "points");
    }
    if (j.contains("bins")) cfg.bins = get_count(j, "bins");
    if (j.contains("tau")) cfg.tau = get_as<double>(j, "tau");
    if (j.contains("format")) cfg.format = parse_format(get_as<std::string>(j, "format"));
    if (j.contains("out")) cfg.out = get_as<std::string>(j, "out");
    if (j.contains("summary")) cfg.summary = get_as<std::string>(j, "summary");
    if (j.contains("threads")) cfg.threads = get_count(j, "threads");
    if (j.contains("assert")) cfg.assert_mode = get_as<bool>(j, "assert");
    if (j.contains("threshold")) cfg.threshold = get_as<double>(j, "threshold");
    if (j.contains("reproducible")) cfg.reproducible = get_as<bool>(j, "reproducible");
    if (j.contains("k")) cfg.k = get_count(j, "k");
    if (j.contains("max_k")) cfg.max_k = get_count(j, "max_k");
    if (j.contains("y_kind")) cfg.y_kind = parse_ensemble_kind(get_as<std::string>(j, "y_kind"));
    if (j.contains("phi_points")) cfg.phi_points = get_count(j, "phi_points");
}

RunConfig load_config_file(const std::string& path, RunConfig base)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config file '" + path + "'");
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("config file '" + path + "' is not valid JSON: " + e.what());
    }
    apply_json(base, j);
    return base;
}

}  // namespace lab_cli
