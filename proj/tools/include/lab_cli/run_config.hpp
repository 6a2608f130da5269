#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "semicircle_lab/ensembles.hpp"

namespace lab_cli {

using json = nlohmann::ordered_json;

enum ExitCode : int {
    exit_ok = 0,
    exit_usage = 2,
    exit_io = 3,
    exit_assert = 4,
};

/// Bad flags or an invalid configuration; maps to exit_usage.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output; maps to exit_io.
class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Format { json, csv };

struct GridConfig {
    double min = -3.0;
    double max = 3.0;
    std::size_t points = 401;
};

struct RunConfig {
    std::string subcommand;

    semicircle_lab::EnsembleKind kind = semicircle_lab::EnsembleKind::gaussian;
    semicircle_lab::ProfileRecipe profile;
    double delta = 0.0;
    std::size_t n = 256;

    std::uint64_t seed = 0;
    std::size_t seeds = 10;
    std::vector<std::uint64_t> seed_list;  ///< overrides seed/seeds when non-empty

    std::optional<double> tau;
    GridConfig grid;
    std::size_t bins = 401;

    Format format = Format::json;
    std::string out;      ///< empty or "-" means stdout
    std::string summary;  ///< interpolate: JSON summary path in csv mode
    std::size_t threads = 0;

    bool assert_mode = false;
    std::optional<double> threshold;
    bool reproducible = false;

    std::size_t k = 4;      ///< graphs
    std::size_t max_k = 6;  ///< moments
    semicircle_lab::EnsembleKind y_kind = semicircle_lab::EnsembleKind::gaussian;
    std::size_t phi_points = 9;

    std::vector<std::uint64_t> seed_values() const;
    std::size_t thread_count() const;
    semicircle_lab::EnsembleSpec spec() const;
    semicircle_lab::EnsembleSpec y_spec() const;

    void validate() const;
};

std::string_view to_string(Format f) noexcept;
Format parse_format(std::string_view name);

json to_json(const semicircle_lab::EnsembleSpec& spec);
semicircle_lab::EnsembleSpec spec_from_json(const json& j);

json to_json(const RunConfig& cfg);

/// Applies the keys present in `j` on top of `cfg`.
void apply_json(RunConfig& cfg, const json& j);

RunConfig load_config_file(const std::string& path, RunConfig base = {});

}  // namespace lab_cli
