#pragma once

#include <string>

#include "lab_cli/run_config.hpp"

namespace lab_cli {

struct CommandResult {
    json body;         ///< the "result" object of the JSON report
    std::string csv;   ///< table emitted in csv mode
    bool assertion_passed = true;
    std::string assertion;  ///< human-readable description of the check
    json summary;      ///< interpolate: compact report written beside the csv
};

CommandResult cmd_simulate(const RunConfig& cfg);
CommandResult cmd_esd(const RunConfig& cfg);
CommandResult cmd_distance(const RunConfig& cfg);
CommandResult cmd_moments(const RunConfig& cfg);
CommandResult cmd_graphs(const RunConfig& cfg);
CommandResult cmd_interpolate(const RunConfig& cfg);
CommandResult cmd_counterexample(const RunConfig& cfg);
CommandResult cmd_check(const RunConfig& cfg);

CommandResult dispatch(const RunConfig& cfg);

}  // namespace lab_cli
