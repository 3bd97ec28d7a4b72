#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "thetakit/report.hpp"

namespace thetakit {

/// Configuration failures carry the flag or config-file line that caused
/// them; the CLI maps these to exit status 2 and a usage message.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
    std::string experiment;
    std::map<std::string, std::string> params;
    std::string format = "json"; // json | csv
    std::optional<std::string> out_path;
    bool no_timestamp = false;
};

/// Known experiments with their parameter contracts.
struct ExperimentSpec {
    std::string name;
    std::vector<std::string> required;
    std::vector<std::string> optional;
};

const std::vector<ExperimentSpec>& experiment_registry();

/// Flags plus optional key=value config file (# comments); flags override
/// file values.  Unknown experiments or keys, malformed lines and type
/// mismatches raise ConfigError naming the offender.
ExperimentConfig parse_config(const std::vector<std::string>& args);

struct RunResult {
    ReportDocument report;
    std::optional<std::string> csv; // table rendering, where the experiment has one
};

RunResult run_experiment(const ExperimentConfig& config);

/// Rendered output in the configured format (ConfigError when the
/// experiment has no CSV form).
std::string render_output(const RunResult& result, const std::string& format);

/// 0 when every verdict passed, 1 otherwise.
int verdict_exit_status(const ReportDocument& doc);

} // namespace thetakit
