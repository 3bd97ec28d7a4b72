// Experiment runner: builds catalog instances, runs verification suites and
// searches, and writes JSON/CSV reports.  Exit status: 0 when every verdict
// passed, 1 on a failed verdict, 2 on a configuration error, 3 when an
// enumeration guard was exceeded.

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "thetakit/experiment.hpp"
#include "thetakit/guard.hpp"

namespace {

void usage(std::ostream& os) {
    os << "usage: thetakit --experiment <name> [--<key> <value> ...] [options]\n"
       << "\nexperiments (required/optional parameters):\n";
    for (const auto& spec : thetakit::experiment_registry()) {
        os << "  " << spec.name;
        for (const auto& k : spec.required) os << " --" << k << " <v>";
        for (const auto& k : spec.optional) os << " [--" << k << " <v>]";
        os << "\n";
    }
    os << "\noptions:\n"
       << "  --config <file>    key=value lines, # comments; flags take precedence\n"
       << "  --format <fmt>     json (default) or csv (table experiments)\n"
       << "  --out <path>       write the report to a file instead of stdout\n"
       << "  --no-timestamp     omit the timestamp field (golden-file runs)\n"
       << "\nenvironment:\n"
       << "  THETAKIT_GUARD_OVERRIDE  raise the enumeration guard (integer)\n";
}

} // namespace

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    if (args.empty() || args[0] == "--help" || args[0] == "-h") {
        usage(std::cout);
        return args.empty() ? 2 : 0;
    }
    try {
        thetakit::ExperimentConfig config = thetakit::parse_config(args);
        thetakit::RunResult result = thetakit::run_experiment(config);
        std::string text = thetakit::render_output(result, config.format);
        if (config.out_path) {
            std::ofstream out(*config.out_path, std::ios::binary);
            if (!out) {
                std::cerr << "error: cannot write to " << *config.out_path << "\n";
                return 2;
            }
            out << text;
        } else {
            std::cout << text;
        }
        return thetakit::verdict_exit_status(result.report);
    } catch (const thetakit::ConfigError& e) {
        std::cerr << "error: " << e.what() << "\n\n";
        usage(std::cerr);
        return 2;
    } catch (const thetakit::GuardExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
