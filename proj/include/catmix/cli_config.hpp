#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

namespace catmix {

/// Command line could not be parsed; exits with code 2.
struct usage_error : std::runtime_error {
    explicit usage_error(const std::string& what) : std::runtime_error(what) {}
};

/**
 * Fully resolved experiment description. A seed is always present (the
 * default is fixed, never time-derived) and every time-valued output names
 * its unit, so a config plus the library version pins the output bytes.
 */
struct ExperimentConfig {
    std::string subcommand;
    int n = 0;
    int k = -1;                // particle count where applicable
    std::string model = "cat"; // cat | monotone | single | at
    std::int64_t sweeps = 0;
    std::int64_t trials = 1000;
    std::uint64_t seed = 12345;
    std::string scheme;        // censoring scheme spec, "" = none
    double eps = 0.25;
    double delta = 0.2;
    std::vector<double> thetas = {1, 2, 4};
    std::int64_t tmax = 0;     // raw steps for survival curves; 0 = auto
    int projection = 0;        // block count for projected TV columns, 0 = off
    std::int64_t stride = 1;   // row thinning for long curves
    int start = 0;             // tagged-card start position
    std::string kind;          // subcommand-specific selector
    std::string out;           // output path; "" = stdout
    std::string format = "csv";
    std::string units = "sweeps";

    std::string echo_json() const; // single-line JSON of the resolved config
};

/// Parses argv (without the program name). Throws usage_error on unknown
/// flags, missing required options, or malformed values.
ExperimentConfig parse_config(const std::vector<std::string>& args);

/// Runs the experiment and writes its report. Throws capacity_error or
/// invariant_error; those map to exit codes 3 and 4.
void run_experiment(const ExperimentConfig& cfg, std::ostream& os);

/// Full CLI entry: parse, dispatch, map errors to exit codes 0/2/3/4.
int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace catmix
