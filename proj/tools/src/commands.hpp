// commands.hpp: the power | cumulants | pdf | validate subcommands

#pragma once

#include <optional>
#include <string>

#include "config.hpp"
#include "heatfcs/floquet.hpp"
#include "heatfcs/rates.hpp"

namespace heatfcs::cli {

enum ExitCode : int { kOk = 0, kConfigError = 2, kNumericalError = 3, kValidationFailed = 4 };

// Everything a command needs for one parameter point.
struct Pipeline {
    RabiParameters model;
    BathParameters bath;
    FloquetSolution floquet;
    RateTable table;
    InitialState init;
};

Pipeline build_pipeline(const RunConfig& config);

// Same as build_pipeline with the sweep variable set to `value`.
Pipeline build_pipeline(const RunConfig& config, SweepKind sweep, double value);

int cmd_power(const RunConfig& config);
int cmd_cumulants(const RunConfig& config);
int cmd_pdf(const RunConfig& config);
int cmd_validate(const RunConfig& config);

// File-name fragment for a time in periods, e.g. 80 -> "t80", 0.5 -> "t0.5".
std::string time_tag(double periods);

// Parses argv and dispatches; returns the process exit code.
int run(int argc, char** argv);

} // namespace heatfcs::cli
