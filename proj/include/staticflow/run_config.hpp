#pragma once

#include "staticflow/flow.hpp"
#include "staticflow/solutions.hpp"

#include <filesystem>
#include <optional>
#include <string>

namespace staticflow {

/// Raised on malformed or inconsistent configuration; carries the offending
/// field in the message.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    enum class Command { flow, expand, residual, verify };
    enum class Format { csv, json };
    enum class Kind { ads, schwarzschild_ads, perturbed };

    Command command = Command::verify;
    int n = 3;
    RadialGrid grid;

    Kind initial_kind = Kind::ads;
    double mass = 0.0;
    std::optional<PerturbationSpec> perturbation;

    std::optional<FlowControls> flow;

    struct Expansion {
        double scal = 0.0;
        std::size_t order = 0;
    };
    std::optional<Expansion> expansion;

    std::string output_path;
    Format output_format = Format::json;
    std::size_t output_every = 100;

    double verify_tolerance = 5e-4;
};

/// Parses and validates a config document; throws ConfigError with a field
/// diagnostic on any problem.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::filesystem::path& path);

/// Builds the configured initial data triple.
StaticTriple build_initial(const RunConfig& config);

/// Dispatches the configured command. Returns the process exit status:
/// 0 success, 3 early flow termination, 4 internal oracle mismatch.
int run(const RunConfig& config);

/// Full CLI path: load, optionally override the output path, run. Returns 2
/// on configuration errors.
int run_file(const std::filesystem::path& config_path, const std::optional<std::string>& out_override);

} // namespace staticflow
