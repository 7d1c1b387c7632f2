#pragma once

#include <optional>
#include <string>
#include <vector>

#include "affine/params.hpp"
#include "affine/reports.hpp"
#include "affine/simulate.hpp"

#include "json.hpp"

namespace affine {

// Raised for malformed or invalid configuration (CLI exit code 1).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised for filesystem failures (CLI exit code 2).
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Options for the `check` suites. Thresholds are configuration, not
// hard-coded in the checks; the defaults here are what the docs state.
struct CheckConfig {
    GridSpec grid;                   // pde residual grid
    double pde_tolerance = 1e-5;
    double ks_threshold = 0.02;
    int chi2_bins = 50;
    double chi2_p_min = 0.01;
    std::vector<double> s_checkpoints{0.5, 1.0, 2.0};
    double s_increment_t = 0.5;
    double s_increment_dt = 1e-4;
    double scaling_c = 4.0;
    double scaling_t = 1.0;
    int lattice_n = 21;              // isovector lattice is lattice_n x lattice_n on [-1,1]^2
};

// Options for the `density` tabulation command. Unset bounds are derived
// from the model law (mean +/- 10 sd for delta = 1, [0, 10 sd] for delta = 3).
struct DensityConfig {
    std::optional<double> q_min;
    std::optional<double> q_max;
    int n_points = 501;
};

struct RunConfig {
    ModelParams model;
    SimConfig sim;
    CheckConfig check;
    DensityConfig density;
    std::string output_dir;  // empty = $AFFINESIM_OUT_DIR or "."

    void validate() const;  // re-checks every embedded invariant
};

// Strict JSON (de)serialization: unknown keys are rejected, and loading
// re-validates all invariants. load_run_config also accepts a manifest file
// (an object with a "config" key), so a run can be reproduced from its own
// manifest.
RunConfig run_config_from_json(const nlohmann::json& j);
nlohmann::json run_config_to_json(const RunConfig& cfg);
RunConfig load_run_config(const std::string& path);

// Reproducibility record written next to every command's outputs.
struct RunManifest {
    std::string command;
    RunConfig config;
    DerivedParams derived;
    std::string version;
    double duration_seconds = 0.0;
    std::vector<std::pair<std::string, bool>> checks;  // (name, pass)
    std::vector<std::string> outputs;
};

nlohmann::json manifest_to_json(const RunManifest& m);

std::string resolve_output_dir(const RunConfig& cfg);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace affine
