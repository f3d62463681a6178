#pragma once

#include <string>
#include <utility>
#include <vector>

#include "scramble/config.hpp"
#include "scramble/table.hpp"

namespace scramble {

// Everything one experiment run produced, in write order. Table contents are
// byte-deterministic for a given config; the metadata document additionally
// carries wall time, so only the tables are fit for byte comparison.
struct RunResult {
    ExperimentConfig config;
    std::vector<std::pair<std::string, ResultTable>> tables;
    std::string metadata_json;
    std::vector<std::string> written_files; // filled by write_outputs
};

// Execute the configured pipeline. Throws config_error for inconsistent
// configs, resource_limit_error when a model exceeds the configured qubit
// budgets, and numerical_error when a solve fails or a requested fit has no
// usable data.
RunResult run_experiment(const ExperimentConfig& config);

// Write <name>-<table>.csv per table plus <name>-metadata.json under
// config.output_dir (created if missing). Returns the paths written.
std::vector<std::string> write_outputs(RunResult& result);

// run_experiment followed by write_outputs.
RunResult run_and_write(const ExperimentConfig& config);

} // namespace scramble
