#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scramble/hamiltonian.hpp"
#include "scramble/pauli.hpp"
#include "scramble/propagation.hpp"
#include "scramble/region.hpp"

namespace scramble {

// Pipelines the runner knows how to drive. Echo-based kinds (lightcone,
// operator-state, velocities) need backward evolution; operator-size needs
// the dense operator picture; the rest are forward-only trajectories.
enum class ExperimentKind {
    Lightcone,
    Entropy,
    OperatorState,
    OperatorSize,
    Thermalization,
    Velocities,
    FiniteSize,
};

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

// The evolved probe W of the squared commutator.
struct ProbeConfig {
    PauliKind kind = PauliKind::Y;
    int site = 1;
};

// The scanned probe V. Empty sites = pipeline default (every site for
// lightcones, the first site past the entropy region for operator-state).
struct ScanProbeConfig {
    PauliKind kind = PauliKind::Y;
    std::vector<int> sites;
};

// Symbolic region resolved against each model's chain length.
struct RegionSpec {
    enum class Kind { LeftHalf, MiddlePair, Prefix, Range, Explicit };

    Kind kind = Kind::LeftHalf;
    int prefix_len = 0;     // Prefix
    int lo = 0, hi = 0;     // Range
    std::vector<int> sites; // Explicit

    Region resolve(int n_qubits) const;
    std::string describe() const;
};

// Hard caps that turn oversized requests into resource_limit_error (a
// different failure category than schema errors). Overridable per config.
struct NumericalLimits {
    int operator_qubits = 13; // dense 2^N x 2^N operator snapshots
    int spectral_qubits = 14; // full eigendecomposition
    int state_qubits = 22;    // state vectors / Krylov propagation
};

struct ExperimentConfig {
    std::string name = "experiment";
    ExperimentKind kind = ExperimentKind::Entropy;
    std::vector<HamiltonianSpec> models;
    PauliEigenstate initial_state = PauliEigenstate::YPlus;
    ProbeConfig w;
    ScanProbeConfig v;
    std::vector<double> times;
    RegionSpec region; // entropy region; thermalization pipelines default to
                       // the middle pair instead
    std::vector<double> thetas{0.5};
    std::optional<std::pair<int, int>> butterfly_sites; // absent = sites 4..N-2
    std::pair<double, double> entropy_fractions{0.1, 0.5};
    std::string propagator = "auto"; // auto | spectral | krylov
    KrylovConfig krylov;
    NumericalLimits limits;
    int workers = 0; // 0 = SCRAMBLE_WORKERS env, else 1
    std::string output_dir = ".";

    // Schema-level checks; throws config_error naming the offending key.
    void validate() const;
};

// Uniform grid start, start+step, ..., through stop (inclusive up to
// rounding); the same arguments always produce the same doubles.
std::vector<double> uniform_time_grid(double start, double stop, double step);

// Parse a JSON config. A "preset" key pulls in that preset's resolved config
// first, and the remaining top-level keys replace its fields; a top-level
// "n_qubits" rewrites every model's chain length. Unknown keys are schema
// errors. Overrides are --set style dotted paths applied to the raw JSON
// before parsing, e.g. {"times.step", "0.5"}; each value is read as JSON when
// it parses and kept as a string otherwise. Throws config_error.
ExperimentConfig parse_config_text(
    const std::string& json_text,
    const std::vector<std::pair<std::string, std::string>>& overrides = {});

// Read + parse a config file; I/O and JSON errors become config_error.
ExperimentConfig load_config_file(
    const std::string& path,
    const std::vector<std::pair<std::string, std::string>>& overrides = {});

// Canonical fully-resolved JSON form; feeding it back through
// parse_config_text reproduces the config.
std::string resolved_json_text(const ExperimentConfig& config, int indent = 2);

} // namespace scramble
