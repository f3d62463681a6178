#include "scramble/presets.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "scramble/errors.hpp"

namespace scramble {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// The four benchmark couplings compared side by side throughout: strictly
// local, long-range at alpha = 1.1 (Kac-normalized), near-uniform alpha = 0.4
// without normalization, and the sparse fast scrambler.
std::vector<HamiltonianSpec> benchmark_models(int n) {
    return {
        HamiltonianSpec::local(n),
        HamiltonianSpec::powerlaw(n, 1.1, true),
        HamiltonianSpec::powerlaw(n, 0.4, false),
        HamiltonianSpec::fast_scrambler(n),
    };
}

std::vector<HamiltonianSpec> powerlaw_family(int n, std::initializer_list<double> alphas) {
    std::vector<HamiltonianSpec> models;
    for (double a : alphas) models.push_back(HamiltonianSpec::powerlaw(n, a, true));
    return models;
}

ExperimentConfig fig1a_lightcone() {
    ExperimentConfig c;
    c.kind = ExperimentKind::Lightcone;
    c.models = benchmark_models(14);
    c.times = uniform_time_grid(0.0, 10.0, 0.25);
    c.thetas = {0.5};
    return c;
}

ExperimentConfig fig1b_entropy() {
    ExperimentConfig c;
    c.kind = ExperimentKind::Entropy;
    c.models = benchmark_models(14);
    c.times = uniform_time_grid(0.0, 40.0, 0.2);
    return c;
}

ExperimentConfig fig3_operator_state() {
    ExperimentConfig c;
    c.kind = ExperimentKind::OperatorState;
    c.models = benchmark_models(14);
    c.times = uniform_time_grid(0.0, 15.0, 0.25);
    return c;
}

ExperimentConfig fig4_opsize() {
    ExperimentConfig c;
    c.kind = ExperimentKind::OperatorSize;
    c.models = benchmark_models(10);
    c.times = uniform_time_grid(0.0, 40.0, 0.5);
    return c;
}

ExperimentConfig sm_thermalization() {
    ExperimentConfig c;
    c.kind = ExperimentKind::Thermalization;
    c.models = powerlaw_family(14, {kInf, 2.3, 1.5, 1.0, 0.8, 0.5});
    c.times = uniform_time_grid(0.0, 40.0, 0.2);
    c.region.kind = RegionSpec::Kind::MiddlePair;
    return c;
}

ExperimentConfig sm_velocities() {
    ExperimentConfig c;
    c.kind = ExperimentKind::Velocities;
    c.models = powerlaw_family(12, {kInf, 6.0, 5.0, 4.0, 3.0, 2.5, 2.3, 2.1});
    c.times = uniform_time_grid(0.0, 12.0, 0.25);
    c.thetas = {0.5};
    return c;
}

ExperimentConfig sm_lightcones() {
    ExperimentConfig c;
    c.kind = ExperimentKind::Lightcone;
    c.models = powerlaw_family(12, {kInf, 4.0, 3.0, 2.5, 2.3, 2.1});
    c.models.push_back(HamiltonianSpec::fast_scrambler(12));
    c.times = uniform_time_grid(0.0, 12.0, 0.25);
    c.thetas = {0.01, 0.5, 0.85};
    return c;
}

ExperimentConfig sm_finite_size() {
    ExperimentConfig c;
    c.kind = ExperimentKind::FiniteSize;
    for (int n : {6, 8, 10, 12}) {
        c.models.push_back(HamiltonianSpec::local(n));
        c.models.push_back(HamiltonianSpec::fast_scrambler(n));
    }
    c.times = uniform_time_grid(0.0, 40.0, 0.5);
    // Size tables stop at the dense-operator budget; entropy covers all sizes.
    c.limits.operator_qubits = 10;
    return c;
}

struct PresetEntry {
    PresetInfo info;
    std::function<ExperimentConfig()> build;
};

const std::vector<PresetEntry>& entries() {
    static const std::vector<PresetEntry> list = {
        {{"fig1a-lightcone",
          "Squared-commutator lightcone C(r,t) for the four benchmark couplings (N=14)"},
         fig1a_lightcone},
        {{"fig1b-entropy",
          "Half-chain entanglement growth after a Y+ product quench (N=14)"},
         fig1b_entropy},
        {{"fig3-operator-state",
          "Operator-state entropy against the squared commutator at the region edge (N=14)"},
         fig3_operator_state},
        {{"fig4-opsize",
          "Average operator size and site-resolved density of an evolving Y probe (N=10)"},
         fig4_opsize},
        {{"sm-thermalization",
          "Magnetization decay and two-qubit trace distance across interaction ranges (N=14)"},
         sm_thermalization},
        {{"sm-velocities",
          "Butterfly and entanglement velocities against interaction range (N=12)"},
         sm_velocities},
        {{"sm-lightcones",
          "Lightcone contours at several thresholds across interaction ranges (N=12)"},
         sm_lightcones},
        {{"sm-finite-size",
          "Operator size and entropy saturation across chain sizes, local vs fast scrambler"},
         sm_finite_size},
    };
    return list;
}

} // namespace

const std::vector<PresetInfo>& preset_catalog() {
    static const std::vector<PresetInfo> catalog = [] {
        std::vector<PresetInfo> out;
        for (const auto& e : entries()) out.push_back(e.info);
        return out;
    }();
    return catalog;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> out;
    for (const auto& e : entries()) out.push_back(e.info.name);
    return out;
}

ExperimentConfig preset_config(const std::string& name) {
    for (const auto& e : entries()) {
        if (e.info.name != name) continue;
        ExperimentConfig c = e.build();
        c.name = name;
        c.validate();
        return c;
    }
    std::string known;
    for (const auto& e : entries()) {
        if (!known.empty()) known += ", ";
        known += e.info.name;
    }
    throw config_error("unknown preset '" + name + "' (known presets: " + known + ")");
}

std::string render_preset_list() {
    std::size_t width = 0;
    for (const auto& e : entries()) width = std::max(width, e.info.name.size());
    std::string out;
    for (const auto& e : entries()) {
        std::string line = e.info.name;
        line.append(width - e.info.name.size() + 2, ' ');
        line += e.info.description;
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace scramble
