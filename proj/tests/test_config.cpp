#include <doctest.h>

#include <cmath>
#include <fstream>
#include <string>
#include <vector>

#include "scramble/config.hpp"
#include "scramble/errors.hpp"
#include "scramble/hamiltonian.hpp"
#include "scramble/presets.hpp"

using namespace scramble;

namespace {

constexpr const char* kMinimal = R"({
  "experiment": "entropy",
  "n_qubits": 4,
  "models": [{"family": "local"}],
  "times": {"values": [0, 1]}
})";

// Checks both the exception type and a fragment of its message.
template <typename Fn>
void check_config_error(Fn&& fn, const std::string& needle) {
    try {
        fn();
        FAIL_CHECK("expected config_error mentioning '" << needle << "'");
    } catch (const config_error& e) {
        const std::string what = e.what();
        CHECK_MESSAGE(what.find(needle) != std::string::npos,
                      "message '" << what << "' lacks '" << needle << "'");
    }
}

} // namespace

TEST_CASE("minimal config picks up every default") {
    const ExperimentConfig c = parse_config_text(kMinimal);
    CHECK(c.name == "experiment");
    CHECK(c.kind == ExperimentKind::Entropy);
    REQUIRE(c.models.size() == 1);
    CHECK(c.models[0].family == HamiltonianFamily::Local);
    CHECK(c.models[0].n_qubits == 4);
    CHECK(c.initial_state == PauliEigenstate::YPlus);
    CHECK(c.w.kind == PauliKind::Y);
    CHECK(c.w.site == 1);
    CHECK(c.v.sites.empty());
    CHECK(c.times == std::vector<double>{0.0, 1.0});
    CHECK(c.region.resolve(4).sites() == std::vector<int>{1, 2});
    CHECK(c.thetas == std::vector<double>{0.5});
    CHECK(c.entropy_fractions.first == 0.1);
    CHECK(c.entropy_fractions.second == 0.5);
    CHECK(c.propagator == "auto");
    CHECK(c.krylov.max_dim == 60);
    CHECK(c.krylov.tolerance == 1e-12);
    CHECK(c.krylov.dt == 0.1);
    CHECK(c.limits.operator_qubits == 13);
    CHECK(c.limits.spectral_qubits == 14);
    CHECK(c.limits.state_qubits == 22);
    CHECK(c.workers == 0);
    CHECK(c.output_dir == ".");
}

TEST_CASE("experiment kinds round-trip through their names") {
    for (ExperimentKind k :
         {ExperimentKind::Lightcone, ExperimentKind::Entropy, ExperimentKind::OperatorState,
          ExperimentKind::OperatorSize, ExperimentKind::Thermalization,
          ExperimentKind::Velocities, ExperimentKind::FiniteSize}) {
        CHECK(experiment_kind_from_string(to_string(k)) == k);
    }
    CHECK(to_string(ExperimentKind::OperatorState) == "operator-state");
    CHECK_THROWS_AS(experiment_kind_from_string("otoc"), config_error);
}

TEST_CASE("missing required keys are reported by name") {
    check_config_error([] { parse_config_text("{}"); }, "experiment");
    check_config_error(
        [] { parse_config_text(R"({"experiment": "entropy"})"); }, "models");
    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}]})");
        },
        "times");
    // A model without any qubit count, local or top-level, is incomplete.
    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","models":[{"family":"local"}],"times":{"values":[0]}})");
        },
        "n_qubits");
}

TEST_CASE("unknown keys are rejected at every level") {
    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],"times":{"values":[0]},"blossom":1})");
        },
        "blossom");
    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local","coupling":2}],"times":{"values":[0]}})");
        },
        "models[0].coupling");
    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],"times":{"values":[0],"stride":2}})");
        },
        "times.stride");
}

TEST_CASE("model fields are family-specific") {
    auto with_model = [](const std::string& model) {
        return std::string(R"({"experiment":"entropy","n_qubits":4,"models":[)") + model +
               R"(],"times":{"values":[0]}})";
    };

    const ExperimentConfig pl =
        parse_config_text(with_model(R"({"family":"powerlaw","alpha":1.5,"kac":false})"));
    CHECK(pl.models[0].family == HamiltonianFamily::Powerlaw);
    CHECK(pl.models[0].alpha == 1.5);
    CHECK_FALSE(pl.models[0].kac_normalized);

    // alpha given as the string "inf" collapses to the local family.
    const ExperimentConfig collapsed =
        parse_config_text(with_model(R"({"family":"powerlaw","alpha":"inf"})"));
    CHECK(collapsed.models[0].family == HamiltonianFamily::Local);
    CHECK(collapsed.models[0].label() == "local");

    const ExperimentConfig fs =
        parse_config_text(with_model(R"({"family":"fast-scrambler","gamma":1.0})"));
    CHECK(fs.models[0].gamma == 1.0);
    CHECK(fs.models[0].label() == "fast-scrambler-g1");

    const ExperimentConfig tuned =
        parse_config_text(with_model(R"({"family":"local","j":2.0,"h_x":-0.9,"h_z":0.1})"));
    CHECK(tuned.models[0].j_coupling == 2.0);
    CHECK(tuned.models[0].h_x == -0.9);
    CHECK(tuned.models[0].h_z == 0.1);

    check_config_error([&] { parse_config_text(with_model(R"({"family":"powerlaw"})")); },
                       "alpha");
    check_config_error(
        [&] { parse_config_text(with_model(R"({"family":"local","alpha":2.0})")); },
        "alpha");
    check_config_error(
        [&] { parse_config_text(with_model(R"({"family":"powerlaw","alpha":1,"gamma":1})")); },
        "gamma");
    check_config_error([&] { parse_config_text(with_model(R"({"family":"ising"})")); },
                       "family");
}

TEST_CASE("a top-level qubit count rewrites every model") {
    const ExperimentConfig c = parse_config_text(
        R"({"experiment":"entropy","n_qubits":6,
            "models":[{"family":"local","n_qubits":4},{"family":"fast-scrambler"}],
            "times":{"values":[0]}})");
    CHECK(c.models[0].n_qubits == 6);
    CHECK(c.models[1].n_qubits == 6);
}

TEST_CASE("time grids come as explicit values or a uniform range") {
    const ExperimentConfig vals = parse_config_text(kMinimal);
    CHECK(vals.times == std::vector<double>{0.0, 1.0});

    const ExperimentConfig range = parse_config_text(
        R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],
            "times":{"start":0,"stop":10,"step":0.25}})");
    CHECK(range.times.size() == 41);
    CHECK(range.times.front() == 0.0);
    CHECK(range.times.back() == 10.0);

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[0,1],"stop":10,"step":1}})");
        },
        "times");
    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[1,1]}})");
        },
        "increasing");
}

TEST_CASE("uniform grids include an endpoint that lands on the step") {
    const std::vector<double> grid = uniform_time_grid(0.0, 0.3, 0.1);
    CHECK(grid.size() == 4);
    CHECK(grid[0] == 0.0);
    CHECK(grid[3] == doctest::Approx(0.3).epsilon(1e-12));
    CHECK_THROWS_AS(uniform_time_grid(0.0, 1.0, 0.0), config_error);
    CHECK_THROWS_AS(uniform_time_grid(1.0, 0.0, 0.5), config_error);
}

TEST_CASE("region selectors resolve against the chain length") {
    auto with_region = [](const std::string& region) {
        return std::string(
                   R"({"experiment":"entropy","n_qubits":5,"models":[{"family":"local"}],"times":{"values":[0]},"region":)") +
               region + "}";
    };
    CHECK(parse_config_text(with_region(R"("left-half")")).region.resolve(5).sites() ==
          std::vector<int>{1, 2});
    CHECK(parse_config_text(with_region(R"("middle-pair")")).region.resolve(5).sites() ==
          std::vector<int>{2, 3});
    CHECK(parse_config_text(with_region(R"({"prefix":3})")).region.resolve(5).sites() ==
          std::vector<int>{1, 2, 3});
    CHECK(parse_config_text(with_region(R"({"range":[2,4]})")).region.resolve(5).sites() ==
          std::vector<int>{2, 3, 4});
    CHECK(parse_config_text(with_region(R"({"sites":[1,4]})")).region.resolve(5).sites() ==
          std::vector<int>{1, 4});
    check_config_error([&] { parse_config_text(with_region(R"("everything")")); },
                       "region");
    // The whole chain is not a proper subsystem.
    check_config_error([&] { parse_config_text(with_region(R"({"prefix":5})")); },
                       "region");
}

TEST_CASE("overrides patch dotted paths with typed values") {
    const ExperimentConfig c = parse_config_text(
        kMinimal, {{"n_qubits", "6"},
                   {"models.0.h_x", "-0.5"},
                   {"times.values", "[0, 2, 4]"},
                   {"state", "Z+"},
                   {"name", "patched"}});
    CHECK(c.models[0].n_qubits == 6);
    CHECK(c.models[0].h_x == -0.5);
    CHECK(c.times == std::vector<double>{0.0, 2.0, 4.0});
    CHECK(c.initial_state == PauliEigenstate::ZPlus);
    CHECK(c.name == "patched");

    check_config_error([] { parse_config_text(kMinimal, {{"models.7.h_x", "1"}}); },
                       "models.7.h_x");
    check_config_error([] { parse_config_text(kMinimal, {{"models.first.h_x", "1"}}); },
                       "index");
    check_config_error([] { parse_config_text(kMinimal, {{"typo_key", "1"}}); },
                       "typo_key");
    check_config_error([] { parse_config_text(kMinimal, {{"", "1"}}); }, "override");
}

TEST_CASE("rendered configs parse back to the same resolved form") {
    const ExperimentConfig c = parse_config_text(
        kMinimal, {{"experiment", "lightcone"}, {"thetas", "[0.1, 0.5]"}});
    const std::string once = resolved_json_text(c);
    const std::string twice = resolved_json_text(parse_config_text(once));
    CHECK(once == twice);
}

TEST_CASE("presets are enumerable, valid, and round-trip") {
    const auto names = preset_names();
    CHECK(names.size() >= 8);
    for (const char* expected :
         {"fig1a-lightcone", "fig1b-entropy", "fig3-operator-state", "fig4-opsize",
          "sm-thermalization", "sm-velocities", "sm-lightcones", "sm-finite-size"}) {
        bool found = false;
        for (const auto& n : names) found = found || n == expected;
        CHECK_MESSAGE(found, "missing preset " << expected);
    }
    for (const auto& name : names) {
        const ExperimentConfig c = preset_config(name);
        CHECK(c.name == name);
        CHECK_NOTHROW(c.validate());
        const std::string text = resolved_json_text(c);
        CHECK(resolved_json_text(parse_config_text(text)) == text);
    }
    CHECK_THROWS_AS(preset_config("fig9-unknown"), config_error);
    CHECK(render_preset_list().find("sm-velocities") != std::string::npos);
}

TEST_CASE("a config may start from a preset and override pieces") {
    const ExperimentConfig c = parse_config_text(
        R"({"preset":"fig4-opsize","n_qubits":6,"times":{"values":[0,1]}})");
    CHECK(c.kind == ExperimentKind::OperatorSize);
    CHECK(c.name == "fig4-opsize");
    CHECK(c.models.size() == 4);
    for (const auto& m : c.models) CHECK(m.n_qubits == 6);
    CHECK(c.times == std::vector<double>{0.0, 1.0});

    check_config_error(
        [] { parse_config_text(R"({"preset":"fig9-unknown"})"); }, "fig9-unknown");
}

TEST_CASE("validation rejects inconsistent experiments") {
    // Duplicate model labels at the same size would collide in output tables.
    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,
                    "models":[{"family":"local"},{"family":"local"}],
                    "times":{"values":[0]}})");
        },
        "models");

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"lightcone","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[0]},"w":{"pauli":"Y","site":9}})");
        },
        "site");

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"operator-state","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[0]},"v":{"sites":[3,2]}})");
        },
        "sites");

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"thermalization","n_qubits":6,"models":[{"family":"local"}],
                    "times":{"values":[0]},"region":{"prefix":3}})");
        },
        "region");

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"lightcone","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[0]},"thetas":[]})");
        },
        "thetas");

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[0]},"entropy_fractions":[0.5,0.1]})");
        },
        "entropy_fractions");

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[0]},"propagator":"magic"})");
        },
        "propagator");

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[0]},"workers":-2})");
        },
        "workers");

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[0]},"name":"bad/name"})");
        },
        "name");

    check_config_error(
        [] {
            parse_config_text(
                R"({"experiment":"entropy","n_qubits":4,"models":[{"family":"local"}],
                    "times":{"values":[0]},"krylov":{"dt":0}})");
        },
        "krylov");
}

TEST_CASE("config files load with path context in errors") {
    const std::string path = "/tmp/scramble-test-config.json";
    {
        std::ofstream out(path);
        out << kMinimal;
    }
    const ExperimentConfig c = load_config_file(path);
    CHECK(c.models[0].n_qubits == 4);

    check_config_error([] { load_config_file("/tmp/scramble-absent.json"); },
                       "/tmp/scramble-absent.json");

    const std::string broken = "/tmp/scramble-test-broken.json";
    {
        std::ofstream out(broken);
        out << "{not json";
    }
    check_config_error([&] { load_config_file(broken); }, broken);
}
