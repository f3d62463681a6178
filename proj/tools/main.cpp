#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "scramble/config.hpp"
#include "scramble/errors.hpp"
#include "scramble/presets.hpp"
#include "scramble/runner.hpp"
#include "scramble/version.hpp"

namespace {

// Exit codes: 0 success, 2 schema/config, 3 resource limit, 4 numerical, 1 other.
constexpr int kExitConfig = 2;
constexpr int kExitResource = 3;
constexpr int kExitNumerical = 4;
constexpr int kExitOther = 1;

std::vector<std::pair<std::string, std::string>> split_overrides(
    const std::vector<std::string>& raw) {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& item : raw) {
        const auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw scramble::config_error("override '" + item + "' must look like key=value");
        out.emplace_back(item.substr(0, eq), item.substr(eq + 1));
    }
    return out;
}

scramble::ExperimentConfig load(const std::string& source,
                                const std::vector<std::string>& sets) {
    const auto overrides = split_overrides(sets);
    if (!std::filesystem::exists(source)) {
        // Bare preset names run without a config file.
        const auto names = scramble::preset_names();
        if (std::find(names.begin(), names.end(), source) != names.end())
            return scramble::parse_config_text("{\"preset\":\"" + source + "\"}", overrides);
    }
    return scramble::load_config_file(source, overrides);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact scrambling dynamics for spin-1/2 Ising chains"};
    app.require_subcommand(1);
    app.set_version_flag("--version", scramble::kVersion);

    std::string config_source;
    std::string out_dir;
    int workers = -1;
    std::vector<std::string> sets;

    auto* run = app.add_subcommand("run", "Execute a config file or preset and write CSVs");
    run->add_option("config", config_source, "Config file path or preset name")->required();
    run->add_option("--out", out_dir, "Output directory (overrides the config)");
    run->add_option("--workers", workers,
                    "Worker threads (overrides the config; 0 = SCRAMBLE_WORKERS or 1)");
    run->add_option("--set", sets, "Override a config key by dotted path, key=value");

    auto* presets = app.add_subcommand("presets", "List presets with descriptions");

    auto* validate =
        app.add_subcommand("validate", "Check a config and print its resolved form");
    validate->add_option("config", config_source, "Config file path or preset name")
        ->required();
    validate->add_option("--set", sets, "Override a config key by dotted path, key=value");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (presets->parsed()) {
            std::fputs(scramble::render_preset_list().c_str(), stdout);
            return 0;
        }
        scramble::ExperimentConfig config = load(config_source, sets);
        if (validate->parsed()) {
            const std::string text = scramble::resolved_json_text(config);
            std::fputs(text.c_str(), stdout);
            std::fputc('\n', stdout);
            return 0;
        }
        if (!out_dir.empty()) config.output_dir = out_dir;
        if (workers >= 0) config.workers = workers;
        config.validate();
        const scramble::RunResult result = scramble::run_and_write(config);
        for (const auto& path : result.written_files) std::printf("%s\n", path.c_str());
        return 0;
    } catch (const scramble::config_error& e) {
        std::fprintf(stderr, "config error: %s\n", e.what());
        return kExitConfig;
    } catch (const scramble::resource_limit_error& e) {
        std::fprintf(stderr, "resource limit: %s\n", e.what());
        return kExitResource;
    } catch (const scramble::numerical_error& e) {
        std::fprintf(stderr, "numerical error: %s\n", e.what());
        return kExitNumerical;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitOther;
    }
}
