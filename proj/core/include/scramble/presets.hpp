#pragma once

#include <string>
#include <vector>

#include "scramble/config.hpp"

namespace scramble {

struct PresetInfo {
    std::string name;
    std::string description;
};

// Catalog order is presentation order: figure presets first, then the
// supplementary studies.
const std::vector<PresetInfo>& preset_catalog();

std::vector<std::string> preset_names();

// Throws config_error for unknown names.
ExperimentConfig preset_config(const std::string& name);

// "name  description" lines for the CLI.
std::string render_preset_list();

} // namespace scramble
