#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ransim/harness/scenario.hpp"

namespace ransim {

/// disaster, flash_crowd, ntn, zta
std::vector<std::string_view> preset_names();

/// The bundled scenario document, or empty for an unknown name.
std::optional<std::string_view> preset_json(std::string_view name);

/// Throws Error(validation_error) for an unknown name.
ScenarioConfig load_preset(std::string_view name);

/// A path to an existing file, otherwise a preset name.
ScenarioConfig resolve_scenario(const std::string& file_or_preset);

}  // namespace ransim
