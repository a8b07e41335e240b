#pragma once

#include <json.hpp>

#include <string>

namespace tamecert::pipeline {

/// Serializes like nlohmann::json::dump but prints every float with 17 significant digits.
/// indent < 0 gives a single line.
std::string write_json(const nlohmann::json& value, int indent = 2);

}  // namespace tamecert::pipeline
