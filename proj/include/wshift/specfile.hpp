#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "wshift/weightspec.hpp"

namespace wshift {

/// Parses the JSON spec-file format. Unknown fields, malformed rationals and
/// zero denominators raise ParseError naming the offending field.
WeightSpec parse_spec(const std::string& text);
WeightSpec load_spec(const std::filesystem::path& path);

nlohmann::ordered_json spec_to_json(const WeightSpec& spec);
std::string dump_spec(const WeightSpec& spec);

}  // namespace wshift
