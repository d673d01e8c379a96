#pragma once

#include <filesystem>
#include <string>

#include "vnauq/mc_engine.hpp"

namespace vnauq {

/// Parses a scenario configuration (JSON). base_dir resolves any relative
/// .s1p path named by the "dut" section. Throws ConfigError on invalid
/// content and Error on unreadable referenced files.
Scenario parse_scenario(const std::string& text, const std::filesystem::path& base_dir);

/// Reads and parses a scenario file; relative paths inside resolve against
/// the file's own directory.
Scenario load_scenario(const std::filesystem::path& file);

} // namespace vnauq
