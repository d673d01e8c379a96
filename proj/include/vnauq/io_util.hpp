#pragma once

#include <filesystem>
#include <string>

#include "vnauq/errors.hpp"

namespace vnauq {

/// Reads a whole file; throws Error when it cannot be opened.
std::string read_file(const std::filesystem::path& path);

/// Writes text to a file; throws Error on failure.
void write_file(const std::filesystem::path& path, const std::string& text);

} // namespace vnauq
