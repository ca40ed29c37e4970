#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json_fwd.hpp>

namespace nlsenergy::cli {

/// Lower-case hex SHA-256 of the bytes.
std::string sha256_hex(std::string_view bytes);

/// Writes through a temporary sibling and renames it into place.
void write_file_atomically(const std::filesystem::path& path, std::string_view contents);

std::string read_file(const std::filesystem::path& path);

/// Program and library versions.
nlohmann::ordered_json software_versions();

/// foo/bar.csv -> foo/bar.meta.json
std::filesystem::path metadata_path(const std::filesystem::path& output);

}  // namespace nlsenergy::cli
