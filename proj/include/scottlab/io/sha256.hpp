#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

namespace scottlab::io {

/// Hex SHA-256 digest of a buffer / file (for manifest output pinning).
std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::filesystem::path& path);

}  // namespace scottlab::io
