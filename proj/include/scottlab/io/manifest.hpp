#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

namespace scottlab::io {

/// Run manifest: command, fully resolved configuration, seeds, versions,
/// wall time, per-stage timings and the digest of every output file.  The
/// numeric outputs named here reproduce bit-for-bit when the command reruns
/// with the same inputs on the same build.
struct RunManifest {
    std::string command;
    std::map<std::string, std::string> config;
    std::uint64_t seed = 0;
    std::string version;
    std::string simd_backend;
    double wall_seconds = 0.0;
    std::map<std::string, double> stage_seconds;
    std::map<std::string, std::string> output_digests;  // path (relative) -> sha256

    void add_output(const std::filesystem::path& path, const std::filesystem::path& base);
    void write(const std::filesystem::path& path) const;
};

}  // namespace scottlab::io
