#include "scottlab/io/manifest.hpp"

#include <fstream>

#include <json.hpp>

#include "scottlab/io/sha256.hpp"

namespace scottlab::io {

void RunManifest::add_output(const std::filesystem::path& path,
                             const std::filesystem::path& base) {
    output_digests[std::filesystem::relative(path, base).generic_string()] = sha256_file(path);
}

void RunManifest::write(const std::filesystem::path& path) const {
    nlohmann::ordered_json j;
    j["command"] = command;
    j["version"] = version;
    j["seed"] = seed;
    j["simd_backend"] = simd_backend;
    j["config"] = config;
    j["outputs"] = output_digests;
    j["wall_seconds"] = wall_seconds;
    j["stage_seconds"] = stage_seconds;
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << j.dump(2) << '\n';
}

}  // namespace scottlab::io
