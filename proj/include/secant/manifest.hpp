#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace secant::manifest {

inline constexpr const char* kArtifactVersion = "0.1.0";

// FNV-1a over the file bytes, hex encoded; stable and dependency-free.
std::string file_hash(const std::string& path);

struct RunManifest {
    std::string command;
    std::vector<std::pair<std::string, std::string>> inputs;  // (path, hash)
    uint64_t seed = 0;
    std::string artifact_version = kArtifactVersion;
    std::vector<std::string> outputs;
};

// Writes <output>.manifest.json next to the named output file.
void write_manifest(const RunManifest& m, const std::string& output_path);

}  // namespace secant::manifest
