#include "secant/manifest.hpp"

#include "secant/rational.hpp"

#include "json.hpp"

#include <fstream>

namespace secant::manifest {

std::string file_hash(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot hash missing file " + path);
    uint64_t h = 1469598103934665603ULL;
    char buf[4096];
    while (in.read(buf, sizeof buf) || in.gcount() > 0) {
        for (std::streamsize i = 0; i < in.gcount(); ++i) {
            h ^= static_cast<unsigned char>(buf[i]);
            h *= 1099511628211ULL;
        }
        if (!in) break;
    }
    char hex[17];
    snprintf(hex, sizeof hex, "%016llx", static_cast<unsigned long long>(h));
    return std::string("fnv1a:") + hex;
}

void write_manifest(const RunManifest& m, const std::string& output_path) {
    nlohmann::json inputs = nlohmann::json::object();
    for (const auto& [path, hash] : m.inputs) inputs[path] = hash;
    nlohmann::json j = {{"command", m.command},
                        {"inputs", std::move(inputs)},
                        {"seed", m.seed},
                        {"artifact_version", m.artifact_version},
                        {"outputs", m.outputs}};
    std::ofstream out(output_path + ".manifest.json");
    if (!out) throw input_error("cannot write manifest for " + output_path);
    out << j.dump(1) << "\n";
}

}  // namespace secant::manifest
