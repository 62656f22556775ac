#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "docalc/app/config.hpp"
#include "json.hpp"

namespace docalc::app {

inline constexpr const char* kToolVersion = "0.1.0";

struct Artifact {
  std::string name;  // file name inside the output directory
  std::string content;
};

std::string sha256_hex(const std::string& data);

/// Output directory: `out` from the config, else $DOCALC_OUT, else ".".
std::filesystem::path output_directory(const RunConfig& c);

/// Subcommand, full configuration, seed, version, UTC timestamp and the
/// SHA-256 of every artifact.
nlohmann::json make_manifest(const std::string& subcommand, const RunConfig& c, const std::vector<Artifact>& files);

/// Writes every artifact and manifest.json; returns the manifest path.
std::filesystem::path write_run(const std::filesystem::path& dir, const std::string& subcommand, const RunConfig& c,
                                const std::vector<Artifact>& files);

}  // namespace docalc::app
