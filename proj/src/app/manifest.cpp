#include "docalc/app/manifest.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <stdexcept>

namespace docalc::app {

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int k = 0; k < len; ++k) {
    out += hex[digest[k] >> 4];
    out += hex[digest[k] & 15];
  }
  return out;
}

std::filesystem::path output_directory(const RunConfig& c) {
  if (c.has("out")) return c.text("out", ".");
  if (const char* env = std::getenv("DOCALC_OUT"); env && *env) return env;
  return ".";
}

nlohmann::json make_manifest(const std::string& subcommand, const RunConfig& c, const std::vector<Artifact>& files) {
  nlohmann::json m;
  m["subcommand"] = subcommand;
  m["config"] = c.values();
  m["seed"] = c.count("seed", 1);
  m["version"] = kToolVersion;
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char stamp[32];
  std::strftime(stamp, sizeof stamp, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
  m["timestamp"] = stamp;
  m["outputs"] = nlohmann::json::array();
  for (const auto& f : files) m["outputs"].push_back({{"file", f.name}, {"sha256", sha256_hex(f.content)}});
  return m;
}

std::filesystem::path write_run(const std::filesystem::path& dir, const std::string& subcommand, const RunConfig& c,
                                const std::vector<Artifact>& files) {
  std::filesystem::create_directories(dir);
  auto write = [&](const std::filesystem::path& p, const std::string& s) {
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << s;
  };
  for (const auto& f : files) write(dir / f.name, f.content);
  const auto path = dir / "manifest.json";
  write(path, make_manifest(subcommand, c, files).dump(2) + "\n");
  return path;
}

}  // namespace docalc::app
