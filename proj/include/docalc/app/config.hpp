#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace docalc::app {

/// Bad flags, unknown subcommands or malformed config. Maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Flat key=value settings. Keys mirror the long flag names without dashes.
class RunConfig {
 public:
  /// One "key = value" per line; '#' starts a comment; blank lines ignored.
  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::string& path);

  void set(const std::string& key, std::string value) { values_[key] = std::move(value); }
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  const std::map<std::string, std::string>& values() const { return values_; }
  /// Later settings win.
  void merge(const RunConfig& over);

  std::string text(const std::string& key, const std::string& fallback) const;
  double real(const std::string& key, double fallback) const;
  std::int64_t integer(const std::string& key, std::int64_t fallback) const;
  std::uint64_t count(const std::string& key, std::uint64_t fallback) const;
  bool flag(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace docalc::app
