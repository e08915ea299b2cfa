#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace propsim::cli {

/// Flat key=value record written next to every command's outputs. Keys keep
/// insertion order and nothing time-dependent is recorded, so reruns with the
/// same flags produce byte-identical manifests.
struct RunManifest {
  std::string command;
  std::string tool_version;
  std::optional<std::uint64_t> seed;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  void set(std::string key, std::string value) {
    parameters.emplace_back(std::move(key), std::move(value));
  }
  std::string render() const;
  void write(const std::string& path) const;
};

/// Parses a rendered manifest back into key/value lines (test helper).
std::vector<std::pair<std::string, std::string>> parse_manifest(const std::string& text);

}  // namespace propsim::cli
