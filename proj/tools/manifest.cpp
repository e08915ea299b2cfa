#include "manifest.hpp"

#include <fstream>
#include <sstream>

#include "propsim/error.hpp"

namespace propsim::cli {

std::string RunManifest::render() const {
  std::ostringstream out;
  out << "command=" << command << '\n';
  out << "tool_version=" << tool_version << '\n';
  if (seed) out << "seed=" << *seed << '\n';
  for (const auto& [k, v] : parameters) out << "param." << k << '=' << v << '\n';
  for (std::size_t i = 0; i < inputs.size(); ++i) out << "input." << i << '=' << inputs[i] << '\n';
  for (std::size_t i = 0; i < outputs.size(); ++i)
    out << "output." << i << '=' << outputs[i] << '\n';
  return out.str();
}

void RunManifest::write(const std::string& path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::io, "cannot open '" + path + "' for writing");
  out << render();
  if (!out) throw Error(ErrorCode::io, "write failed for '" + path + "'");
}

std::vector<std::pair<std::string, std::string>> parse_manifest(const std::string& text) {
  std::vector<std::pair<std::string, std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    out.emplace_back(line.substr(0, eq), line.substr(eq + 1));
  }
  return out;
}

}  // namespace propsim::cli
