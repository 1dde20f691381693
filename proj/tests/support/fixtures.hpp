#pragma once

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace ransim::test_support {

inline std::string fixture_path(const std::string& name) { return std::string(RANSIM_FIXTURE_DIR) + "/" + name; }

/// "name value" lines.
inline std::map<std::string, std::string> load_vectors(const std::string& name) {
  std::ifstream in(fixture_path(name));
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::map<std::string, std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string key, value;
    if (ls >> key >> value) out[key] = value;
  }
  return out;
}

}  // namespace ransim::test_support
