#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "origami/script.hpp"

namespace origami::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(ORIGAMI_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline script::Script load_script(const std::string& name) {
  return script::parse(read_file(fixture_path(name)));
}

inline ConstructionTrace run_fixture(const std::string& name) {
  return script::run(load_script(name));
}

/// Snapshot after step k (1-based, top-level steps).
inline const AbstractOrigami& step(const ConstructionTrace& t, std::size_t k) {
  return t.steps.at(k - 1).snapshot;
}

inline constexpr const char* kCompositeFixtures[] = {
    "squash.ori",          "inside_reverse.ori",      "outside_reverse.ori",
    "rabbit_ear.ori",      "pleat_crimp_outside.ori", "pleat_crimp_inside.ori"};

}  // namespace origami::testing
