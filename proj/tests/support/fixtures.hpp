#pragma once

// Oracle values frozen by tests/oracle/oracle.py.

#include <fstream>
#include <string>

#include <json.hpp>

namespace dendrop::testing {

inline const nlohmann::json& oracle_fixture() {
  static const nlohmann::json data = [] {
    std::ifstream in(std::string(DENDROP_FIXTURE_DIR) + "/oracle_counts.json");
    return nlohmann::json::parse(in);
  }();
  return data;
}

}  // namespace dendrop::testing
