#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

inline std::string fixture_path(std::string const& name) {
  return std::string(RANK74_DATA_DIR) + "/fixtures/" + name;
}

inline std::string read_fixture(std::string const& name) {
  std::ifstream      in(fixture_path(name));
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline nlohmann::json json_fixture(std::string const& name) {
  return nlohmann::json::parse(read_fixture(name));
}
