#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "json.hpp"
#include "trilin/jet.hpp"

namespace trilin {

struct RunConfig {
  std::string command;  // classify | equiv | verify-transform | invariance | eliminate
  std::string path;
  std::optional<Degree> deg;  // falls back to the file's deg:, then 9
  std::size_t trials = 100;
  std::uint64_t seed = 0;
  unsigned ansatz_deg = 2;
  bool json = false;
  bool auto_canonical = false;
  // eliminate without a file
  std::string poly, vars, index;
};

inline constexpr Degree kDefaultDegree = 9;

struct Report {
  int exit_code = 0;  // 0 iff affirmative and no diagnostics; 2 on input errors
  nlohmann::json data;
  std::string text;
};

// Never throws; failures become diagnostics.
Report run_command(const RunConfig& cfg);

}  // namespace trilin
