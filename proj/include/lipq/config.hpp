#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lipq/core.hpp"
#include "lipq/polynomial.hpp"

namespace lipq {

// Job configuration. Loaded from a JSON file that is either a bare array of
// [re, im] coefficient pairs (ascending degree) or an object with the keys
// below; command-line flags override file values.
struct JobConfig {
  std::optional<Polynomial> polynomial;
  std::uint64_t seed = 0xACCE55;
  int samples = 256;
  double force_c = 0.0;  // 0 = off
  std::string suite = "all";
  std::string out;       // empty = stdout
  bool grid_include_h2 = false;
  double multiplicity_tol = 1e-7;
};

// Parses and schema-validates. Malformed content -> config error; unreadable
// file -> io error.
JobConfig load_config(const std::string& path);

// Validates a parsed coefficient list (non-empty, finite entries).
Polynomial polynomial_from_pairs(const std::vector<std::pair<double, double>>& pairs);

}  // namespace lipq
