#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lipq/core.hpp"
#include "lipq/polynomial.hpp"
#include "lipq/report.hpp"

namespace lipq {

struct SuiteConfig {
  std::uint64_t seed = 0xACCE55;
  int samples = 256;
  double force_c = 0.0;  // falsifiability override for co-Lipschitz constants
  double multiplicity_tol = 1e-7;
};

// Default verification corpus: z^2, z^3 - 3z, z^4 + z^2 + z + 1,
// z^3 + (1+i)z + 2.
std::vector<Polynomial> default_corpus();
std::string polynomial_label(const Polynomial& p);

// Suite runners append canonical records to the report and return false when
// any check failed.
bool run_construction_suite(const Polynomial& p, const SuiteConfig& cfg, Report& rep);
bool run_metric_suite(const Polynomial& p, const SuiteConfig& cfg, Report& rep);
bool run_demo_suite(const SuiteConfig& cfg, Report& rep);

// The nine acceptance gates. Each runs over the default corpus (or the
// archetype family / demo corpus where the gate is polynomial-independent)
// and reports one line of evidence.
struct CriterionResult {
  int index = 0;
  std::string label;
  bool pass = false;
  std::string detail;
};

std::vector<CriterionResult> run_acceptance(const SuiteConfig& cfg);

}  // namespace lipq
