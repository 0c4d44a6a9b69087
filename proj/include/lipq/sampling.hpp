#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "lipq/constants.hpp"
#include "lipq/core.hpp"

namespace lipq {

// Deterministic per-check stream: hashes a base seed with a tag and any
// numeric payload so independent checks draw independent, reproducible
// samples regardless of execution order.
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, Complex z);
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, Complex z, double extra);

double uniform(std::mt19937_64& eng, double lo, double hi);
double log_uniform(std::mt19937_64& eng, double lo, double hi);  // lo, hi > 0

// Point of B_rho(center) \ {center}: log-uniform radius in
// [floor_frac * rho, rho], uniform angle.
Complex sample_in_ball(std::mt19937_64& eng, Complex center, double rho,
                       double floor_frac = 1e-6);

// Point with log-uniform modulus in [lo, hi] and uniform angle.
Complex sample_annulus(std::mt19937_64& eng, double lo, double hi);

// Geometric shrink search: halve rho from rho0 until the predicate holds;
// empty when rho falls below the floor first.
std::optional<double> shrink_search(const std::function<bool(double)>& pred,
                                    double rho0, double floor);

// Samples stratified across the construction's regions: inside each critical
// ball (log radius), on each ball boundary, the inner identity disc, the
// transition ring, and the outer region up to 10 * outer_radius.
std::vector<Complex> stratified_samples(const ConstructionConstants& c,
                                        const std::vector<CriticalPoint>& cps,
                                        int count, std::mt19937_64& eng);

}  // namespace lipq
