#include "lipq/sampling.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace lipq {

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdull;
  h ^= h >> 33;
  return h;
}

std::uint64_t mix_double(std::uint64_t h, double v) {
  return mix(h, std::bit_cast<std::uint64_t>(v));
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag) {
  std::uint64_t h = mix(0x243f6a8885a308d3ull, base);
  for (char c : tag) h = mix(h, static_cast<std::uint64_t>(static_cast<unsigned char>(c)));
  return h;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, Complex z) {
  std::uint64_t h = derive_seed(base, tag);
  h = mix_double(h, z.real());
  h = mix_double(h, z.imag());
  return h;
}

std::uint64_t derive_seed(std::uint64_t base, std::string_view tag, Complex z, double extra) {
  return mix_double(derive_seed(base, tag, z), extra);
}

double uniform(std::mt19937_64& eng, double lo, double hi) {
  std::uniform_real_distribution<double> d(lo, hi);
  return d(eng);
}

double log_uniform(std::mt19937_64& eng, double lo, double hi) {
  if (!(lo > 0.0) || !(hi >= lo)) throw domain_error("log_uniform: need 0 < lo <= hi");
  return std::exp(uniform(eng, std::log(lo), std::log(hi)));
}

Complex sample_in_ball(std::mt19937_64& eng, Complex center, double rho, double floor_frac) {
  double s = log_uniform(eng, floor_frac * rho, rho);
  double th = uniform(eng, 0.0, 2.0 * std::numbers::pi);
  return center + s * Complex(std::cos(th), std::sin(th));
}

Complex sample_annulus(std::mt19937_64& eng, double lo, double hi) {
  double s = log_uniform(eng, lo, hi);
  double th = uniform(eng, 0.0, 2.0 * std::numbers::pi);
  return s * Complex(std::cos(th), std::sin(th));
}

std::optional<double> shrink_search(const std::function<bool(double)>& pred, double rho0,
                                    double floor) {
  for (double rho = rho0; rho >= floor; rho /= 2.0)
    if (pred(rho)) return rho;
  return std::nullopt;
}

std::vector<Complex> stratified_samples(const ConstructionConstants& c,
                                        const std::vector<CriticalPoint>& cps, int count,
                                        std::mt19937_64& eng) {
  std::vector<Complex> out;
  out.reserve(count);
  const double two_pi = 2.0 * std::numbers::pi;
  int strata = 3 + 2 * static_cast<int>(cps.size());  // inner, transition, outer + per-ball pair
  int idx = 0;
  while (static_cast<int>(out.size()) < count) {
    int stratum = idx++ % strata;
    if (stratum == 0) {  // inner identity disc (membership enforced by modulus)
      out.push_back(sample_annulus(eng, 1e-6 * c.identity_radius, c.identity_radius));
    } else if (stratum == 1) {  // transition ring
      out.push_back(sample_annulus(eng, c.identity_radius, c.outer_radius));
    } else if (stratum == 2) {  // outer region
      out.push_back(sample_annulus(eng, c.outer_radius, 10.0 * c.outer_radius));
    } else {
      int ball = (stratum - 3) / 2;
      bool boundary = ((stratum - 3) % 2) == 1;
      double th = uniform(eng, 0.0, two_pi);
      double s = boundary ? c.ball_radius
                          : log_uniform(eng, 1e-6 * c.ball_radius, c.ball_radius);
      out.push_back(cps[ball].z + s * Complex(std::cos(th), std::sin(th)));
    }
  }
  return out;
}

}  // namespace lipq
