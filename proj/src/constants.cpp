#include "lipq/constants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "lipq/sampling.hpp"

namespace lipq {

double lipschitz_tail_threshold(int k, int n, double eps) {
  if (k < 1 || k >= n) throw domain_error("lipschitz_tail_threshold: need 1 <= k < n");
  if (!(eps > 0.0)) throw domain_error("lipschitz_tail_threshold: eps must be positive");
  return std::pow(2.0 * k / (n * eps), static_cast<double>(n) / (n - k));
}

double flatness_radius(int k, int n, Complex a_k) {
  if (n < 1 || k < 0 || k >= n) throw domain_error("flatness_radius: need 0 <= k < n");
  double mag = std::abs(a_k);
  if (mag == 0.0) return 0.0;
  double eps = 1.0 / (2.0 * n * mag);
  double tail = (k == 0) ? 0.0 : lipschitz_tail_threshold(k, n, eps);
  double strict = std::pow(2.0 * (k + 1) / eps, static_cast<double>(n) / (n - k)) * (1.0 + 1e-9);
  return std::max(tail, strict);
}

namespace {

void require_monic(const Polynomial& p) {
  if (std::abs(p.lead() - Complex(1.0, 0.0)) > 1e-12)
    throw domain_error("expected a monic polynomial");
}

}  // namespace

double choose_identity_radius(const Polynomial& monic, const std::vector<CriticalPoint>& cps) {
  require_monic(monic);
  int n = monic.degree();
  if (n < 1) throw domain_error("choose_identity_radius: degree must be >= 1");
  double dmax = 0.0;
  for (int k = 0; k < n; ++k) dmax = std::max(dmax, flatness_radius(k, n, monic.coeffs[k]));
  double zmax = 0.0;
  for (const auto& cp : cps) zmax = std::max(zmax, std::abs(cp.z));
  return std::max({2.0, 1.0 + dmax, 2.0 * (1.0 + zmax)});
}

double ball_margin(const CriticalPoint& cp, int n) {
  double sum = 0.0;
  for (std::size_t l = 1; l < cp.q.size(); ++l) sum += std::abs(cp.q[l]);
  if (n <= cp.mult || sum <= 0.0) return 1.0;
  return std::abs(cp.q[0]) / (2.0 * (1.0 + n) * sum);
}

double choose_ball_radius(const Polynomial& monic, double identity_radius,
                          const std::vector<CriticalPoint>& cps) {
  if (cps.empty()) return 0.5;
  require_monic(monic);
  int n = monic.degree();

  double sep = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cps.size(); ++i)
    for (std::size_t j = i + 1; j < cps.size(); ++j)
      sep = std::min(sep, std::abs(cps[i].z - cps[j].z));

  double bound = 1.0;
  for (const auto& cp : cps) {
    bound = std::min(bound, std::pow(ball_margin(cp, n), cp.mult));
    double room = (identity_radius - std::abs(cp.z)) / 2.0;
    if (!(room > 0.0)) throw numerical_error("choose_ball_radius: critical point outside identity disc");
    bound = std::min(bound, room);
  }
  bound = std::min(bound, sep / 4.0);

  double r = 0.5 * bound;
  auto coeffs_dominated = [&](double rr) {
    for (const auto& cp : cps) {
      double sum = 0.0, rp = rr;
      for (std::size_t l = 1; l < cp.q.size(); ++l) {
        sum += std::abs(cp.q[l]) * rp;
        rp *= rr;
      }
      if (sum > 0.5 * std::abs(cp.q[0])) return false;
    }
    return true;
  };
  int guard = 0;
  while (!coeffs_dominated(r)) {
    r /= 2.0;
    if (++guard > 2000) throw numerical_error("choose_ball_radius: halving did not terminate");
  }
  return r;
}

ConstructionConstants build_constants(const Polynomial& monic,
                                      const std::vector<CriticalPoint>& cps) {
  require_monic(monic);
  int n = monic.degree();
  ConstructionConstants c;
  c.degree = n;
  c.flatness.resize(n);
  for (int k = 0; k < n; ++k) c.flatness[k] = flatness_radius(k, n, monic.coeffs[k]);
  c.identity_radius = choose_identity_radius(monic, cps);
  c.outer_radius = std::pow(2.0 * c.identity_radius, n);
  if (!std::isfinite(c.outer_radius) || !std::isfinite(10.0 * c.outer_radius))
    throw numerical_error("build_constants: 2^n R^n overflows double range for this degree");
  c.overlap_radius_1 = c.outer_radius + 1.0;
  c.overlap_radius_2 = c.outer_radius + 2.0;
  c.ball_radius = choose_ball_radius(monic, c.identity_radius, cps);
  for (const auto& cp : cps) {
    c.ball_margins.push_back(ball_margin(cp, n));
    c.ball_colips.push_back(std::pow(c.ball_radius, cp.mult - 1) * std::abs(cp.q[0]) / 2.0);
  }
  if (!c.ball_colips.empty())
    c.min_ball_colip = *std::min_element(c.ball_colips.begin(), c.ball_colips.end());
  return c;
}

Region classify_region(Complex z, const ConstructionConstants& c,
                       const std::vector<CriticalPoint>& cps) {
  for (std::size_t j = 0; j < cps.size(); ++j)
    if (std::abs(z - cps[j].z) <= c.ball_radius)
      return Region{RegionKind::CriticalBall, static_cast<int>(j)};
  double mod = std::abs(z);
  if (mod <= c.identity_radius) return Region{RegionKind::InnerIdentity, -1};
  if (mod < c.outer_radius) return Region{RegionKind::Transition, -1};
  return Region{RegionKind::Outer, -1};
}

BallClaim check_ball_claim(const ConstructionConstants& c,
                           const std::vector<CriticalPoint>& cps, int samples_per_ball,
                           std::uint64_t seed) {
  BallClaim claim;
  double r = c.ball_radius;
  for (std::size_t i = 0; i < cps.size(); ++i)
    for (std::size_t j = i + 1; j < cps.size(); ++j)
      if (!(std::abs(cps[i].z - cps[j].z) > 4.0 * r)) claim.disjoint = false;
  for (std::size_t j = 0; j < cps.size(); ++j) {
    if (!(std::abs(cps[j].z) + 2.0 * r < c.identity_radius)) claim.inside = false;
    if (r > std::pow(c.ball_margins[j], cps[j].mult) * (1.0 + 1e-12)) claim.margin_ok = false;

    std::mt19937_64 eng(derive_seed(seed, "ball-claim", cps[j].z));
    double q0 = std::abs(cps[j].q[0]);
    Polynomial q(cps[j].q);
    for (int s = 0; s < samples_per_ball; ++s) {
      Complex y = (s % 8 == 0) ? cps[j].z + r * sample_annulus(eng, 1.0, 1.0)
                               : sample_in_ball(eng, cps[j].z, r);
      double mag = std::abs(eval(q, y - cps[j].z));
      if (mag < 0.5 * q0 * (1.0 - 1e-9) || mag > 2.0 * q0 * (1.0 + 1e-9)) claim.bounded_ok = false;
    }
  }
  return claim;
}

}  // namespace lipq
