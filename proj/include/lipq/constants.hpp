#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lipq/core.hpp"
#include "lipq/polynomial.hpp"

namespace lipq {

// Smallest T such that t -> t^{k/n} is (eps/2)-Lipschitz on [T, inf):
// T = (2k / (n eps))^{n/(n-k)}. Requires 1 <= k < n, eps > 0.
double lipschitz_tail_threshold(int k, int n, double eps);

// Radius beyond which the k-th outer-form term a_k * radial_power(k,n,.) is
// (1/(2n))-flat: 0 when a_k = 0, otherwise max of the tail threshold and the
// strict remainder bound (2(k+1)/eps)^{n/(n-k)} * (1+1e-9) with
// eps = 1/(2n|a_k|). Requires 0 <= k <= n-1 (for k = 0 the tail part is 0).
double flatness_radius(int k, int n, Complex a_k);

// Identity radius R = max(2, 1 + max_k flatness_radius, 2(1 + max_j |z_j|)).
// P must be monic with degree >= 1.
double choose_identity_radius(const Polynomial& monic, const std::vector<CriticalPoint>& cps);

// Per-critical-point coefficient margin: |q0| / (2(1+n) sum_{k>=1} |q_k|)
// when that sum is positive and n > m, else 1.
double ball_margin(const CriticalPoint& cp, int n);

// Deterministic critical-ball radius: start from
//   r0 = 1/2 * min(1, min_j margin_j^{m_j}, sep/4, min_j (R - |z_j|)/2)
// and halve until sum_{l>=1} |q_l| r^l <= |q_0|/2 for every j.
// No critical points -> 1/2.
double choose_ball_radius(const Polynomial& monic, double identity_radius,
                          const std::vector<CriticalPoint>& cps);

struct ConstructionConstants {
  int degree = 1;
  double identity_radius = 2.0;          // h is the identity inside this disc
  double outer_radius = 4.0;             // 2^n R^n; pure n-th-root profile beyond
  double overlap_radius_1 = 5.0;         // outer_radius + 1
  double overlap_radius_2 = 6.0;         // outer_radius + 2
  double ball_radius = 0.5;              // critical-ball radius r
  std::vector<double> flatness;          // flatness_radius per coefficient 0..n-1
  std::vector<double> ball_margins;      // per critical point
  std::vector<double> ball_colips;       // r^{m-1} |q0| / 2 per critical point
  std::optional<double> min_ball_colip;  // min of ball_colips when any exist
};

// Assembles every construction constant for a monic polynomial. Throws
// numerical_error when 2^n R^n overflows double range.
ConstructionConstants build_constants(const Polynomial& monic,
                                      const std::vector<CriticalPoint>& cps);

enum class RegionKind { CriticalBall, InnerIdentity, Transition, Outer };

struct Region {
  RegionKind kind = RegionKind::InnerIdentity;
  int ball = -1;  // index into cps when kind == CriticalBall
};

// Region dispatch. Ball boundaries belong to the ball, |z| = R to
// inner-identity, |z| = 2^n R^n to outer (the two forms agree there).
Region classify_region(Complex z, const ConstructionConstants& c,
                       const std::vector<CriticalPoint>& cps);

// Validates the ball-radius claim:
//   disjoint    - closed 2r-balls around distinct critical points disjoint
//   inside      - every closed 2r-ball inside the open identity disc
//   margin_ok   - r <= margin_j^{m_j}
//   bounded_ok  - |Q_j| within [|q0|/2, 2|q0|] on sampled ball points
struct BallClaim {
  bool disjoint = true;
  bool inside = true;
  bool margin_ok = true;
  bool bounded_ok = true;
  bool ok() const { return disjoint && inside && margin_ok && bounded_ok; }
};

BallClaim check_ball_claim(const ConstructionConstants& c,
                           const std::vector<CriticalPoint>& cps,
                           int samples_per_ball, std::uint64_t seed);

}  // namespace lipq
