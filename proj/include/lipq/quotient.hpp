#pragma once

#include <vector>

#include "lipq/constants.hpp"
#include "lipq/core.hpp"
#include "lipq/homeo.hpp"
#include "lipq/polynomial.hpp"

namespace lipq {

// The composed map F = P o h, where h is the amended plane homeomorphism
// built for P. Non-monic P is handled by the monic reduction: build for
// Q = P / lead, evaluate lead * (Q o h).
class QuotientMap {
public:
  static QuotientMap build(const Polynomial& p, const RootOptions& opts = {});

  // P o h1 (radial homeomorphism only, balls not amended).
  Complex base_value(Complex z) const;

  // Flat-sum form of the base map, valid for |z| >= outer_radius:
  // lead * (a_0 + winding_map(n, z) + sum_k a_k radial_power(k, n, z)).
  // Throws outside its domain.
  Complex outer_form(Complex z) const;

  // P o h2. This is the map all metric certificates target.
  Complex value(Complex z) const;

  // Specialized form inside ball j:
  // lead * (P(z_j) + r^{m-1} winding_map(m, z - z_j) * Q_j(h2(z))).
  // Throws when z is outside the closed ball.
  Complex ball_form(Complex z, int ball) const;

  // Full preimage of w under the composed map: all-roots solve of the monic
  // polynomial, pulled back through the exact inverse homeomorphism. Each
  // returned point satisfies |value(z) - w| < 1e-7 (1 + |w|).
  std::vector<Complex> fiber(Complex w) const;

  const Polynomial& monic() const { return monic_; }
  Complex lead() const { return lead_; }
  const std::vector<CriticalPoint>& cps() const { return cps_; }
  const ConstructionConstants& constants() const { return consts_; }
  const PlaneHomeomorphism& homeo() const { return h2_; }
  const PlaneHomeomorphism& base_homeo() const { return h1_; }
  bool linear_shortcircuit() const { return monic_.degree() == 1; }

private:
  Polynomial monic_;
  Complex lead_{1.0, 0.0};
  std::vector<CriticalPoint> cps_;
  ConstructionConstants consts_;
  PlaneHomeomorphism h1_;
  PlaneHomeomorphism h2_;
  RootOptions opts_;
};

}  // namespace lipq
