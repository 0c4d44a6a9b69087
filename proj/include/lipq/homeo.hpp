#pragma once

#include <vector>

#include "lipq/constants.hpp"
#include "lipq/core.hpp"
#include "lipq/polynomial.hpp"

namespace lipq {

// Increasing piecewise radial profile:
//   t                                   on [0, R]
//   (t - R)/(2^n R^{n-1} - 1) + R       on [R, 2^n R^n]
//   t^{1/n}                             on [2^n R^n, inf)
// Continuous at both junctions (value 2R at the outer one). Degenerates to
// the identity when n = 1.
struct RadialProfile {
  double identity_radius = 2.0;
  int degree = 2;

  double junction() const;          // 2^n R^n
  double value(double t) const;     // throws for t < 0
  double inverse(double s) const;   // exact piecewise inverse
};

// Plane homeomorphism built from a radial profile, optionally amended inside
// the critical balls B_r(z_j) by z_j + r^{1-1/m} |z-z_j|^{1/m} e^{i arg(z-z_j)}
// (each ball maps onto itself, fixing z_j and the boundary pointwise).
class PlaneHomeomorphism {
public:
  static PlaneHomeomorphism radial(const RadialProfile& profile);
  static PlaneHomeomorphism amended(const RadialProfile& profile,
                                    std::vector<CriticalPoint> cps, double ball_radius);

  Complex map(Complex z) const;
  Complex inverse(Complex w) const;  // closed form, exact branch by branch
  bool amends_balls() const { return amend_; }
  const RadialProfile& profile() const { return profile_; }

private:
  RadialProfile profile_;
  std::vector<CriticalPoint> cps_;
  double ball_radius_ = 0.0;
  bool amend_ = false;

  int ball_index(Complex z) const;  // -1 when outside every ball
};

}  // namespace lipq
