#include "lipq/homeo.hpp"

#include <cmath>

#include "lipq/winding.hpp"

namespace lipq {

double RadialProfile::junction() const {
  return std::pow(2.0, degree) * std::pow(identity_radius, degree);
}

double RadialProfile::value(double t) const {
  if (t < 0.0) throw domain_error("radial profile argument must be nonnegative");
  if (degree == 1) return t;
  const double r = identity_radius;
  if (t <= r) return t;
  // slope 1/(2^n R^{n-1} - 1) connects (R, R) to (2^n R^n, 2R)
  const double denom = std::pow(2.0, degree) * std::pow(r, degree - 1) - 1.0;
  if (t <= junction()) return r + (t - r) / denom;
  return std::pow(t, 1.0 / degree);
}

double RadialProfile::inverse(double s) const {
  if (s < 0.0) throw domain_error("radial profile argument must be nonnegative");
  if (degree == 1) return s;
  const double r = identity_radius;
  if (s <= r) return s;
  const double denom = std::pow(2.0, degree) * std::pow(r, degree - 1) - 1.0;
  if (s <= 2.0 * r) return r + (s - r) * denom;
  return std::pow(s, static_cast<double>(degree));
}

PlaneHomeomorphism PlaneHomeomorphism::radial(const RadialProfile& profile) {
  PlaneHomeomorphism h;
  h.profile_ = profile;
  return h;
}

PlaneHomeomorphism PlaneHomeomorphism::amended(const RadialProfile& profile,
                                               std::vector<CriticalPoint> cps,
                                               double ball_radius) {
  if (ball_radius <= 0.0) throw domain_error("ball radius must be positive");
  PlaneHomeomorphism h;
  h.profile_ = profile;
  h.cps_ = std::move(cps);
  h.ball_radius_ = ball_radius;
  h.amend_ = true;
  return h;
}

int PlaneHomeomorphism::ball_index(Complex z) const {
  if (!amend_) return -1;
  for (std::size_t j = 0; j < cps_.size(); ++j)
    if (std::abs(z - cps_[j].z) <= ball_radius_) return static_cast<int>(j);
  return -1;
}

Complex PlaneHomeomorphism::map(Complex z) const {
  int j = ball_index(z);
  if (j >= 0) {
    const auto& cp = cps_[static_cast<std::size_t>(j)];
    Complex d = z - cp.z;
    if (d == Complex{0.0, 0.0}) return cp.z;
    const double m = cp.mult;
    // r^{1-1/m} |d|^{1/m} e^{i arg d}: contracts the ball onto itself, fixes the boundary
    return cp.z + std::pow(ball_radius_, 1.0 - 1.0 / m) * mod_phase_pow(d, 1.0 / m, 1);
  }
  double t = std::abs(z);
  if (t <= profile_.identity_radius) return z;
  return z * (profile_.value(t) / t);
}

Complex PlaneHomeomorphism::inverse(Complex w) const {
  int j = ball_index(w);
  if (j >= 0) {
    const auto& cp = cps_[static_cast<std::size_t>(j)];
    Complex d = w - cp.z;
    if (d == Complex{0.0, 0.0}) return cp.z;
    const double m = cp.mult;
    return cp.z + std::pow(ball_radius_, 1.0 - m) * mod_phase_pow(d, m, 1);
  }
  double s = std::abs(w);
  if (s <= profile_.identity_radius) return w;
  return w * (profile_.inverse(s) / s);
}

}  // namespace lipq
