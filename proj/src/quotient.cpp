#include "lipq/quotient.hpp"

#include <algorithm>
#include <cmath>

#include "lipq/winding.hpp"

namespace lipq {

namespace {
bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}
}  // namespace

QuotientMap QuotientMap::build(const Polynomial& p, const RootOptions& opts) {
  if (p.degree() < 1) throw domain_error("construction requires degree >= 1");
  QuotientMap q;
  q.opts_ = opts;
  auto [lead, monic] = normalize_monic(p);
  q.lead_ = lead;
  q.monic_ = std::move(monic);
  q.cps_ = critical_points(q.monic_, opts);
  q.consts_ = build_constants(q.monic_, q.cps_);
  RadialProfile profile{q.consts_.identity_radius, q.monic_.degree()};
  q.h1_ = PlaneHomeomorphism::radial(profile);
  q.h2_ = PlaneHomeomorphism::amended(profile, q.cps_, q.consts_.ball_radius);
  return q;
}

Complex QuotientMap::base_value(Complex z) const {
  return lead_ * eval(monic_, h1_.map(z));
}

Complex QuotientMap::value(Complex z) const {
  return lead_ * eval(monic_, h2_.map(z));
}

Complex QuotientMap::outer_form(Complex z) const {
  if (std::abs(z) < consts_.outer_radius)
    throw domain_error("outer form evaluated inside the transition region");
  const int n = monic_.degree();
  Complex acc = monic_.coeffs[0] + winding_map(n, z);
  for (int k = 1; k < n; ++k) {
    Complex a = monic_.coeffs[static_cast<std::size_t>(k)];
    if (a != Complex{0.0, 0.0}) acc += a * radial_power(k, n, z);
  }
  return lead_ * acc;
}

Complex QuotientMap::ball_form(Complex z, int ball) const {
  if (ball < 0 || ball >= static_cast<int>(cps_.size()))
    throw domain_error("ball index out of range");
  const auto& cp = cps_[static_cast<std::size_t>(ball)];
  const double r = consts_.ball_radius;
  Complex d = z - cp.z;
  if (std::abs(d) > r * (1.0 + 1e-12))
    throw domain_error("ball form evaluated outside its ball");
  Complex u = h2_.map(z) - cp.z;
  Complex qv{0.0, 0.0};
  for (std::size_t l = cp.q.size(); l-- > 0;) qv = qv * u + cp.q[l];
  return lead_ * (cp.p_at_z + std::pow(r, cp.mult - 1) * winding_map(cp.mult, d) * qv);
}

std::vector<Complex> QuotientMap::fiber(Complex w) const {
  Polynomial shifted = monic_;
  shifted.coeffs[0] -= w / lead_;
  auto ys = all_roots(shifted, opts_);
  std::vector<Complex> out;
  out.reserve(ys.size());
  for (Complex y : ys) {
    Complex z = h2_.inverse(y);
    if (std::abs(value(z) - w) >= 1e-7 * (1.0 + std::abs(w)))
      throw numerical_error("fiber point failed the residual gate");
    out.push_back(z);
  }
  std::sort(out.begin(), out.end(), lex_less);
  return out;
}

}  // namespace lipq
