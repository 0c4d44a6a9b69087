#include "lipq/demos.hpp"

#include <cmath>
#include <random>

#include "lipq/sampling.hpp"
#include "lipq/winding.hpp"

namespace lipq {

Complex quadratic_radial_map(Complex z) { return mod_phase_pow(z, 2.0, 1.0); }

double unbounded_growth_ratio(double t) {
  if (!(t > 0.0)) throw domain_error("growth ratio needs t > 0");
  return std::abs(quadratic_radial_map({t, 0.0})) / t;
}

double squared_map_ratio(int n, double m_scale) {
  if (!(m_scale > 0.0)) throw domain_error("scale must be positive");
  Complex a = winding_map(n, {m_scale + 0.01, 0.0});
  Complex b = winding_map(n, {m_scale, 0.0});
  return std::abs(a * a - b * b) / 0.01;
}

ProjectionDemo projection_demo(int n, int k, const std::vector<double>& x, double radius,
                               int samples, std::uint64_t seed) {
  if (n < 1 || k < 1) throw domain_error("projection needs n >= 1, k >= 1");
  if (static_cast<int>(x.size()) != n + k)
    throw domain_error("base point dimension must be n + k");
  if (!(radius > 0.0) || samples <= 0) throw domain_error("bad sampling budget");

  ProjectionDemo demo;
  demo.dim_domain = n + k;
  demo.dim_range = n;

  std::mt19937_64 eng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto range_dist = [n](const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
    return std::sqrt(s);
  };

  demo.lipschitz_ok = true;
  demo.colipschitz_ok = true;
  for (int it = 0; it < samples; ++it) {
    // domain sample: images must stay within the same radius
    std::vector<double> y(x.size());
    double norm2 = 0.0;
    for (auto& v : y) {
      v = gauss(eng);
      norm2 += v * v;
    }
    double scale = log_uniform(eng, 1e-6, 1.0) * radius / std::sqrt(norm2);
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + y[i] * scale;
    if (range_dist(y, x) > radius * (1.0 + 1e-12)) demo.lipschitz_ok = false;

    // range target within the shrunken radius: lift it by keeping the tail
    std::vector<double> t(static_cast<std::size_t>(n));
    norm2 = 0.0;
    for (auto& v : t) {
      v = gauss(eng);
      norm2 += v * v;
    }
    scale = log_uniform(eng, 1e-6, 1.0) * radius * (1.0 - 1e-6) / std::sqrt(norm2);
    std::vector<double> lift(x);
    for (int i = 0; i < n; ++i) lift[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + t[static_cast<std::size_t>(i)] * scale;
    double moved = 0.0;
    for (std::size_t i = 0; i < lift.size(); ++i) moved += (lift[i] - x[i]) * (lift[i] - x[i]);
    if (!(std::sqrt(moved) < radius)) demo.colipschitz_ok = false;
    if (range_dist(lift, x) != std::sqrt(moved)) demo.colipschitz_ok = false;
  }

  // the fiber of f(x) contains the whole kernel line through x
  demo.witness_y = x;
  demo.witness_y[static_cast<std::size_t>(n)] += 0.5 * radius;
  demo.witness_pair_dist = 0.5 * radius;
  demo.witness_image_dist = range_dist(demo.witness_y, x);
  demo.discrete = false;
  double spacing = 0.5 * radius;
  while (spacing > 1e-13) spacing /= 2.0;
  demo.min_fiber_spacing = spacing;
  return demo;
}

Complex overlapping_radial_map(double R, int n, Complex z) {
  if (!(R > 0.0) || n < 2) throw domain_error("interpolation needs R > 0, n >= 2");
  double t = std::abs(z);
  if (t <= R) return z;
  double root = std::pow(t, 1.0 / n);
  double s = t >= 2.0 * R ? root : ((2.0 * R - t) / R) * t + ((t - R) / R) * root;
  return z * (s / t);
}

CollisionWitness overlapping_radial_collision(double R, int n) {
  if (n < 2) throw domain_error("interpolation needs n >= 2");
  if (!(R > std::pow(2.0, 1.0 / (n - 1))))
    throw domain_error("no collision: the profile never dips back inside");
  const double th = 0.3;
  Complex dir{std::cos(th), std::sin(th)};
  CollisionWitness w;
  w.z2 = 2.0 * R * dir;
  w.z1 = overlapping_radial_map(R, n, w.z2);  // modulus (2R)^{1/n} < R, a fixed point
  w.pair_dist = std::abs(w.z1 - w.z2);
  w.image_dist = std::abs(overlapping_radial_map(R, n, w.z1) -
                          overlapping_radial_map(R, n, w.z2));
  return w;
}

}  // namespace lipq
