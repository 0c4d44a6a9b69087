#pragma once

#include <cstdint>
#include <vector>

#include "lipq/core.hpp"

namespace lipq {

// |z|^2 e^{i arg z}: a homeomorphism of the plane that is not Lipschitz.
Complex quadratic_radial_map(Complex z);

// Growth witness |quadratic_radial_map(t) - quadratic_radial_map(0)| / t = t.
double unbounded_growth_ratio(double t);

// Difference quotient of (winding_map(n, .))^2 at the radial pair
// (M, M + 0.01): approximately 2M, so the square of a Lipschitz quotient
// map need not be Lipschitz.
double squared_map_ratio(int n, double m_scale);

// Orthogonal projection R^{n+k} -> R^n: 1-Lipschitz, 1-co-Lipschitz, not
// discrete. Evidence gathered on sampled balls.
struct ProjectionDemo {
  int dim_domain = 3;
  int dim_range = 2;
  bool lipschitz_ok = false;        // sampled images stay inside B_r(f(x))
  bool colipschitz_ok = false;      // sampled targets in B_{r(1-1e-6)}(f(x)) all hit
  bool discrete = true;             // false: kernel directions stay in the fiber
  std::vector<double> witness_y;    // point with f(y) = f(x), y != x
  double witness_pair_dist = 0.0;   // |x - y|
  double witness_image_dist = 0.0;  // |f(x) - f(y)| (zero)
  double min_fiber_spacing = 0.0;   // shrinks to 0 along the kernel
};

ProjectionDemo projection_demo(int n, int k, const std::vector<double>& x, double radius,
                               int samples, std::uint64_t seed);

// The uncorrected radial interpolation
//   z                                                    |z| <= R
//   ((2R-|z|)/R |z| + (|z|-R)/R |z|^{1/n}) e^{i arg z}   R <= |z| <= 2R
//   |z|^{1/n} e^{i arg z}                                |z| >= 2R
// For R > 2^{1/(n-1)} it maps the circle |z| = 2R strictly inside the
// identity disc, so it is not injective.
Complex overlapping_radial_map(double R, int n, Complex z);

struct CollisionWitness {
  Complex z1, z2;        // distinct points
  double pair_dist = 0.0;
  double image_dist = 0.0;  // |h(z1) - h(z2)|, numerically zero
};

CollisionWitness overlapping_radial_collision(double R, int n);

}  // namespace lipq
