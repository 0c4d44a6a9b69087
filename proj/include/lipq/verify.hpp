#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "lipq/core.hpp"
#include "lipq/quotient.hpp"

namespace lipq {

using ComplexMap = std::function<Complex(Complex)>;

// Sampled sup of difference quotients around a point. Always a lower bound
// estimate of the true local Lipschitz constant, never a proof.
struct LipschitzEstimate {
  double value = 0.0;
  Complex center;
  double rho = 0.0;
  int samples = 0;
  double refinement_delta = 0.0;  // relative change when samples double
};

struct PairWitness {
  Complex x, y;
  Complex fx, fy;
  double ratio = 0.0;
};

enum class ColipMode { StrongInequality, BallInclusion };

struct CoLipschitzCertificate {
  Complex center;
  double rho = 0.0;
  double c = 0.0;
  ColipMode mode = ColipMode::StrongInequality;
  bool pass = false;
  int samples = 0;
  std::uint64_t seed = 0;
  std::optional<PairWitness> witness;        // violating pair (strong mode)
  std::optional<Complex> uncovered_target;   // unreached target (inclusion mode)
};

// Sup of |f(y)-f(x)| / |y-x| over n sampled y in B_rho(x) \ {x}; the sample
// set is nested as n grows, so the value is non-decreasing in n.
LipschitzEstimate pointwise_lip_estimate(const ComplexMap& f, Complex x, double rho,
                                         int n, std::uint64_t seed);

// Largest over 10^5-scale pair budgets: sup |f(z)-f(y)| / |z-y| with base
// points log-uniform in modulus over [radius_lo, radius_hi] and offsets
// log-uniform relative to the base point. Reports value at `pairs` and the
// relative change after doubling.
LipschitzEstimate global_lip_estimate(const ComplexMap& f, double radius_lo,
                                      double radius_hi, int pairs, std::uint64_t seed);

// Falsification test for |f(y)-f(x)| >= c |y-x| (1 - 1e-9) on B_rho(x):
// pass means no sampled violation; a witness is the first violating pair.
CoLipschitzCertificate strong_colip_check(const ComplexMap& f, Complex x, double c,
                                          double rho, int n, std::uint64_t seed);

// Image-covering check for B_{c radius}(F(x)) inside F(B_radius(x)): targets
// on the shrunken circle c*radius*(1-1e-6) plus interior targets, each must
// have a fiber point strictly inside B_radius(x).
CoLipschitzCertificate ball_inclusion_check(const QuotientMap& q, Complex x,
                                            double radius, double c, int targets,
                                            std::uint64_t seed);

// True iff the fiber of F(x) meets B_rho(x) in exactly one point.
bool local_injectivity_check(const QuotientMap& q, Complex x, double rho);

// True iff the fiber of w is finite (<= deg) and has strictly positive
// pairwise separation after clustering.
bool discreteness_check(const QuotientMap& q, Complex w);

// Checks the inverse-duality implication at x: if h satisfies the sampled
// strong c-co-Lipschitz inequality on B_rho(x), then the sampled Lipschitz
// estimate of h_inv around h(x) at radius c*rho/2 is at most (1/c)(1+1e-6).
// Precondition: h_inv(h(x)) = x within 1e-9 (1+|x|).
bool inverse_duality_check(const ComplexMap& h, const ComplexMap& h_inv, Complex x,
                           double c, double rho, int n, std::uint64_t seed);

// Empirical local co-Lipschitz constant: the best min-ratio over sampled
// balls of geometrically shrinking radius (the local inequality constant a
// strong check can be expected to hold with, up to margin).
struct LocalColipEstimate {
  double value = 0.0;
  double rho = 0.0;  // radius at which the best min-ratio was observed
  int samples = 0;
};

LocalColipEstimate local_colip_estimate(const ComplexMap& f, Complex x, double rho0,
                                        int n, std::uint64_t seed);

// Composition route to a co-Lipschitz constant for the base map P o h1 at x:
//   a = 1 / (sampled Lipschitz estimate of h1^{-1} around h1(x))
//   b = sampled min |P'| on a small disc around h1(x)
// then verifies the strong inequality with c = 0.9 * a * b at a shrink-found
// radius. force_c > 0 overrides the constant (falsifiability control).
struct CompositionCertificate {
  Complex center;
  double homeo_colip = 0.0;  // a
  double poly_colip = 0.0;   // b
  double tested_c = 0.0;
  double rho = 0.0;
  bool pass = false;
};

CompositionCertificate composition_colip_check(const QuotientMap& q, Complex x, int n,
                                               std::uint64_t seed, double force_c = 0.0);

}  // namespace lipq
