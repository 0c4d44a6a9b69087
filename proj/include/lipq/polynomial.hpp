#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "lipq/core.hpp"

namespace lipq {

// Dense complex polynomial, coefficients ascending by degree.
// Invariant: coeffs.back() != 0 unless the polynomial is the constant 0
// (then coeffs == {0}).
struct Polynomial {
  std::vector<Complex> coeffs;

  Polynomial() : coeffs{Complex(0.0, 0.0)} {}
  explicit Polynomial(std::vector<Complex> c);

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  bool is_zero() const { return coeffs.size() == 1 && coeffs[0] == Complex(0.0, 0.0); }
  Complex lead() const { return coeffs.back(); }
};

// Critical point of a polynomial P: a root z of P', together with the
// multiplicity m >= 2 of z as a root of P - P(z) and the Taylor coefficients
// q[l] (about z) of the deflated quotient Q(y) = (P(y) - P(z)) / (y - z)^m.
// Invariant: |q[0]| > 0.
struct CriticalPoint {
  Complex z;
  int mult = 2;
  std::vector<Complex> q;
  Complex p_at_z;
};

struct RootOptions {
  std::uint64_t seed = 0x5eed;
  double residual_tol = 1e-12;  // relative to the evaluation scale at the root
  // Relative to 1 + max |root estimate|. A root of multiplicity m is only
  // accurate to about residual_tol^{1/m}, so this sits well above 1e-8.
  double cluster_tol = 1e-6;
  double multiplicity_tol = 1e-7;
  int max_iterations = 400;
};

Complex eval(const Polynomial& p, Complex z);
Polynomial derivative(const Polynomial& p);

// Taylor coefficients of p about z0: p(z0 + u) = sum_k b[k] u^k.
std::vector<Complex> shifted_expansion(const Polynomial& p, Complex z0);

// Multiplicity of z0 as a root of p - p(z0): the smallest k >= 1 whose shifted
// coefficient passes a relative threshold. Throws for (near-)constant p.
int multiplicity(const Polynomial& p, Complex z0, double tol = 1e-7);

// All roots of p (with repetition collapsed by clustering), via simultaneous
// iteration from a seeded random ring, Newton polish, then transitive
// clustering. Throws numerical_error when residuals fail to converge.
std::vector<Complex> all_roots(const Polynomial& p, const RootOptions& opts = {});

// Distinct roots of P' with multiplicities and deflated-quotient expansions.
// Sorted by (re, im) for deterministic downstream output.
std::vector<CriticalPoint> critical_points(const Polynomial& p, const RootOptions& opts = {});

// (a, Q) with P = a * Q, Q monic. Throws for the zero polynomial.
std::pair<Complex, Polynomial> normalize_monic(const Polynomial& p);

}  // namespace lipq
