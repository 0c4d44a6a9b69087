#pragma once

#include "lipq/core.hpp"

namespace lipq {

// Principal argument in (-pi, pi]; the negative real axis maps to +pi.
// Throws for z = 0.
double principal_arg(Complex z);

// |z|^a * exp(i * b * arg z), with the convention 0 |-> 0 (requires a > 0
// there). This is the shared primitive behind every map in this family.
Complex mod_phase_pow(Complex z, double a, double b);

// n-fold winding map |z| e^{i n arg z}. n-Lipschitz, 1-co-Lipschitz.
Complex winding_map(int n, Complex z);

// Fractional-power winding map |z|^{k/n} e^{i k arg z}, 1 <= k <= n
// (k = n reduces to winding_map). Flattens to eps-Lipschitz far from 0.
Complex radial_power(int k, int n, Complex z);

// Divided difference of |.|^{(l+m)/m} e^{i(l+m) arg .} against the m-fold
// winding map:
//   (z,w) with winding_map(m,z) != winding_map(m,w) ->
//       (mod_phase_pow(z,(l+m)/m,l+m) - mod_phase_pow(w,(l+m)/m,l+m))
//       / (winding_map(m,z) - winding_map(m,w))
//   z == w != 0 -> ((l+m)/m) |w|^{l/m} e^{i l arg w}    (the limit value)
// Throws outside that domain (equal winding images, or z = w = 0); the
// equality test uses a 1e-14 absolute threshold and rejects borderline input.
Complex power_diff_quotient(int l, int m, Complex z, Complex w);

}  // namespace lipq
