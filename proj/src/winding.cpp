#include "lipq/winding.hpp"

#include <cmath>
#include <numbers>

namespace lipq {

double principal_arg(Complex z) {
  if (z == Complex(0.0, 0.0)) throw domain_error("principal_arg: undefined at the origin");
  double th = std::atan2(z.imag(), z.real());
  if (th == -std::numbers::pi) th = std::numbers::pi;  // atan2(-0, x<0) lands on the wrong edge
  return th;
}

Complex mod_phase_pow(Complex z, double a, double b) {
  if (z == Complex(0.0, 0.0)) {
    if (a <= 0.0) throw domain_error("mod_phase_pow: nonpositive modulus power at the origin");
    return Complex(0.0, 0.0);
  }
  double r = std::abs(z);
  double mod = (a == 1.0) ? r : std::exp(a * std::log(r));
  double phase = b * principal_arg(z);
  return Complex(mod * std::cos(phase), mod * std::sin(phase));
}

Complex winding_map(int n, Complex z) {
  if (n < 1) throw domain_error("winding_map: winding count must be >= 1");
  if (n == 1) return z;
  return mod_phase_pow(z, 1.0, static_cast<double>(n));
}

Complex radial_power(int k, int n, Complex z) {
  if (n < 2 || k < 1 || k > n) throw domain_error("radial_power: need n >= 2 and 1 <= k <= n");
  if (k == n) return winding_map(n, z);
  return mod_phase_pow(z, static_cast<double>(k) / n, static_cast<double>(k));
}

Complex power_diff_quotient(int l, int m, Complex z, Complex w) {
  if (l < 1 || m < 1) throw domain_error("power_diff_quotient: need l >= 1, m >= 1");
  double top_pow = static_cast<double>(l + m) / m;
  if (z == w) {
    if (w == Complex(0.0, 0.0))
      throw domain_error("power_diff_quotient: undefined at the doubled origin");
    return (top_pow)*mod_phase_pow(w, static_cast<double>(l) / m, static_cast<double>(l));
  }
  Complex fz = winding_map(m, z);
  Complex fw = winding_map(m, w);
  if (std::abs(fz - fw) <= 1e-14)
    throw domain_error("power_diff_quotient: winding images coincide");
  Complex top = mod_phase_pow(z, top_pow, static_cast<double>(l + m)) -
                mod_phase_pow(w, top_pow, static_cast<double>(l + m));
  return top / (fz - fw);
}

}  // namespace lipq
