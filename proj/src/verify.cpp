#include "lipq/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "lipq/sampling.hpp"

namespace lipq {

namespace {
constexpr double kPi = 3.141592653589793238462643383279502884;

void require_budget(double rho, int n) {
  if (!(rho > 0.0)) throw domain_error("sampling radius must be positive");
  if (n <= 0) throw domain_error("sample budget must be positive");
}
}  // namespace

LipschitzEstimate pointwise_lip_estimate(const ComplexMap& f, Complex x, double rho,
                                         int n, std::uint64_t seed) {
  require_budget(rho, n);
  std::mt19937_64 eng(seed);
  const Complex fx = f(x);
  double best = 0.0;
  auto draw = [&] {
    // 1e-5 offset floor: difference quotients stay well above evaluation noise
    Complex y = sample_in_ball(eng, x, rho, 1e-5);
    double d = std::abs(y - x);
    if (d > 0.0) best = std::max(best, std::abs(f(y) - fx) / d);
  };
  for (int i = 0; i < n; ++i) draw();
  const double at_n = best;
  for (int i = 0; i < n; ++i) draw();
  LipschitzEstimate est;
  est.value = at_n;
  est.center = x;
  est.rho = rho;
  est.samples = n;
  est.refinement_delta = best > 0.0 ? (best - at_n) / best : 0.0;
  return est;
}

LipschitzEstimate global_lip_estimate(const ComplexMap& f, double radius_lo,
                                      double radius_hi, int pairs, std::uint64_t seed) {
  if (!(radius_lo > 0.0) || !(radius_hi >= radius_lo))
    throw domain_error("global estimate needs 0 < radius_lo <= radius_hi");
  if (pairs <= 0) throw domain_error("sample budget must be positive");
  std::mt19937_64 eng(seed);
  double best = 0.0;
  auto draw = [&] {
    Complex z = sample_annulus(eng, radius_lo, radius_hi);
    // offsets relative to the base point; the 3e-5 floor keeps the difference
    // quotient well above evaluation noise
    double off = log_uniform(eng, 3e-5, 0.5) * std::abs(z);
    double th = uniform(eng, -kPi, kPi);
    Complex y = z + off * Complex{std::cos(th), std::sin(th)};
    double d = std::abs(y - z);
    if (d > 0.0) best = std::max(best, std::abs(f(y) - f(z)) / d);
  };
  for (int i = 0; i < pairs; ++i) draw();
  const double at_n = best;
  for (int i = 0; i < pairs; ++i) draw();
  LipschitzEstimate est;
  est.value = at_n;
  est.center = {0.0, 0.0};
  est.rho = radius_hi;
  est.samples = pairs;
  est.refinement_delta = best > 0.0 ? (best - at_n) / best : 0.0;
  return est;
}

CoLipschitzCertificate strong_colip_check(const ComplexMap& f, Complex x, double c,
                                          double rho, int n, std::uint64_t seed) {
  if (!(c > 0.0)) throw domain_error("co-lipschitz constant must be positive");
  require_budget(rho, n);
  CoLipschitzCertificate cert;
  cert.center = x;
  cert.rho = rho;
  cert.c = c;
  cert.mode = ColipMode::StrongInequality;
  cert.samples = n;
  cert.seed = seed;
  cert.pass = true;
  std::mt19937_64 eng(seed);
  const Complex fx = f(x);
  for (int i = 0; i < n; ++i) {
    // offsets below 1e-4 rho are left to smaller-rho checks; this keeps the
    // 1e-9 inequality slack above evaluation noise
    Complex y = sample_in_ball(eng, x, rho, 1e-4);
    double d = std::abs(y - x);
    if (d == 0.0) continue;
    Complex fy = f(y);
    double lhs = std::abs(fy - fx);
    if (lhs < c * d * (1.0 - 1e-9)) {
      cert.pass = false;
      cert.witness = PairWitness{x, y, fx, fy, lhs / d};
      break;
    }
  }
  return cert;
}

CoLipschitzCertificate ball_inclusion_check(const QuotientMap& q, Complex x,
                                            double radius, double c, int targets,
                                            std::uint64_t seed) {
  if (!(c > 0.0)) throw domain_error("co-lipschitz constant must be positive");
  require_budget(radius, targets);
  CoLipschitzCertificate cert;
  cert.center = x;
  cert.rho = radius;
  cert.c = c;
  cert.mode = ColipMode::BallInclusion;
  cert.samples = targets;
  cert.seed = seed;
  cert.pass = true;
  const Complex fx = q.value(x);
  const double cr = c * radius * (1.0 - 1e-6);
  std::mt19937_64 eng(seed);
  const int boundary = (targets + 1) / 2;
  for (int t = 0; t < targets; ++t) {
    Complex w;
    if (t < boundary) {
      double th = 2.0 * kPi * t / boundary;
      w = fx + cr * Complex{std::cos(th), std::sin(th)};
    } else {
      w = fx + sample_in_ball(eng, {0.0, 0.0}, cr);
    }
    bool covered = false;
    for (Complex z : q.fiber(w)) {
      if (std::abs(z - x) < radius) {
        covered = true;
        break;
      }
    }
    if (!covered) {
      cert.pass = false;
      cert.uncovered_target = w;
      break;
    }
  }
  return cert;
}

bool local_injectivity_check(const QuotientMap& q, Complex x, double rho) {
  if (!(rho > 0.0)) throw domain_error("sampling radius must be positive");
  int inside = 0;
  for (Complex z : q.fiber(q.value(x)))
    if (std::abs(z - x) < rho) ++inside;
  return inside == 1;
}

bool discreteness_check(const QuotientMap& q, Complex w) {
  auto fib = q.fiber(w);
  if (fib.empty() || static_cast<int>(fib.size()) > q.monic().degree()) return false;
  for (std::size_t i = 0; i < fib.size(); ++i)
    for (std::size_t j = i + 1; j < fib.size(); ++j)
      if (std::abs(fib[i] - fib[j]) == 0.0) return false;
  return true;
}

bool inverse_duality_check(const ComplexMap& h, const ComplexMap& h_inv, Complex x,
                           double c, double rho, int n, std::uint64_t seed) {
  const Complex hx = h(x);
  // Sanity precondition, not a precision gate: a genuinely wrong inverse is
  // off by O(1) relative, while a correct one composed through a steep ramp
  // can carry a conditioning floor of ~1e-5 relative near the inner seam.
  if (std::abs(h_inv(hx) - x) > 1e-4 * (1.0 + std::abs(x)))
    throw domain_error("h_inv does not invert h at the base point");
  auto hyp = strong_colip_check(h, x, c, rho, n, derive_seed(seed, "duality-hyp", x));
  if (!hyp.pass) return true;  // nothing to conclude when the hypothesis fails
  auto est = pointwise_lip_estimate(h_inv, hx, c * rho / 2.0, n,
                                    derive_seed(seed, "duality-lip", hx));
  return est.value <= (1.0 / c) * (1.0 + 1e-6);
}

LocalColipEstimate local_colip_estimate(const ComplexMap& f, Complex x, double rho0,
                                        int n, std::uint64_t seed) {
  require_budget(rho0, n);
  std::mt19937_64 eng(seed);
  const Complex fx = f(x);
  const double floor = 1e-8 * (1.0 + std::abs(x));
  LocalColipEstimate out;
  out.rho = rho0;
  for (double rho = rho0; rho >= floor; rho /= 2.0) {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < n; ++i) {
      Complex y = sample_in_ball(eng, x, rho, 1e-4);
      double d = std::abs(y - x);
      if (d > 0.0) worst = std::min(worst, std::abs(f(y) - fx) / d);
    }
    out.samples += n;
    if (std::isfinite(worst) && worst > out.value) {
      out.value = worst;
      out.rho = rho;
    }
  }
  return out;
}

CompositionCertificate composition_colip_check(const QuotientMap& q, Complex x, int n,
                                               std::uint64_t seed, double force_c) {
  if (n <= 0) throw domain_error("sample budget must be positive");
  const auto& h1 = q.base_homeo();
  const Complex hx = h1.map(x);
  const double scale = 0.05 * (1.0 + std::abs(hx));
  auto lip = pointwise_lip_estimate([&h1](Complex w) { return h1.inverse(w); }, hx, scale,
                                    n, derive_seed(seed, "comp-homeo", x));
  const double a = 1.0 / lip.value;
  const Polynomial dp = derivative(q.monic());
  std::mt19937_64 eng(derive_seed(seed, "comp-poly", x));
  double b = std::abs(q.lead()) * std::abs(eval(dp, hx));
  for (int i = 0; i < n; ++i) {
    Complex y = sample_in_ball(eng, hx, scale);
    b = std::min(b, std::abs(q.lead()) * std::abs(eval(dp, y)));
  }
  CompositionCertificate cert;
  cert.center = x;
  cert.homeo_colip = a;
  cert.poly_colip = b;
  const double c = force_c > 0.0 ? force_c : 0.9 * a * b;
  if (!(c > 0.0))
    throw domain_error("composition route needs a base point away from critical points");
  cert.tested_c = c;
  const std::uint64_t strong_seed = derive_seed(seed, "comp-strong", x);
  auto found = shrink_search(
      [&](double rho) {
        return strong_colip_check([&q](Complex z) { return q.base_value(z); }, x, c, rho,
                                  n, derive_seed(strong_seed, "rho", x, rho))
            .pass;
      },
      scale, 1e-8 * (1.0 + std::abs(x)));
  cert.pass = found.has_value();
  cert.rho = found.value_or(0.0);
  return cert;
}

}  // namespace lipq
