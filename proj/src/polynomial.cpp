#include "lipq/polynomial.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

namespace lipq {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

Complex horner(const std::vector<Complex>& c, Complex z) {
  Complex acc = c.back();
  for (auto it = c.rbegin() + 1; it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

// Running bound for the evaluation rounding noise: sum |a_k| |z|^k.
double eval_scale(const std::vector<Complex>& c, double r) {
  double s = 0.0, rp = 1.0;
  for (const Complex& a : c) {
    s += std::abs(a) * rp;
    rp *= r;
  }
  return s;
}

bool lex_less(Complex a, Complex b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

Polynomial::Polynomial(std::vector<Complex> c) : coeffs(std::move(c)) {
  if (coeffs.empty()) coeffs.push_back(Complex(0.0, 0.0));
  while (coeffs.size() > 1 && coeffs.back() == Complex(0.0, 0.0)) coeffs.pop_back();
}

Complex eval(const Polynomial& p, Complex z) { return horner(p.coeffs, z); }

Polynomial derivative(const Polynomial& p) {
  if (p.degree() == 0) return Polynomial();
  std::vector<Complex> d(p.coeffs.size() - 1);
  for (std::size_t k = 1; k < p.coeffs.size(); ++k)
    d[k - 1] = static_cast<double>(k) * p.coeffs[k];
  return Polynomial(std::move(d));
}

std::vector<Complex> shifted_expansion(const Polynomial& p, Complex z0) {
  std::vector<Complex> b = p.coeffs;
  int n = static_cast<int>(b.size()) - 1;
  for (int j = 0; j < n; ++j)
    for (int i = n - 1; i >= j; --i) b[i] += z0 * b[i + 1];
  return b;
}

int multiplicity(const Polynomial& p, Complex z0, double tol) {
  if (p.degree() < 1) throw domain_error("multiplicity: polynomial is constant");
  auto b = shifted_expansion(p, z0);
  double sum = 0.0;
  for (std::size_t k = 1; k < b.size(); ++k) sum += std::abs(b[k]);
  if (sum <= 0.0) throw domain_error("multiplicity: degenerate polynomial");
  for (std::size_t k = 1; k < b.size(); ++k)
    if (std::abs(b[k]) > tol * sum) return static_cast<int>(k);
  throw numerical_error("multiplicity: no coefficient above threshold");
}

std::vector<Complex> all_roots(const Polynomial& p, const RootOptions& opts) {
  int d = p.degree();
  if (d < 1) throw domain_error("all_roots: degree must be >= 1");

  std::vector<Complex> a = p.coeffs;
  Complex lead = a.back();
  for (Complex& c : a) c /= lead;
  if (d == 1) return {-a[0]};

  std::vector<Complex> da(d);
  for (int k = 1; k <= d; ++k) da[k - 1] = static_cast<double>(k) * a[k];

  // Seeded ring start around the root centroid, radius from the Fujiwara bound.
  std::mt19937_64 eng(opts.seed);
  std::uniform_real_distribution<double> jitter(-0.5, 0.5);
  Complex center = -a[d - 1] / static_cast<double>(d);
  double rad = 0.0;
  for (int k = 0; k < d; ++k)
    rad = std::max(rad, std::pow(std::abs(a[k]), 1.0 / static_cast<double>(d - k)));
  rad = 2.0 * rad + 1.0 + std::abs(center);

  std::vector<Complex> z(d);
  for (int i = 0; i < d; ++i) {
    double th = 2.0 * std::numbers::pi * (i + 0.35 * jitter(eng)) / d + 0.41;
    z[i] = center + rad * Complex(std::cos(th), std::sin(th));
  }

  auto noise_floor = [&](double r) { return 8.0 * (d + 1) * kEps * eval_scale(a, r); };

  std::vector<bool> settled(d, false);
  for (int it = 0; it < opts.max_iterations; ++it) {
    bool moved = false;
    for (int i = 0; i < d; ++i) {
      if (settled[i]) continue;
      Complex pv = horner(a, z[i]);
      if (std::abs(pv) <= noise_floor(std::abs(z[i]))) {
        settled[i] = true;
        continue;
      }
      Complex dpv = horner(da, z[i]);
      Complex newton;
      if (dpv == Complex(0.0, 0.0)) {
        newton = Complex(1.0 + std::abs(z[i]), 0.0) * 1e-3;  // kick off the stationary point
      } else {
        newton = pv / dpv;
      }
      Complex s(0.0, 0.0);
      for (int j = 0; j < d; ++j)
        if (j != i && z[i] != z[j]) s += 1.0 / (z[i] - z[j]);
      Complex denom = 1.0 - newton * s;
      Complex step = (std::abs(denom) < 1e-300) ? newton : newton / denom;
      z[i] -= step;
      if (std::abs(step) > 1e-14 * (1.0 + std::abs(z[i]))) moved = true;
    }
    if (!moved) break;
  }

  // Newton polish: quadratic for simple roots, geometric contraction toward
  // multiple roots (which the cluster pass then merges).
  for (int i = 0; i < d; ++i) {
    for (int it = 0; it < 80; ++it) {
      Complex pv = horner(a, z[i]);
      if (std::abs(pv) <= noise_floor(std::abs(z[i]))) break;
      Complex dpv = horner(da, z[i]);
      if (dpv == Complex(0.0, 0.0)) break;
      Complex step = pv / dpv;
      z[i] -= step;
      if (std::abs(step) <= 0.5 * kEps * (1.0 + std::abs(z[i]))) break;
    }
  }

  for (int i = 0; i < d; ++i) {
    double res = std::abs(horner(a, z[i]));
    double bound = opts.residual_tol * (1.0 + eval_scale(a, std::abs(z[i])));
    if (!std::isfinite(res) || res > bound) {
      std::ostringstream msg;
      msg << "all_roots: iteration failed to converge (residual " << res << ", bound " << bound
          << " at root estimate " << z[i].real() << "+" << z[i].imag() << "i)";
      throw numerical_error(msg.str());
    }
  }

  // Transitive clustering at cluster_tol * (1 + max |z|), centroid reps.
  double zmax = 0.0;
  for (const Complex& r : z) zmax = std::max(zmax, std::abs(r));
  double tau = opts.cluster_tol * (1.0 + zmax);
  std::vector<int> owner(d);
  for (int i = 0; i < d; ++i) owner[i] = i;
  std::function<int(int)> find = [&](int i) { return owner[i] == i ? i : owner[i] = find(owner[i]); };
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      if (std::abs(z[i] - z[j]) <= tau) owner[find(i)] = find(j);

  std::vector<Complex> reps;
  for (int i = 0; i < d; ++i) {
    if (find(i) != i) continue;
    Complex sum(0.0, 0.0);
    int count = 0;
    for (int j = 0; j < d; ++j)
      if (find(j) == i) {
        sum += z[j];
        ++count;
      }
    reps.push_back(sum / static_cast<double>(count));
  }
  std::sort(reps.begin(), reps.end(), lex_less);
  return reps;
}

std::vector<CriticalPoint> critical_points(const Polynomial& p, const RootOptions& opts) {
  if (p.degree() < 1) throw domain_error("critical_points: polynomial is constant");
  Polynomial dp = derivative(p);
  if (dp.degree() < 1 && dp.coeffs[0] != Complex(0.0, 0.0)) return {};  // linear p

  std::vector<CriticalPoint> cps;
  for (Complex zj : all_roots(dp, opts)) {
    CriticalPoint cp;
    cp.z = zj;
    cp.mult = multiplicity(p, zj, opts.multiplicity_tol);
    auto b = shifted_expansion(p, zj);
    cp.p_at_z = b[0];
    cp.q.assign(b.begin() + cp.mult, b.end());
    cps.push_back(std::move(cp));
  }
  std::sort(cps.begin(), cps.end(),
            [](const CriticalPoint& a, const CriticalPoint& b) { return lex_less(a.z, b.z); });
  return cps;
}

std::pair<Complex, Polynomial> normalize_monic(const Polynomial& p) {
  if (p.is_zero()) throw domain_error("normalize_monic: zero polynomial");
  Complex a = p.lead();
  std::vector<Complex> c = p.coeffs;
  for (Complex& x : c) x /= a;
  c.back() = Complex(1.0, 0.0);  // kill the rounding residue of lead/lead
  return {a, Polynomial(std::move(c))};
}

}  // namespace lipq
