#include <doctest.h>

#include <cmath>
#include <random>

#include "lipq/constants.hpp"
#include "lipq/homeo.hpp"
#include "lipq/sampling.hpp"
#include "lipq/winding.hpp"

using lipq::Complex;
using lipq::PlaneHomeomorphism;
using lipq::Polynomial;
using lipq::RadialProfile;

namespace {
double dist(Complex a, Complex b) { return std::abs(a - b); }
}  // namespace

TEST_SUITE("homeo") {

TEST_CASE("radial profile piecewise values (n = 2, R = 2)") {
  RadialProfile p{2.0, 2};
  CHECK(p.junction() == doctest::Approx(16.0));
  CHECK(p.value(0.0) == 0.0);
  CHECK(p.value(1.5) == 1.5);
  CHECK(p.value(2.0) == 2.0);
  CHECK(p.value(9.0) == doctest::Approx(3.0));       // (9-2)/7 + 2
  CHECK(p.value(16.0) == doctest::Approx(4.0));      // junction continuity: 2R
  CHECK(p.value(100.0) == doctest::Approx(10.0));    // sqrt branch
  CHECK_THROWS_AS((void)p.value(-1.0), lipq::Error);
}

TEST_CASE("radial profile inverse is exact branch by branch") {
  RadialProfile p{2.0, 2};
  CHECK(p.inverse(1.0) == 1.0);
  CHECK(p.inverse(3.0) == doctest::Approx(9.0));
  CHECK(p.inverse(4.0) == doctest::Approx(16.0));
  CHECK(p.inverse(10.0) == doctest::Approx(100.0));
  std::mt19937_64 eng(13);
  for (int i = 0; i < 1000; ++i) {
    double t = lipq::log_uniform(eng, 1e-6, 1e6);
    CHECK(std::abs(p.inverse(p.value(t)) - t) <= 1e-9 * (1.0 + t));
  }
}

TEST_CASE("degree-1 profile degenerates to the identity") {
  RadialProfile p{5.0, 1};
  CHECK(p.value(7.0) == doctest::Approx(7.0));
  CHECK(p.value(12345.0) == doctest::Approx(12345.0));
  CHECK(p.inverse(42.0) == doctest::Approx(42.0));
}

TEST_CASE("radial homeomorphism") {
  auto h = PlaneHomeomorphism::radial(RadialProfile{2.0, 2});
  CHECK(h.map({0, 0}) == Complex{0, 0});
  CHECK(h.map({1.2, -0.7}) == Complex{1.2, -0.7});  // exact identity inside
  CHECK(dist(h.map({100, 0}), {10, 0}) < 1e-12);
  CHECK(dist(h.map({0, -100}), {0, -10}) < 1e-12);
  std::mt19937_64 eng(19);
  for (int i = 0; i < 10000; ++i) {
    Complex z = lipq::sample_annulus(eng, 1e-4, 160.0);
    CHECK(dist(h.inverse(h.map(z)), z) <= 1e-9 * (1.0 + std::abs(z)));
  }
}

TEST_CASE("amended homeomorphism for the z^2 construction") {
  auto cps = critical_points(Polynomial({{0, 0}, {0, 0}, {1, 0}}));
  auto h = PlaneHomeomorphism::amended(RadialProfile{2.0, 2}, cps, 0.5);
  CHECK(h.amends_balls());
  // fixed point at the critical point
  CHECK(dist(h.map({0, 0}), {0, 0}) == 0.0);
  // r^{1-1/m} |z|^{1/m} at z = 1/4: sqrt(1/8)
  CHECK(dist(h.map({0.25, 0}), {std::sqrt(0.125), 0}) < 1e-15);
  // boundary is pointwise fixed
  std::mt19937_64 eng(23);
  for (int i = 0; i < 100; ++i) {
    Complex z = 0.5 * lipq::sample_annulus(eng, 1.0, 1.0);
    CHECK(dist(h.map(z), z) < 1e-14);
  }
}

TEST_CASE("amended homeomorphism preserves balls, rays, and radial order") {
  auto cubic = Polynomial({{0, 0}, {-3, 0}, {0, 0}, {1, 0}});
  auto cps = critical_points(cubic);
  auto c = lipq::build_constants(cubic, cps);
  auto h = PlaneHomeomorphism::amended(RadialProfile{c.identity_radius, 3}, cps, c.ball_radius);
  std::mt19937_64 eng(29);
  const double r = c.ball_radius;
  for (const auto& cp : cps) {
    CHECK(dist(h.map(cp.z), cp.z) == 0.0);
    for (int i = 0; i < 500; ++i) {
      Complex z = lipq::sample_in_ball(eng, cp.z, r);
      Complex w = h.map(z);
      CHECK(std::abs(w - cp.z) <= r * (1.0 + 1e-12));                    // ball onto itself
      double az = lipq::principal_arg(z - cp.z), aw = lipq::principal_arg(w - cp.z);
      // re-centering at z_j costs ~1e-16 absolute, i.e. ~1e-16/|w - z_j| of angle
      CHECK(std::abs(az - aw) < 1e-10);                                  // rays preserved
      double s1 = std::abs(z - cp.z);
      Complex z2 = cp.z + (z - cp.z) * (1.0 + 0.1);
      if (std::abs(z2 - cp.z) <= r)
        CHECK(std::abs(h.map(z2) - cp.z) > std::abs(w - cp.z));          // radial monotone
      (void)s1;
    }
  }
}

TEST_CASE("amended homeomorphism round trip across every region") {
  auto cubic = Polynomial({{0, 0}, {-3, 0}, {0, 0}, {1, 0}});
  auto cps = critical_points(cubic);
  auto c = lipq::build_constants(cubic, cps);
  auto h = PlaneHomeomorphism::amended(RadialProfile{c.identity_radius, 3}, cps, c.ball_radius);
  std::mt19937_64 eng(31);
  auto pts = lipq::stratified_samples(c, cps, 10000, eng);
  for (Complex z : pts) {
    CHECK(dist(h.inverse(h.map(z)), z) <= 1e-9 * (1.0 + std::abs(z)));
    CHECK(dist(h.map(h.inverse(z)), z) <= 1e-9 * (1.0 + std::abs(z)));
  }
}

TEST_CASE("points outside the balls follow the radial branch") {
  auto cps = critical_points(Polynomial({{0, 0}, {0, 0}, {1, 0}}));
  auto base = PlaneHomeomorphism::radial(RadialProfile{2.0, 2});
  auto h = PlaneHomeomorphism::amended(RadialProfile{2.0, 2}, cps, 0.5);
  std::mt19937_64 eng(37);
  for (int i = 0; i < 1000; ++i) {
    Complex z = lipq::sample_annulus(eng, 0.5 + 1e-9, 100.0);
    CHECK(h.map(z) == base.map(z));
  }
}

}  // TEST_SUITE
