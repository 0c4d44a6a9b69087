#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "lipq/quotient.hpp"
#include "lipq/sampling.hpp"
#include "lipq/winding.hpp"

using lipq::Complex;
using lipq::Polynomial;
using lipq::QuotientMap;

namespace {

double dist(Complex a, Complex b) { return std::abs(a - b); }

bool close_rel(Complex a, Complex b, double tol) {
  return dist(a, b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

Polynomial square() { return Polynomial({{0, 0}, {0, 0}, {1, 0}}); }
Polynomial cubic() { return Polynomial({{0, 0}, {-3, 0}, {0, 0}, {1, 0}}); }

}  // namespace

TEST_SUITE("quotient") {

TEST_CASE("build wires the construction together") {
  auto q = QuotientMap::build(square());
  CHECK(q.lead() == Complex{1, 0});
  CHECK(q.monic().degree() == 2);
  REQUIRE(q.cps().size() == 1);
  CHECK(q.constants().identity_radius == doctest::Approx(2.0));
  CHECK(q.constants().ball_radius == doctest::Approx(0.5));
  CHECK(q.constants().outer_radius == doctest::Approx(16.0));
  CHECK(q.homeo().amends_balls());
  CHECK_FALSE(q.base_homeo().amends_balls());
  CHECK_FALSE(q.linear_shortcircuit());
  CHECK_THROWS_AS((void)QuotientMap::build(Polynomial(std::vector<Complex>{{5, 0}})),
                  lipq::Error);
}

TEST_CASE("identity region evaluates the polynomial itself") {
  auto q = QuotientMap::build(square());
  std::mt19937_64 eng(41);
  for (int i = 0; i < 2000; ++i) {
    Complex z = lipq::sample_annulus(eng, 0.5 + 1e-6, 2.0);
    CHECK(q.value(z) == eval(q.monic(), z));
    CHECK(q.value(z) == q.base_value(z));  // h1 and h2 agree off the balls
  }
}

TEST_CASE("ball values for the square map") {
  auto q = QuotientMap::build(square());
  // F(z) = r f_2(z) inside the ball: value(1/4) = (1/2)(1/4)
  CHECK(dist(q.value({0.25, 0}), {0.125, 0}) < 1e-15);
  CHECK(q.value({0, 0}) == Complex{0, 0});
  CHECK(q.ball_form({0, 0}, 0) == Complex{0, 0});
  CHECK_THROWS_AS((void)q.ball_form({0.6, 0}, 0), lipq::Error);
  CHECK_THROWS_AS((void)q.ball_form({0.1, 0}, 1), lipq::Error);
  std::mt19937_64 eng(43);
  for (int i = 0; i < 2000; ++i) {
    Complex z = lipq::sample_in_ball(eng, {0, 0}, 0.5);
    Complex direct = q.value(z);
    CHECK(close_rel(direct, q.ball_form(z, 0), 1e-12));
    CHECK(close_rel(direct, 0.5 * lipq::winding_map(2, z), 1e-12));
  }
}

TEST_CASE("outer form agrees with the composition") {
  auto q = QuotientMap::build(square());
  CHECK_THROWS_AS((void)q.outer_form({15.9, 0}), lipq::Error);
  std::mt19937_64 eng(47);
  for (int i = 0; i < 2000; ++i) {
    Complex z = lipq::sample_annulus(eng, 16.0, 16.0e6);
    CHECK(q.outer_form(z) == lipq::winding_map(2, z));  // monic z^2: bare winding map
    CHECK(close_rel(q.value(z), q.outer_form(z), 1e-9));
  }
}

TEST_CASE("cubic construction values region by region") {
  auto q = QuotientMap::build(cubic());
  const auto& c = q.constants();
  const auto& cps = q.cps();
  REQUIRE(cps.size() == 2);
  CHECK(dist(q.value(cps[0].z), cps[0].p_at_z) < 1e-13);
  CHECK(dist(q.value(cps[1].z), cps[1].p_at_z) < 1e-13);
  std::mt19937_64 eng(53);
  auto pts = lipq::stratified_samples(c, cps, 4000, eng);
  for (Complex z : pts) {
    auto region = classify_region(z, c, cps);
    Complex v = q.value(z);
    switch (region.kind) {
      case lipq::RegionKind::CriticalBall:
        CHECK(close_rel(v, q.ball_form(z, region.ball), 1e-11));
        break;
      case lipq::RegionKind::InnerIdentity:
        CHECK(v == eval(q.monic(), z));
        break;
      case lipq::RegionKind::Transition:
        CHECK(v == q.base_value(z));
        break;
      case lipq::RegionKind::Outer:
        CHECK(close_rel(v, q.outer_form(z), 1e-9));
        break;
    }
  }
}

TEST_CASE("non-monic input reduces through the leading coefficient") {
  auto q = QuotientMap::build(Polynomial({{0, 0}, {-6, 0}, {0, 0}, {2, 0}}));
  auto ref = QuotientMap::build(cubic());
  CHECK(q.lead() == Complex{2, 0});
  CHECK(q.monic().coeffs == ref.monic().coeffs);
  CHECK(q.constants().identity_radius == ref.constants().identity_radius);
  CHECK(q.constants().ball_radius == ref.constants().ball_radius);
  CHECK(dist(q.value({1, 0}), {-4, 0}) < 1e-12);
  std::mt19937_64 eng(59);
  for (int i = 0; i < 500; ++i) {
    Complex z = lipq::sample_annulus(eng, 1e-3, 4.0 * ref.constants().outer_radius);
    CHECK(close_rel(q.value(z), 2.0 * ref.value(z), 1e-12));
  }
}

TEST_CASE("fibers of the square map") {
  auto q = QuotientMap::build(square());
  auto f0 = q.fiber({0, 0});
  REQUIRE(f0.size() == 1);
  CHECK(std::abs(f0[0]) < 1e-7);

  auto f1 = q.fiber({1, 0});
  REQUIRE(f1.size() == 2);
  CHECK(dist(f1[0], {-1, 0}) < 1e-9);
  CHECK(dist(f1[1], {1, 0}) < 1e-9);

  // far fiber goes through the n-th-root branch: preimage of 65536 is +-65536
  auto ff = q.fiber({65536, 0});
  REQUIRE(ff.size() == 2);
  CHECK(dist(ff[0], {-65536, 0}) < 1e-4);
  CHECK(dist(ff[1], {65536, 0}) < 1e-4);
  for (Complex w : {Complex{0.3, 0.7}, Complex{-5, 2}, Complex{1e6, -1e6}}) {
    for (Complex z : q.fiber(w)) CHECK(dist(q.value(z), w) < 1e-7 * (1.0 + std::abs(w)));
  }
}

TEST_CASE("fibers of the cubic at and near the critical value") {
  auto q = QuotientMap::build(cubic());
  auto fc = q.fiber({-2, 0});
  REQUIRE(fc.size() == 2);
  CHECK(dist(fc[0], {-2, 0}) < 1e-7);
  CHECK(dist(fc[1], {1, 0}) < 1e-7);

  // just off the critical value the double point splits; the two nearby
  // preimages come back through the ball inverse, quadratically separated
  Complex w{-1.999, 0};
  auto fn = q.fiber(w);
  REQUIRE(fn.size() == 3);
  CHECK(dist(fn[0], {-2.0 + 0.001 / 9.0, 0}) < 1e-6);
  double lo = fn[1].real() - 1.0, hi = fn[2].real() - 1.0;
  CHECK(lo < 0.0);
  CHECK(hi > 0.0);
  CHECK(std::abs(lo) > 4.6e-3);
  CHECK(std::abs(lo) < 4.9e-3);
  CHECK(hi > 4.6e-3);
  CHECK(hi < 4.9e-3);
  CHECK(std::abs(fn[1].imag()) < 1e-9);
  CHECK(std::abs(fn[2].imag()) < 1e-9);
  for (Complex z : fn) CHECK(dist(q.value(z), w) < 1e-7 * (1.0 + std::abs(w)));
}

TEST_CASE("fiber of a generic quartic point has full cardinality") {
  auto q = QuotientMap::build(Polynomial({{1, 0}, {1, 0}, {1, 0}, {0, 0}, {1, 0}}));
  auto f = q.fiber({3, 4});
  REQUIRE(f.size() == 4);
  for (std::size_t i = 0; i < f.size(); ++i)
    for (std::size_t j = i + 1; j < f.size(); ++j) CHECK(dist(f[i], f[j]) > 1e-6);
  for (Complex z : f) CHECK(dist(q.value(z), {3, 4}) < 1e-7 * 6.0);
}

TEST_CASE("degree one short-circuits to a translation") {
  auto q = QuotientMap::build(Polynomial({{5, 0}, {1, 0}}));
  CHECK(q.linear_shortcircuit());
  CHECK(q.cps().empty());
  // flatness rule for the constant term: D_0 = 4n|a_0| = 20, so R = 21
  CHECK(q.constants().identity_radius == doctest::Approx(21.0));
  CHECK(q.constants().outer_radius == doctest::Approx(42.0));
  CHECK_FALSE(q.constants().min_ball_colip.has_value());
  CHECK(q.value({100, 0}) == Complex{105, 0});
  CHECK(q.value({-3, 2}) == Complex{2, 2});
  auto f = q.fiber({7, 1});
  REQUIRE(f.size() == 1);
  CHECK(dist(f[0], {2, 1}) < 1e-12);
}

}  // TEST_SUITE
