#include <doctest.h>

#include <cmath>
#include <random>

#include "lipq/sampling.hpp"
#include "lipq/verify.hpp"
#include "lipq/winding.hpp"

using lipq::Complex;
using lipq::ComplexMap;
using lipq::Polynomial;
using lipq::QuotientMap;

namespace {

const ComplexMap kIdentity = [](Complex z) { return z; };
const ComplexMap kDouble = [](Complex z) { return 2.0 * z; };
const ComplexMap kWind2 = [](Complex z) { return lipq::winding_map(2, z); };
const ComplexMap kWind3 = [](Complex z) { return lipq::winding_map(3, z); };
const ComplexMap kRealPart = [](Complex z) { return Complex{z.real(), 0.0}; };
const ComplexMap kSquare = [](Complex z) { return z * z; };

Polynomial square_poly() { return Polynomial({{0, 0}, {0, 0}, {1, 0}}); }
Polynomial cubic_poly() { return Polynomial({{0, 0}, {-3, 0}, {0, 0}, {1, 0}}); }

}  // namespace

TEST_SUITE("verify") {

TEST_CASE("seed derivation is deterministic and payload-sensitive") {
  CHECK(lipq::derive_seed(1, "a") == lipq::derive_seed(1, "a"));
  CHECK(lipq::derive_seed(1, "a") != lipq::derive_seed(1, "b"));
  CHECK(lipq::derive_seed(1, "a") != lipq::derive_seed(2, "a"));
  CHECK(lipq::derive_seed(1, "a", {1, 0}) != lipq::derive_seed(1, "a", {0, 1}));
  CHECK(lipq::derive_seed(1, "a", {1, 0}, 0.5) != lipq::derive_seed(1, "a", {1, 0}, 0.25));
  std::mt19937_64 eng(7);
  for (int i = 0; i < 200; ++i) {
    double v = lipq::log_uniform(eng, 1e-3, 1e3);
    CHECK(v >= 1e-3);
    CHECK(v <= 1e3);
    Complex z = lipq::sample_in_ball(eng, {5, -2}, 0.25);
    CHECK(std::abs(z - Complex{5, -2}) <= 0.25 * (1.0 + 1e-12));
    CHECK(std::abs(z - Complex{5, -2}) >= 0.25 * 1e-6 * (1.0 - 1e-12));
  }
}

TEST_CASE("shrink search halves geometrically") {
  auto hit = lipq::shrink_search([](double r) { return r <= 0.01; }, 1.0, 1e-6);
  REQUIRE(hit.has_value());
  CHECK(*hit == 0.0078125);  // 1/128, first power of two at or below 0.01
  CHECK_FALSE(lipq::shrink_search([](double) { return false; }, 1.0, 1e-6).has_value());
  auto now = lipq::shrink_search([](double) { return true; }, 0.5, 1e-6);
  REQUIRE(now.has_value());
  CHECK(*now == 0.5);
}

TEST_CASE("pointwise lipschitz estimate") {
  auto est = lipq::pointwise_lip_estimate(kWind2, {1, 0}, 0.1, 512, 11);
  CHECK(est.value >= 1.9);
  CHECK(est.value <= 2.0 * (1.0 + 1e-7));
  CHECK(est.samples == 512);
  CHECK(est.rho == 0.1);
  CHECK(est.refinement_delta >= 0.0);
  CHECK(est.refinement_delta <= 1.0);

  auto id = lipq::pointwise_lip_estimate(kIdentity, {3, 4}, 1.0, 256, 11);
  CHECK(id.value == 1.0);

  // z |z| has radial stretch 2|z|
  const ComplexMap quad = [](Complex z) { return z * std::abs(z); };
  auto big = lipq::pointwise_lip_estimate(quad, {10, 0}, 0.5, 512, 11);
  CHECK(big.value >= 19.0);
  CHECK(big.value <= 20.6);

  CHECK_THROWS_AS((void)lipq::pointwise_lip_estimate(kIdentity, {0, 0}, -1.0, 8, 1), lipq::Error);
  CHECK_THROWS_AS((void)lipq::pointwise_lip_estimate(kIdentity, {0, 0}, 1.0, 0, 1), lipq::Error);
}

TEST_CASE("pointwise estimate is non-decreasing in the sample budget") {
  double a = lipq::pointwise_lip_estimate(kWind3, {2, 1}, 0.3, 64, 17).value;
  double b = lipq::pointwise_lip_estimate(kWind3, {2, 1}, 0.3, 512, 17).value;
  double c = lipq::pointwise_lip_estimate(kWind3, {2, 1}, 0.3, 4096, 17).value;
  CHECK(a <= b);
  CHECK(b <= c);
}

TEST_CASE("global lipschitz estimate brackets the winding constant") {
  auto est = lipq::global_lip_estimate(kWind3, 1e-3, 1e3, 20000, 23);
  CHECK(est.value >= 2.9);
  CHECK(est.value <= 3.0 * (1.0 + 1e-6));
  CHECK(est.refinement_delta >= 0.0);
  auto id = lipq::global_lip_estimate(kIdentity, 0.1, 10.0, 1000, 23);
  CHECK(id.value == 1.0);
}

TEST_CASE("strong co-lipschitz check passes where the inequality holds") {
  auto cert = lipq::strong_colip_check(kWind3, {2, 0}, 0.9, 0.1, 2000, 29);
  CHECK(cert.pass);
  CHECK_FALSE(cert.witness.has_value());
  CHECK(cert.mode == lipq::ColipMode::StrongInequality);
  CHECK(cert.c == 0.9);
  CHECK(cert.rho == 0.1);
  CHECK(cert.samples == 2000);
  CHECK_THROWS_AS((void)lipq::strong_colip_check(kWind3, {2, 0}, 0.0, 0.1, 8, 1), lipq::Error);
}

TEST_CASE("strong co-lipschitz check finds a witness for a collapsing map") {
  auto cert = lipq::strong_colip_check(kRealPart, {0, 0}, 0.1, 1.0, 2000, 31);
  CHECK_FALSE(cert.pass);
  REQUIRE(cert.witness.has_value());
  const auto& w = *cert.witness;
  CHECK(w.x == Complex{0, 0});
  // the recorded pair genuinely violates the inequality
  CHECK(std::abs(w.fy - w.fx) < 0.1 * std::abs(w.y - w.x) * (1.0 - 1e-9));
  CHECK(w.ratio == doctest::Approx(std::abs(w.fy - w.fx) / std::abs(w.y - w.x)));
}

TEST_CASE("composed map is strongly co-lipschitz at a critical point") {
  auto q = QuotientMap::build(cubic_poly());
  const ComplexMap f = [&](Complex z) { return q.value(z); };
  for (std::size_t j = 0; j < q.cps().size(); ++j) {
    Complex zj = q.cps()[j].z;
    double alpha = q.constants().ball_colips[j];
    auto cert = lipq::strong_colip_check(f, zj, alpha * (1.0 - 1e-6),
                                         q.constants().ball_radius / 2.0, 4000,
                                         lipq::derive_seed(37, "cp", zj));
    CHECK(cert.pass);
  }
}

TEST_CASE("ball inclusion holds for the square construction at the origin") {
  auto q = QuotientMap::build(square_poly());
  auto cert = lipq::ball_inclusion_check(q, {0, 0}, 0.3, 0.2, 64, 41);
  CHECK(cert.pass);
  CHECK(cert.mode == lipq::ColipMode::BallInclusion);
  CHECK_FALSE(cert.uncovered_target.has_value());
  CHECK(cert.samples == 64);
}

TEST_CASE("ball inclusion fails for an absurd constant, with a witness target") {
  auto q = QuotientMap::build(square_poly());
  auto cert = lipq::ball_inclusion_check(q, {0, 0}, 0.3, 50.0, 64, 43);
  CHECK_FALSE(cert.pass);
  REQUIRE(cert.uncovered_target.has_value());
  // the reported target really has no preimage inside the ball
  for (Complex z : q.fiber(*cert.uncovered_target))
    CHECK(std::abs(z - Complex{0, 0}) >= 0.3);
}

TEST_CASE("local injectivity counts fiber points in the ball") {
  auto q = QuotientMap::build(square_poly());
  CHECK(lipq::local_injectivity_check(q, {1, 0}, 0.5));
  CHECK(lipq::local_injectivity_check(q, {0, 0}, 0.5));
  CHECK_FALSE(lipq::local_injectivity_check(q, {1, 0}, 3.0));  // -1 sneaks in
}

TEST_CASE("fibers are discrete") {
  auto q = QuotientMap::build(square_poly());
  CHECK(lipq::discreteness_check(q, {0, 0}));
  CHECK(lipq::discreteness_check(q, {1, 0}));
  CHECK(lipq::discreteness_check(q, {1e6, 1e6}));
  auto qc = QuotientMap::build(cubic_poly());
  CHECK(lipq::discreteness_check(qc, {-2, 0}));
  CHECK(lipq::discreteness_check(qc, {0.1, -0.7}));
}

TEST_CASE("inverse duality implication") {
  const ComplexMap kHalf = [](Complex z) { return 0.5 * z; };
  CHECK(lipq::inverse_duality_check(kIdentity, kIdentity, {5, 0}, 0.99, 1.0, 512, 47));
  CHECK(lipq::inverse_duality_check(kDouble, kHalf, {1, 1}, 1.9, 1.0, 512, 47));
  CHECK(lipq::inverse_duality_check(
      kWind2, [](Complex w) { return lipq::mod_phase_pow(w, 1.0, 0.5); }, {1, 0}, 0.999, 0.2,
      512, 47));
  // hypothesis fails for c above the true constant: vacuously true
  CHECK(lipq::inverse_duality_check(kDouble, kHalf, {1, 1}, 2.5, 1.0, 512, 47));
  // wrong inverse violates the precondition
  CHECK_THROWS_AS((void)lipq::inverse_duality_check(
                      [](Complex z) { return z + 1.0; }, kIdentity, {0, 0}, 0.5, 1.0, 64, 47),
                  lipq::Error);
}

TEST_CASE("local co-lipschitz estimate approaches the analytic constant") {
  auto w3 = lipq::local_colip_estimate(kWind3, {2, 0}, 0.3, 400, 53);
  CHECK(w3.value >= 0.99);
  CHECK(w3.value <= 1.01);
  CHECK(w3.rho <= 0.3);
  CHECK(w3.samples > 0);

  auto sq = lipq::local_colip_estimate(kSquare, {3, 0}, 0.5, 400, 53);
  CHECK(sq.value >= 5.9);   // |(y^2 - 9)/(y - 3)| = |y + 3| -> 6
  CHECK(sq.value <= 6.01);
}

TEST_CASE("composition route certifies the base map away from critical points") {
  auto q = QuotientMap::build(square_poly());
  auto cert = lipq::composition_colip_check(q, {1.5, 0}, 400, 59);
  CHECK(cert.pass);
  CHECK(cert.homeo_colip == doctest::Approx(1.0));
  CHECK(cert.poly_colip >= 2.7);
  CHECK(cert.poly_colip <= 3.05);
  CHECK(cert.tested_c == doctest::Approx(0.9 * cert.homeo_colip * cert.poly_colip));
  CHECK(cert.rho > 0.0);

  auto forced = lipq::composition_colip_check(q, {1.5, 0}, 400, 59, 10.0);
  CHECK_FALSE(forced.pass);
  CHECK(forced.tested_c == 10.0);
}

}  // TEST_SUITE
