#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hflow/error.hpp"
#include "hflow/mellin.hpp"
#include "test_support.hpp"

using namespace hflow;
using namespace hflow::test;

namespace {

const AsymptoticHalfplane kOmega = AsymptoticHalfplane::hardy_default();

}  // namespace

TEST_CASE("halfplane membership") {
  CHECK(halfplane_contains(kOmega, 0.1));
  CHECK_FALSE(halfplane_contains(kOmega, -1.0));
  CHECK(halfplane_contains(kOmega, Complex(-0.25, 0.01)));
  CHECK_FALSE(halfplane_contains(kOmega, Complex(-0.25, 0.26)));
  CHECK(halfplane_contains(kOmega, Complex(1.0, 7.5)));
  CHECK_THROWS_AS(AsymptoticHalfplane({0.0}, {}), Error);
  CHECK_THROWS_AS(GammaRegion(0, kOmega), Error);
  CHECK_THROWS_AS(GammaRegion(9, kOmega), Error);
}

TEST_CASE("witness values") {
  MellinWitness w = build_hardy_witness(hardy({q(0), q(1)}), 1.0);
  CHECK(std::abs(w(0.0) - std::numbers::e) < 1e-15);
  MellinWitness flat = build_hardy_witness(hardy({q(0), q(1)}), 0.0);
  CHECK(flat(Complex(3, 4)) == Complex(1.0));
  CHECK_THROWS_AS(w(Complex(-1.0, 1e-12)), Error);

  MellinWitness mixed = build_hardy_witness(std::vector<Complex>{0.5, Complex(0, 1), -0.25}, 0.7);
  for (int n = 0; n <= 64; ++n) {
    double x = 1.0 / (n + 1.0);
    Complex m = 0.5 + Complex(0, 1) * x - 0.25 * x * x;
    CHECK(rel_err(mixed(double(n)), std::exp(0.7 * m)) < 1e-12);
  }
}

TEST_CASE("seminorm against the explicit estimate") {
  std::vector<Complex> a1 = {0.0, 1.0};
  MellinWitness w = build_hardy_witness(a1, 1.0);
  GammaRegion g1(1, kOmega);
  double value = seminorm(w, g1, 1.0);
  double bound = hardy_seminorm_bound(a1, 1.0, 1.0, 1);
  CHECK(bound == doctest::Approx(std::exp(2.0) * std::exp(1.0)).epsilon(1e-14));
  CHECK(std::isfinite(value));
  CHECK(value <= bound);
  CHECK_THROWS_AS(seminorm(w, g1, 0.0), Error);

  // t = 0: e^{-(a + 1/j) Re z} peaks at the leftmost apex.
  MellinWitness flat = build_hardy_witness(a1, 0.0);
  for (std::size_t j = 1; j <= 4; ++j) {
    GammaRegion g(j, kOmega);
    double leftmost = g.apex(0);
    for (std::size_t n = 1; n < j; ++n) leftmost = std::min(leftmost, g.apex(n));
    double expected = std::exp(-(1.0 + 1.0 / double(j)) * leftmost);
    CHECK(seminorm(flat, g, 1.0) == doctest::Approx(expected).epsilon(1e-12));
    MellinWitness zero_coeff = build_hardy_witness(std::vector<Complex>{0.0, 0.0}, 1.0);
    CHECK(seminorm(zero_coeff, g, 1.0) == doctest::Approx(expected).epsilon(1e-12));
  }
}

TEST_CASE("growth bound check") {
  MellinWitness w = build_hardy_witness(std::vector<Complex>{0.0, 1.0}, 1.0);
  CHECK(verify_mellin_bound(w, std::exp(2.5)).holds);
  MellinBoundCheck tiny = verify_mellin_bound(w, 1e-9);
  CHECK_FALSE(tiny.holds);
  CHECK(tiny.max_ratio > 1.0);
  MellinWitness flat = build_hardy_witness(std::vector<Complex>{0.0, 1.0}, 0.0);
  CHECK(verify_mellin_bound(flat, 1.7).holds);
}

TEST_CASE("continuity modulus") {
  std::vector<Complex> a1 = {0.0, 1.0};
  GammaRegion g1(1, kOmega);
  std::vector<double> hs = {0.1, 0.01, 0.001};
  auto m = witness_continuity_modulus(a1, 1.0, hs, g1, 1.0);
  REQUIRE(m.size() == 3);
  CHECK(m[0] > m[1]);
  CHECK(m[1] > m[2]);
  CHECK(m[2] < 0.01);
  std::vector<double> zero = {0.0};
  CHECK(witness_continuity_modulus(a1, 1.0, zero, g1, 1.0)[0] == 0.0);
  std::vector<double> increasing = {0.01, 0.1};
  CHECK_THROWS_AS(witness_continuity_modulus(a1, 1.0, increasing, g1, 1.0), Error);
}

TEST_CASE("sampled regions") {
  GridSpec grid{1024, 20.0};
  for (std::size_t j = 1; j < kOmega.size(); ++j) {
    GammaRegion g(j, kOmega);
    GammaRegion next(j + 1, kOmega);
    for (Complex z : sample_gamma(g, grid)) {
      CHECK(gamma_contains(g, z));
      CHECK(gamma_contains(next, z));
      CHECK(halfplane_contains(kOmega, z));
    }
  }
  for (Complex z : sample_halfplane(kOmega, grid)) CHECK(std::abs(z + 1.0) >= 0.5);
}
