#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "hflow/error.hpp"
#include "hflow/symbols.hpp"
#include "test_support.hpp"

using namespace hflow;
using namespace hflow::test;

TEST_CASE("symbol evaluation") {
  CHECK(symbol_eval(euler({q(0), q(1)}), 7) == Complex(7.0));
  CHECK(symbol_eval(hardy({q(0), q(1)}), 0) == Complex(1.0));
  CHECK(symbol_eval(hardy({q(0), q(1)}), 3) == Complex(0.25));
  CHECK(symbol_eval(euler({q(0), q(0), iq(1)}), 5) == Complex(0, 25));
  CHECK(symbol_eval_exact(hardy({q(1), q(0), q(2)}), 1) == q(3, 2));

  MultiplierSymbol seq = ExplicitSequence({1.0, 0.5});
  CHECK(symbol_eval(seq, 1) == Complex(0.5));
  CHECK_THROWS_AS(symbol_eval(seq, 2), Error);
  CHECK_THROWS_AS(ExplicitSequence({}), Error);
}

TEST_CASE("euler polynomials trim trailing zeros") {
  EulerPoly p({q(1), q(2), q(0), q(0)});
  CHECK(p.degree() == 1);
  CHECK(p.coeff(5) == q(0));
}

TEST_CASE("symbol addition") {
  auto zero = symbol_add(euler({q(0), q(0), q(1)}), euler({q(0), q(0), q(-1)}));
  CHECK(std::get<EulerPoly>(zero) == euler({q(0)}));
  CHECK(std::get<EulerPoly>(zero).degree() == 0);

  auto mixed = symbol_add(euler({q(0), q(0), iq(1)}), euler({q(0), q(3)}));
  CHECK(std::get<EulerPoly>(mixed) == euler({q(0), q(3), iq(1)}));

  MultiplierSymbol s1 = euler({q(0), q(2, 3)});
  MultiplierSymbol s2 = euler({q(5, 7), q(-1, 4)});
  auto sum = symbol_add(s1, s2);
  CHECK(std::get<EulerPoly>(sum) == euler({q(5, 7), q(5, 12)}));
  for (std::size_t n = 0; n <= 32; ++n)
    CHECK(rel_err(symbol_eval(sum, n), symbol_eval(s1, n) + symbol_eval(s2, n)) < 1e-15);

  CHECK_THROWS_AS(symbol_add(euler({q(1)}), hardy({q(1)})), Error);
  CHECK_THROWS_AS(symbol_add(ExplicitSequence({1.0}), ExplicitSequence({1.0})), Error);
}

TEST_CASE("exponentially scaled coefficients") {
  auto c = exp_scaled_coefficients(euler({q(0), q(1)}), 0.5, 4);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(rel_err(c[n], std::exp(0.5 * double(n))) < 1e-15);

  auto ones = exp_scaled_coefficients(euler({q(2), iq(3), q(1)}), 0.0, 10);
  CHECK(ones == TruncatedTaylorSeries::ones(10));

  auto h = exp_scaled_coefficients(hardy({q(0), q(1)}), 1.0, 3);
  CHECK(rel_err(h[0], std::numbers::e) < 1e-15);
  CHECK(rel_err(h[1], std::exp(0.5)) < 1e-15);
  CHECK(rel_err(h[2], std::exp(1.0 / 3.0)) < 1e-15);
  CHECK(rel_err(h[3], std::exp(0.25)) < 1e-15);

  CHECK_THROWS_AS(exp_scaled_coefficients(euler({q(0), q(0), q(1)}), 1.0, 64), Error);
  auto logs = log_abs_scaled_coefficients(euler({q(0), q(0), q(1)}), 1.0, 64);
  CHECK(logs[64] == 4096.0);
}

TEST_CASE("large imaginary phases stay accurate") {
  // t = pi/4, m_n = i n^2: the phase pi n^2 / 4 mod 2 pi cycles with period 8.
  auto c = exp_scaled_coefficients(euler({q(0), q(0), iq(1)}), std::numbers::pi / 4.0, 1000);
  for (std::size_t n : {992u, 993u, 994u, 995u}) {
    double phase = std::numbers::pi / 4.0 * double((n * n) % 8);
    // t itself is rounded to binary64, an error of about n^2 * 1e-16 in the phase.
    CHECK(std::abs(c[n] - std::polar(1.0, phase)) < 1e-10);
  }
}

TEST_CASE("apply multiplier") {
  auto e = TruncatedTaylorSeries::generate(10, [](std::size_t n) { return 1.0 / std::tgamma(double(n) + 1); });
  auto xe = apply_multiplier(euler({q(0), q(1)}), e);
  for (std::size_t n = 0; n <= 10; ++n) CHECK(rel_err(xe[n], double(n) / std::tgamma(double(n) + 1)) < 1e-15);

  auto x3 = TruncatedTaylorSeries::unit_vector(5, 3);
  auto h = apply_multiplier(hardy({q(0), q(1)}), x3);
  CHECK(h[3] == Complex(0.25));
  CHECK(h[2] == Complex(0.0));

  auto zero = apply_multiplier(euler({q(0)}), e);
  CHECK(zero == TruncatedTaylorSeries::zeros(10));
}
