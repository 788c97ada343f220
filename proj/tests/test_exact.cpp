#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "hflow/error.hpp"
#include "hflow/exact.hpp"
#include "test_support.hpp"

using namespace hflow;
using hflow::test::iq;
using hflow::test::q;

TEST_CASE("rational text round trip") {
  CHECK(rational_to_string(Rational(3, 6)) == "1/2");
  CHECK(rational_to_string(Rational(-4)) == "-4/1");
  CHECK(parse_rational("-6/8") == Rational(-3, 4));
  CHECK(parse_rational("7") == Rational(7));
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("field arithmetic in Q(i)") {
  ExactScalar i = ExactScalar::imaginary_unit();
  CHECK(i * i == q(-1));
  ExactScalar z = q(3, 2) + iq(1, 3);
  CHECK(z * z.inverse() == q(1));
  CHECK((z - z).is_zero());
  CHECK(z.conj() == q(3, 2) - iq(1, 3));
  CHECK(iq(5, 7).is_in_iQ());
  CHECK_FALSE((q(1) + iq(5, 7)).is_in_iQ());
  CHECK(q(0).is_in_iQ());
}

TEST_CASE("quadratic surds") {
  ExactScalar r2 = ExactScalar::sqrt_of(2);
  CHECK(r2 * r2 == q(2));
  CHECK(ExactScalar::sqrt_of(12) == q(2) * ExactScalar::sqrt_of(3));
  CHECK(ExactScalar::sqrt_of(16) == q(4));
  CHECK_FALSE(ExactScalar::sqrt_of(16).has_surd());

  ExactScalar r = r2 - q(1);
  CHECK(r.sign_re() == 1);
  CHECK((q(1) - r2).sign_re() == -1);
  CHECK((q(141, 100) - r2).sign_re() == -1);
  CHECK((q(142, 100) - r2).sign_re() == 1);
  CHECK(doctest::Approx(r.to_complex().real()).epsilon(1e-15) == std::sqrt(2.0) - 1.0);

  ExactScalar w = (r2 + iq(1)) * (r2 - iq(1));
  CHECK(w == q(3));
  CHECK(((q(1) + r2) / (q(1) + r2)) == q(1));
  CHECK_THROWS_AS(r2 + ExactScalar::sqrt_of(3), Error);
}

TEST_CASE("parts and signs") {
  ExactScalar z = q(-2) + iq(3) * ExactScalar::sqrt_of(5);
  CHECK(z.real_part() == q(-2));
  CHECK(z.imag_part() == q(3) * ExactScalar::sqrt_of(5));
  CHECK(z.sign_re() == -1);
  CHECK(z.sign_im() == 1);
  CHECK(q(0).sign_re() == 0);
  CHECK(z.imag_part().is_real());
}

TEST_CASE("to_string is compact and stable") {
  CHECK(q(3).to_string() == "3");
  CHECK(q(-1, 2).to_string() == "(-1/2)");
  CHECK(iq(1).to_string() == "i");
  CHECK(ExactScalar().to_string() == "0");
}
