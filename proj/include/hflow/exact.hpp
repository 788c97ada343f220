#pragma once

#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace hflow {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "p/q" with q >= 1, always both parts.
std::string rational_to_string(const Rational& r);
Rational parse_rational(const std::string& text);
double rational_to_double(const Rational& r);

/// Complex number in Q(sqrt(d))[i]:
///   (re_rat + re_surd*sqrt(d)) + i*(im_rat + im_surd*sqrt(d)).
/// d is square-free and >= 2 whenever a surd part is present, and 0 otherwise,
/// which keeps membership in iQ (and rationality of each part) decidable.
class ExactScalar {
 public:
  ExactScalar() = default;
  ExactScalar(Rational re_rat, Rational re_surd, Rational im_rat, Rational im_surd,
              std::uint64_t d);

  static ExactScalar from_rational(Rational r);
  static ExactScalar from_int(std::int64_t n) { return from_rational(Rational(n)); }
  static ExactScalar imaginary_unit();
  /// sqrt(n) with square factors pulled out, e.g. sqrt(12) = 2*sqrt(3).
  static ExactScalar sqrt_of(std::uint64_t n);

  const Rational& re_rat() const { return re_rat_; }
  const Rational& re_surd() const { return re_surd_; }
  const Rational& im_rat() const { return im_rat_; }
  const Rational& im_surd() const { return im_surd_; }
  std::uint64_t radicand() const { return d_; }

  bool is_zero() const;
  bool is_real() const { return im_rat_ == 0 && im_surd_ == 0; }
  bool is_in_iQ() const { return re_rat_ == 0 && re_surd_ == 0 && im_surd_ == 0; }
  bool has_surd() const { return d_ != 0; }
  /// Exact signs of the real and imaginary parts: -1, 0 or +1.
  int sign_re() const;
  int sign_im() const;

  ExactScalar real_part() const;
  /// The imaginary part as a real scalar (not multiplied by i).
  ExactScalar imag_part() const;
  ExactScalar conj() const;
  ExactScalar inverse() const;

  std::complex<double> to_complex() const;
  /// Parseable by the operator DSL, e.g. "(3/2 + 1/2*sqrt(2)*i)".
  std::string to_string() const;

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y);
  friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y);
  ExactScalar operator-() const;
  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator*=(const ExactScalar& y) { return *this = *this * y; }
  friend bool operator==(const ExactScalar& x, const ExactScalar& y);

 private:
  void normalize();

  Rational re_rat_{0};
  Rational re_surd_{0};
  Rational im_rat_{0};
  Rational im_surd_{0};
  std::uint64_t d_ = 0;
};

}  // namespace hflow
