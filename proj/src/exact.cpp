#include "hflow/exact.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "hflow/error.hpp"

namespace hflow {
namespace {

// a + b*sqrt(d)
struct Surd {
  Rational a;
  Rational b;
};

Surd add(const Surd& x, const Surd& y) { return {x.a + y.a, x.b + y.b}; }
Surd sub(const Surd& x, const Surd& y) { return {x.a - y.a, x.b - y.b}; }
Surd mul(const Surd& x, const Surd& y, std::uint64_t d) {
  return {x.a * y.a + x.b * y.b * Rational(d), x.a * y.b + x.b * y.a};
}
Surd inv(const Surd& x, std::uint64_t d) {
  Rational norm = x.a * x.a - x.b * x.b * Rational(d);
  if (norm == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  return {x.a / norm, -x.b / norm};
}

int sign_of(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign_of(const Surd& x, std::uint64_t d) {
  int sa = sign_of(x.a);
  int sb = sign_of(x.b);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  Rational lhs = x.a * x.a;
  Rational rhs = x.b * x.b * Rational(d);
  return lhs > rhs ? sa : sb;
}

double surd_to_double(const Surd& x, std::uint64_t d) {
  double v = rational_to_double(x.a);
  if (x.b != 0) v += rational_to_double(x.b) * std::sqrt(static_cast<double>(d));
  return v;
}

std::uint64_t common_radicand(std::uint64_t d1, std::uint64_t d2) {
  if (d1 == 0) return d2;
  if (d2 == 0 || d1 == d2) return d1;
  throw Error(ErrorKind::InvalidArgument,
              "scalars with different radicands sqrt(" + std::to_string(d1) + ") and sqrt(" +
                  std::to_string(d2) + ") cannot be combined");
}

std::string plain_rational(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

}  // namespace

std::string rational_to_string(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    BigInt p(text.substr(0, slash));
    BigInt q(text.substr(slash + 1));
    if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + text + "'");
    return Rational(p, q);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    throw Error(ErrorKind::ParseError, "not a rational: '" + text + "'");
  }
}

double rational_to_double(const Rational& r) { return r.convert_to<double>(); }

ExactScalar::ExactScalar(Rational re_rat, Rational re_surd, Rational im_rat, Rational im_surd,
                         std::uint64_t d)
    : re_rat_(std::move(re_rat)),
      re_surd_(std::move(re_surd)),
      im_rat_(std::move(im_rat)),
      im_surd_(std::move(im_surd)),
      d_(d) {
  if (d_ != 0) {
    // Only square-free radicands are allowed; sqrt_of() performs the reduction.
    if (d_ == 1) throw Error(ErrorKind::InvalidArgument, "radicand 1 is rational");
    for (std::uint64_t k = 2; k * k <= d_; ++k) {
      if (d_ % (k * k) == 0)
        throw Error(ErrorKind::InvalidArgument,
                    "radicand " + std::to_string(d_) + " is not square-free");
    }
  } else if (re_surd_ != 0 || im_surd_ != 0) {
    throw Error(ErrorKind::InvalidArgument, "surd coefficients require a radicand");
  }
  normalize();
}

ExactScalar ExactScalar::from_rational(Rational r) {
  ExactScalar s;
  s.re_rat_ = std::move(r);
  return s;
}

ExactScalar ExactScalar::imaginary_unit() {
  ExactScalar s;
  s.im_rat_ = 1;
  return s;
}

ExactScalar ExactScalar::sqrt_of(std::uint64_t n) {
  std::uint64_t square_part = 1;
  std::uint64_t rest = n;
  for (std::uint64_t k = 2; k * k <= rest; ++k) {
    while (rest % (k * k) == 0) {
      rest /= k * k;
      square_part *= k;
    }
  }
  if (n == 0) return ExactScalar{};
  if (rest == 1) return from_rational(Rational(square_part));
  return ExactScalar(0, Rational(square_part), 0, 0, rest);
}

void ExactScalar::normalize() {
  if (re_surd_ == 0 && im_surd_ == 0) d_ = 0;
}

bool ExactScalar::is_zero() const {
  return re_rat_ == 0 && re_surd_ == 0 && im_rat_ == 0 && im_surd_ == 0;
}

int ExactScalar::sign_re() const { return sign_of(Surd{re_rat_, re_surd_}, d_); }
int ExactScalar::sign_im() const { return sign_of(Surd{im_rat_, im_surd_}, d_); }

ExactScalar ExactScalar::real_part() const {
  ExactScalar s = *this;
  s.im_rat_ = 0;
  s.im_surd_ = 0;
  s.normalize();
  return s;
}

ExactScalar ExactScalar::imag_part() const {
  ExactScalar s;
  s.re_rat_ = im_rat_;
  s.re_surd_ = im_surd_;
  s.d_ = d_;
  s.normalize();
  return s;
}

ExactScalar ExactScalar::conj() const {
  ExactScalar s = *this;
  s.im_rat_ = -s.im_rat_;
  s.im_surd_ = -s.im_surd_;
  return s;
}

ExactScalar ExactScalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "division by zero");
  Surd x{re_rat_, re_surd_};
  Surd y{im_rat_, im_surd_};
  Surd norm = add(mul(x, x, d_), mul(y, y, d_));
  Surd inv_norm = inv(norm, d_);
  Surd re = mul(x, inv_norm, d_);
  Surd im = mul(y, inv_norm, d_);
  ExactScalar s;
  s.re_rat_ = re.a;
  s.re_surd_ = re.b;
  s.im_rat_ = -im.a;
  s.im_surd_ = -im.b;
  s.d_ = d_;
  s.normalize();
  return s;
}

std::complex<double> ExactScalar::to_complex() const {
  return {surd_to_double(Surd{re_rat_, re_surd_}, d_),
          surd_to_double(Surd{im_rat_, im_surd_}, d_)};
}

std::string ExactScalar::to_string() const {
  std::vector<std::pair<Rational, std::string>> parts;
  std::string root = "sqrt(" + std::to_string(d_) + ")";
  if (re_rat_ != 0) parts.emplace_back(re_rat_, "");
  if (re_surd_ != 0) parts.emplace_back(re_surd_, root);
  if (im_rat_ != 0) parts.emplace_back(im_rat_, "i");
  if (im_surd_ != 0) parts.emplace_back(im_surd_, root + "*i");
  if (parts.empty()) return "0";

  std::ostringstream out;
  bool first = true;
  for (const auto& [coef, unit] : parts) {
    Rational magnitude = coef < 0 ? Rational(-coef) : coef;
    if (first) {
      if (coef < 0) out << "-";
    } else {
      out << (coef < 0 ? " - " : " + ");
    }
    first = false;
    if (unit.empty()) {
      out << plain_rational(magnitude);
    } else if (magnitude == 1) {
      out << unit;
    } else {
      out << plain_rational(magnitude) << "*" << unit;
    }
  }
  std::string body = out.str();
  bool atomic = parts.size() == 1 && body.find('/') == std::string::npos && body[0] != '-';
  return atomic ? body : "(" + body + ")";
}

ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
  ExactScalar s;
  s.d_ = common_radicand(x.d_, y.d_);
  s.re_rat_ = x.re_rat_ + y.re_rat_;
  s.re_surd_ = x.re_surd_ + y.re_surd_;
  s.im_rat_ = x.im_rat_ + y.im_rat_;
  s.im_surd_ = x.im_surd_ + y.im_surd_;
  s.normalize();
  return s;
}

ExactScalar ExactScalar::operator-() const {
  ExactScalar s = *this;
  s.re_rat_ = -s.re_rat_;
  s.re_surd_ = -s.re_surd_;
  s.im_rat_ = -s.im_rat_;
  s.im_surd_ = -s.im_surd_;
  return s;
}

ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }

ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
  std::uint64_t d = common_radicand(x.d_, y.d_);
  Surd xr{x.re_rat_, x.re_surd_}, xi{x.im_rat_, x.im_surd_};
  Surd yr{y.re_rat_, y.re_surd_}, yi{y.im_rat_, y.im_surd_};
  Surd re = sub(mul(xr, yr, d), mul(xi, yi, d));
  Surd im = add(mul(xr, yi, d), mul(xi, yr, d));
  ExactScalar s;
  s.d_ = d;
  s.re_rat_ = re.a;
  s.re_surd_ = re.b;
  s.im_rat_ = im.a;
  s.im_surd_ = im.b;
  s.normalize();
  return s;
}

ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) { return x * y.inverse(); }

bool operator==(const ExactScalar& x, const ExactScalar& y) {
  return x.re_rat_ == y.re_rat_ && x.re_surd_ == y.re_surd_ && x.im_rat_ == y.im_rat_ &&
         x.im_surd_ == y.im_surd_ && x.d_ == y.d_;
}

}  // namespace hflow
