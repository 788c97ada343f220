#include "hflow/symbols.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "hflow/error.hpp"

namespace hflow {
namespace {

std::vector<ExactScalar> trim(std::vector<ExactScalar> a) {
  while (a.size() > 1 && a.back().is_zero()) a.pop_back();
  if (a.empty()) a.emplace_back();
  return a;
}

std::vector<ExactScalar> add_coeffs(const std::vector<ExactScalar>& x,
                                    const std::vector<ExactScalar>& y) {
  std::vector<ExactScalar> out(std::max(x.size(), y.size()));
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (k < x.size()) out[k] += x[k];
    if (k < y.size()) out[k] += y[k];
  }
  return out;
}

}  // namespace

EulerPoly::EulerPoly(std::vector<ExactScalar> a) : coeffs(trim(std::move(a))) {}

ExactScalar EulerPoly::coeff(std::size_t k) const {
  return k < coeffs.size() ? coeffs[k] : ExactScalar{};
}

HardyRational::HardyRational(std::vector<ExactScalar> a) : coeffs(trim(std::move(a))) {}

ExplicitSequence::ExplicitSequence(std::vector<Complex> values) : seq(std::move(values)) {
  if (seq.empty()) throw Error(ErrorKind::DegenerateInput, "explicit sequence must be nonempty");
}

ExactScalar symbol_eval_exact(const MultiplierSymbol& s, std::size_t n) {
  if (const auto* p = std::get_if<EulerPoly>(&s)) {
    // Horner in exact arithmetic.
    ExactScalar x = ExactScalar::from_rational(Rational(n));
    ExactScalar acc;
    for (std::size_t k = p->coeffs.size(); k-- > 0;) acc = acc * x + p->coeffs[k];
    return acc;
  }
  if (const auto* h = std::get_if<HardyRational>(&s)) {
    ExactScalar u = ExactScalar::from_rational(Rational(1, n + 1));
    ExactScalar acc;
    for (std::size_t k = h->coeffs.size(); k-- > 0;) acc = acc * u + h->coeffs[k];
    return acc;
  }
  throw Error(ErrorKind::VariantMismatch, "explicit sequences have no exact evaluation");
}

Complex symbol_eval(const MultiplierSymbol& s, std::size_t n) {
  if (const auto* e = std::get_if<ExplicitSequence>(&s)) {
    if (n >= e->seq.size())
      throw Error(ErrorKind::IndexOutOfRange,
                  "index " + std::to_string(n) + " beyond explicit sequence of length " +
                      std::to_string(e->seq.size()));
    return e->seq[n];
  }
  return symbol_eval_exact(s, n).to_complex();
}

std::vector<Complex> multiplier_sequence(const MultiplierSymbol& s, std::size_t order) {
  std::vector<Complex> m(order + 1);
  for (std::size_t n = 0; n <= order; ++n) m[n] = symbol_eval(s, n);
  return m;
}

MultiplierSymbol symbol_add(const MultiplierSymbol& s1, const MultiplierSymbol& s2) {
  const auto* e1 = std::get_if<EulerPoly>(&s1);
  const auto* e2 = std::get_if<EulerPoly>(&s2);
  if (e1 && e2) return EulerPoly(add_coeffs(e1->coeffs, e2->coeffs));
  const auto* h1 = std::get_if<HardyRational>(&s1);
  const auto* h2 = std::get_if<HardyRational>(&s2);
  if (h1 && h2) return HardyRational(add_coeffs(h1->coeffs, h2->coeffs));
  throw Error(ErrorKind::VariantMismatch,
              "symbols can only be added within the Euler or the Hardy family");
}

Complex scaled_exponential(Complex m, double t, std::size_t n) {
  double log_modulus = t * m.real();
  if (std::abs(log_modulus) > kExponentLimit)
    throw Error(ErrorKind::Overflow, "|t*Re m_n| = " + std::to_string(std::abs(log_modulus)) +
                                         " exceeds " + std::to_string(kExponentLimit) +
                                         " at n=" + std::to_string(n));
  long double phase = static_cast<long double>(t) * static_cast<long double>(m.imag());
  phase = std::remainder(phase, 2.0L * std::numbers::pi_v<long double>);
  return std::polar(std::exp(log_modulus), static_cast<double>(phase));
}

TruncatedTaylorSeries exp_scaled_coefficients(const MultiplierSymbol& s, double t,
                                              std::size_t order) {
  if (const auto* e = std::get_if<ExplicitSequence>(&s); e && order >= e->seq.size())
    throw Error(ErrorKind::IndexOutOfRange, "truncation order beyond explicit sequence");
  std::vector<Complex> m = multiplier_sequence(s, order);
  std::vector<Complex> c(order + 1);
  for (std::size_t n = 0; n <= order; ++n) c[n] = scaled_exponential(m[n], t, n);
  return TruncatedTaylorSeries(std::move(c));
}

std::vector<double> log_abs_scaled_coefficients(const MultiplierSymbol& s, double t,
                                                std::size_t order) {
  std::vector<double> out(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    if (std::holds_alternative<ExplicitSequence>(s)) {
      out[n] = t * symbol_eval(s, n).real();
    } else {
      out[n] = t * symbol_eval_exact(s, n).real_part().to_complex().real();
    }
  }
  return out;
}

TruncatedTaylorSeries apply_multiplier(const MultiplierSymbol& s, const TruncatedTaylorSeries& f) {
  std::vector<Complex> m = multiplier_sequence(s, f.order());
  std::vector<Complex> c(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) c[n] = m[n] * f[n];
  return TruncatedTaylorSeries(std::move(c));
}

}  // namespace hflow
