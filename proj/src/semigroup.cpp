#include "hflow/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hflow/error.hpp"

namespace hflow {
namespace {

// e^{hm} - 1 without cancellation for small h.
Complex expm1_complex(Complex w) {
  double x = w.real();
  double y = w.imag();
  double s = std::sin(y / 2.0);
  return {std::expm1(x) * std::cos(y) - 2.0 * s * s, std::exp(x) * std::sin(y)};
}

double reliable_radius(const TruncatedTaylorSeries& f) {
  if (f.order() < 16) return std::numeric_limits<double>::infinity();
  return radius_of_convergence_estimate(f).radius;
}

}  // namespace

SemigroupEvaluator::SemigroupEvaluator(MultiplierSymbol symbol) : symbol_(std::move(symbol)) {
  if (const auto* p = std::get_if<EulerPoly>(&symbol_); p && p->degree() <= 1) {
    ExactScalar a = p->coeff(1);
    if (a.sign_im() == 0)
      closed_form_ = ClosedFormDilation{a.to_complex().real(), p->coeff(0).to_complex()};
  }
  std::size_t order = kDefaultOrder;
  if (const auto* e = std::get_if<ExplicitSequence>(&symbol_)) order = e->seq.size() - 1;
  cached_ = multiplier_sequence(symbol_, order);
}

std::vector<Complex> SemigroupEvaluator::multipliers(std::size_t order) const {
  if (order < cached_.size())
    return std::vector<Complex>(cached_.begin(), cached_.begin() + static_cast<std::ptrdiff_t>(order + 1));
  return multiplier_sequence(symbol_, order);
}

TruncatedTaylorSeries evolve(const SemigroupEvaluator& e, double t, const TruncatedTaylorSeries& f) {
  if (t == 0.0) return f;
  std::vector<Complex> m = e.multipliers(f.order());
  std::vector<Complex> c(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) c[n] = scaled_exponential(m[n], t, n) * f[n];
  return TruncatedTaylorSeries(std::move(c));
}

TruncatedTaylorSeries euler_closed_form_evolve(double a, Complex b, double t,
                                               const TruncatedTaylorSeries& f) {
  if (t == 0.0) return f;
  double dilation = std::exp(t * a);
  Complex scale = scaled_exponential(b, t, 0);
  std::vector<Complex> c(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) {
    if (std::abs(t * a * static_cast<double>(n) + t * b.real()) > kExponentLimit)
      throw Error(ErrorKind::Overflow, "dilation factor out of range at n=" + std::to_string(n));
    c[n] = scale * std::pow(dilation, static_cast<double>(n)) * f[n];
  }
  return TruncatedTaylorSeries(std::move(c));
}

double check_semigroup_law(const SemigroupEvaluator& e, double t, double s,
                           const TruncatedTaylorSeries& f) {
  TruncatedTaylorSeries composed = evolve(e, t, evolve(e, s, f));
  TruncatedTaylorSeries direct = evolve(e, t + s, f);
  double worst = 0.0;
  for (std::size_t n = 0; n <= f.order(); ++n)
    worst = std::max(worst, std::abs(composed[n] - direct[n]) / (1.0 + std::abs(direct[n])));
  return worst;
}

FiniteDifferenceResult generator_finite_difference(const SemigroupEvaluator& e,
                                                   const TruncatedTaylorSeries& f, double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::InvalidArgument, "finite-difference step must be positive");
  std::vector<Complex> m = e.multipliers(f.order());
  std::vector<Complex> approx(f.order() + 1);
  double error = 0.0;
  for (std::size_t n = 0; n <= f.order(); ++n) {
    if (std::abs(h * m[n].real()) > kExponentLimit)
      throw Error(ErrorKind::Overflow, "finite-difference exponent out of range at n=" +
                                           std::to_string(n));
    // (e^{h m} - 1)/h * f_n, the forward difference computed without cancellation.
    approx[n] = expm1_complex(h * m[n]) / h * f[n];
    Complex exact = m[n] * f[n];
    double deviation = std::abs(approx[n] - exact);
    error = std::max(error, std::abs(exact) > 0.0 ? deviation / std::abs(exact) : deviation);
  }
  return {TruncatedTaylorSeries(std::move(approx)), error};
}

ContinuityProbe strong_continuity_probe(const SemigroupEvaluator& e, const TruncatedTaylorSeries& f,
                                        double t0, double R, std::size_t grid) {
  if (grid < 16) throw Error(ErrorKind::InvalidArgument, "continuity probe needs grid >= 16");
  if (!(t0 > 0.0) || !(R > 0.0))
    throw Error(ErrorKind::InvalidArgument, "continuity probe needs t0 > 0 and R > 0");

  double radius = reliable_radius(f);
  if (e.closed_form() && R * std::exp(std::abs(e.closed_form()->a) * t0) >= radius)
    throw Error(ErrorKind::DomainExceeded,
                "R e^{|a| t0} = " + std::to_string(R * std::exp(std::abs(e.closed_form()->a) * t0)) +
                    " reaches the estimated radius " + std::to_string(radius));

  std::vector<double> xs(grid);
  for (std::size_t i = 0; i < grid; ++i)
    xs[i] = -R + 2.0 * R * static_cast<double>(i) / static_cast<double>(grid - 1);
  std::vector<Complex> base(grid);
  for (std::size_t i = 0; i < grid; ++i) base[i] = evaluate(f, xs[i]);

  ContinuityProbe probe{{}, 0.0};
  double t = t0;
  for (std::size_t level = 0; level < kProbeLevels; ++level, t /= 2.0) {
    TruncatedTaylorSeries moved = evolve(e, t, f);
    if (!e.closed_form() && R >= reliable_radius(moved))
      throw Error(ErrorKind::DomainExceeded,
                  "R leaves the reliable region of T_t f at t=" + std::to_string(t));
    ContinuityTracePoint point{t, 0.0, 0.0};
    for (std::size_t i = 0; i < grid; ++i) {
      Complex value = evaluate(moved, xs[i]);
      point.sup_deviation = std::max(point.sup_deviation, std::abs(value - base[i]));
      point.sup_value = std::max(point.sup_value, std::abs(value));
    }
    probe.bounded_sup = std::max(probe.bounded_sup, point.sup_value);
    probe.trace.push_back(point);
  }
  return probe;
}

}  // namespace hflow
