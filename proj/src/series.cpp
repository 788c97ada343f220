#include "hflow/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hflow/error.hpp"

namespace hflow {
namespace detail {

template <typename Tag>
CoefficientSeries<Tag>::CoefficientSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorKind::DegenerateInput, "series needs at least one coefficient");
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!std::isfinite(coeffs_[n].real()) || !std::isfinite(coeffs_[n].imag()))
      throw Error(ErrorKind::DegenerateInput, "non-finite coefficient at n=" + std::to_string(n));
  }
}

template <typename Tag>
CoefficientSeries<Tag> CoefficientSeries<Tag>::unit_vector(std::size_t order, std::size_t index) {
  if (index > order) throw Error(ErrorKind::IndexOutOfRange, "unit vector index beyond order");
  std::vector<Complex> c(order + 1, Complex{0.0, 0.0});
  c[index] = 1.0;
  return CoefficientSeries(std::move(c));
}

template <typename Tag>
CoefficientSeries<Tag> CoefficientSeries<Tag>::truncated(std::size_t order) const {
  std::size_t keep = std::min(order, this->order()) + 1;
  return CoefficientSeries(std::vector<Complex>(coeffs_.begin(), coeffs_.begin() + keep));
}

template class CoefficientSeries<TaylorTag>;
template class CoefficientSeries<LaurentTag>;

}  // namespace detail

namespace {

std::vector<Complex> pointwise_product(std::span<const Complex> f, std::span<const Complex> g) {
  std::size_t len = std::min(f.size(), g.size());
  std::vector<Complex> out(len);
  for (std::size_t n = 0; n < len; ++n) out[n] = f[n] * g[n];
  return out;
}

}  // namespace

TruncatedTaylorSeries hadamard_product(const TruncatedTaylorSeries& f,
                                       const TruncatedTaylorSeries& g) {
  return TruncatedTaylorSeries(pointwise_product(f.coeffs(), g.coeffs()));
}

LaurentTailSeries hadamard_product_laurent(const LaurentTailSeries& f, const LaurentTailSeries& g) {
  return LaurentTailSeries(pointwise_product(f.coeffs(), g.coeffs()));
}

TruncatedTaylorSeries phi_map(const LaurentTailSeries& f) {
  return TruncatedTaylorSeries({f.coeffs().begin(), f.coeffs().end()});
}

LaurentTailSeries phi_inverse(const TruncatedTaylorSeries& f) {
  return LaurentTailSeries({f.coeffs().begin(), f.coeffs().end()});
}

Complex evaluate(const TruncatedTaylorSeries& f, Complex z) {
  auto c = f.coeffs();
  Complex acc = c.back();
  for (std::size_t n = c.size() - 1; n-- > 0;) acc = acc * z + c[n];
  return acc;
}

TruncatedTaylorSeries linear_combination(Complex alpha, const TruncatedTaylorSeries& f,
                                         Complex beta, const TruncatedTaylorSeries& g) {
  std::size_t len = std::min(f.order(), g.order()) + 1;
  std::vector<Complex> out(len);
  for (std::size_t n = 0; n < len; ++n) out[n] = alpha * f[n] + beta * g[n];
  return TruncatedTaylorSeries(std::move(out));
}

RadiusEstimate radius_from_log_magnitudes(std::span<const double> log_abs) {
  if (log_abs.size() < 17)
    throw Error(ErrorKind::DegenerateInput, "radius estimate needs truncation order N >= 16");
  const std::size_t order = log_abs.size() - 1;
  RadiusEstimate est;
  est.window_begin = order / 2;
  est.window_end = order;

  double max_root = -std::numeric_limits<double>::infinity();
  double min_root = std::numeric_limits<double>::infinity();
  bool any = false;
  for (std::size_t n = est.window_begin; n <= est.window_end; ++n) {
    if (n == 0 || (std::isinf(log_abs[n]) && log_abs[n] < 0)) continue;
    double log_root = log_abs[n] / static_cast<double>(n);
    max_root = std::max(max_root, log_root);
    min_root = std::min(min_root, log_root);
    any = true;
  }
  if (!any) {
    est.infinite = true;
    est.radius = std::numeric_limits<double>::infinity();
    return est;
  }
  est.radius = std::exp(-max_root);
  // exp(max - min) - 1 is the relative spread of the root-test values.
  est.uncertainty = std::expm1(max_root - min_root);
  if (est.radius < kZeroRadiusThreshold) {
    est.zero = true;
    est.radius = 0.0;
  }
  return est;
}

RadiusEstimate radius_of_convergence_estimate(const TruncatedTaylorSeries& f) {
  std::vector<double> log_abs(f.order() + 1);
  for (std::size_t n = 0; n <= f.order(); ++n) {
    double m = std::abs(f[n]);
    log_abs[n] = m > 0.0 ? std::log(m) : -std::numeric_limits<double>::infinity();
  }
  return radius_from_log_magnitudes(log_abs);
}

}  // namespace hflow
