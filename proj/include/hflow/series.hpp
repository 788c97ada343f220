#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace hflow {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultOrder = 256;

namespace detail {

// Shared storage for the two coefficient-vector series types. The Tag keeps
// Taylor expansions at 0 and Laurent tails at infinity from mixing.
template <typename Tag>
class CoefficientSeries {
 public:
  /// Throws DegenerateInput on an empty vector or a non-finite entry.
  explicit CoefficientSeries(std::vector<Complex> coeffs);

  static CoefficientSeries zeros(std::size_t order) {
    return CoefficientSeries(std::vector<Complex>(order + 1, Complex{0.0, 0.0}));
  }
  static CoefficientSeries ones(std::size_t order) {
    return CoefficientSeries(std::vector<Complex>(order + 1, Complex{1.0, 0.0}));
  }
  static CoefficientSeries unit_vector(std::size_t order, std::size_t index);

  template <typename F>
  static CoefficientSeries generate(std::size_t order, F&& coefficient) {
    std::vector<Complex> c(order + 1);
    for (std::size_t n = 0; n <= order; ++n) c[n] = Complex(coefficient(n));
    return CoefficientSeries(std::move(c));
  }

  std::size_t order() const { return coeffs_.size() - 1; }
  std::span<const Complex> coeffs() const { return coeffs_; }
  const Complex& operator[](std::size_t n) const { return coeffs_[n]; }

  CoefficientSeries truncated(std::size_t order) const;

  friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;

 private:
  std::vector<Complex> coeffs_;
};

struct TaylorTag {};
struct LaurentTag {};

}  // namespace detail

/// sum_{n<=N} c_n z^n around 0.
using TruncatedTaylorSeries = detail::CoefficientSeries<detail::TaylorTag>;
/// sum_{n<=N} c_n / z^{n+1} around infinity.
using LaurentTailSeries = detail::CoefficientSeries<detail::LaurentTag>;

/// Root-test estimate of the radius of convergence.
struct RadiusEstimate {
  double radius = 0.0;
  bool infinite = false;
  bool zero = false;  // estimate fell below kZeroRadiusThreshold
  std::size_t window_begin = 0;
  std::size_t window_end = 0;
  /// Relative spread of |c_n|^{1/n} across the window.
  double uncertainty = 0.0;
};

inline constexpr double kZeroRadiusThreshold = 1e-12;

TruncatedTaylorSeries hadamard_product(const TruncatedTaylorSeries& f,
                                       const TruncatedTaylorSeries& g);
LaurentTailSeries hadamard_product_laurent(const LaurentTailSeries& f,
                                           const LaurentTailSeries& g);

/// phi(f)(z) = f(1/z)/z maps sum f_n/z^{n+1} to sum f_n z^n: the coefficient
/// vector is shared, only the expansion point changes.
TruncatedTaylorSeries phi_map(const LaurentTailSeries& f);
LaurentTailSeries phi_inverse(const TruncatedTaylorSeries& f);

/// Horner evaluation of the partial sum.
Complex evaluate(const TruncatedTaylorSeries& f, Complex z);

/// alpha*f + beta*g, truncated to the shorter order.
TruncatedTaylorSeries linear_combination(Complex alpha, const TruncatedTaylorSeries& f,
                                         Complex beta, const TruncatedTaylorSeries& g);

/// radius = 1 / max_{n in [N/2, N]} |c_n|^{1/n}. Requires N >= 16.
RadiusEstimate radius_of_convergence_estimate(const TruncatedTaylorSeries& f);

/// Same estimate from log|c_n| (n = 0..N; -inf marks a zero coefficient).
/// Lets blow-up sequences such as e^{n^2} be measured without leaving the
/// binary64 range.
RadiusEstimate radius_from_log_magnitudes(std::span<const double> log_abs);

}  // namespace hflow
