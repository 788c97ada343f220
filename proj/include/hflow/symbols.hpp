#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "hflow/exact.hpp"
#include "hflow/series.hpp"

namespace hflow {

/// P(theta) = sum_k a_k theta^k with theta f(x) = x f'(x); m_n = P(n).
/// coeffs[k] = a_k; trailing zeros are trimmed so a_K != 0 whenever K >= 1.
struct EulerPoly {
  std::vector<ExactScalar> coeffs;

  explicit EulerPoly(std::vector<ExactScalar> a = {});
  std::size_t degree() const { return coeffs.size() - 1; }
  /// a_k, zero beyond the degree.
  ExactScalar coeff(std::size_t k) const;
  friend bool operator==(const EulerPoly&, const EulerPoly&) = default;
};

/// sum_k a_k H^k with H the Hardy averaging operator; m_n = sum_k a_k/(n+1)^k.
struct HardyRational {
  std::vector<ExactScalar> coeffs;

  explicit HardyRational(std::vector<ExactScalar> a = {});
  std::size_t degree() const { return coeffs.size() - 1; }
  friend bool operator==(const HardyRational&, const HardyRational&) = default;
};

/// A finite multiplier sequence given numerically.
struct ExplicitSequence {
  std::vector<Complex> seq;

  explicit ExplicitSequence(std::vector<Complex> values);
  friend bool operator==(const ExplicitSequence&, const ExplicitSequence&) = default;
};

using MultiplierSymbol = std::variant<EulerPoly, HardyRational, ExplicitSequence>;

/// Exponent guard for e^{t m_n}: |t Re m_n| must stay below this.
inline constexpr double kExponentLimit = 700.0;

/// m_n exactly; Euler and Hardy symbols only.
ExactScalar symbol_eval_exact(const MultiplierSymbol& s, std::size_t n);
/// m_n rounded once to binary64. IndexOutOfRange past an explicit sequence.
Complex symbol_eval(const MultiplierSymbol& s, std::size_t n);
/// (m_0, ..., m_N).
std::vector<Complex> multiplier_sequence(const MultiplierSymbol& s, std::size_t order);

MultiplierSymbol symbol_add(const MultiplierSymbol& s1, const MultiplierSymbol& s2);

/// e^{t m}, with the phase reduced in extended precision. Throws Overflow
/// (naming index n) when |t Re m| > kExponentLimit.
Complex scaled_exponential(Complex m, double t, std::size_t n);

/// The coefficients e^{t m_n}, n = 0..N, i.e. f_t truncated at N.
TruncatedTaylorSeries exp_scaled_coefficients(const MultiplierSymbol& s, double t,
                                              std::size_t order);
/// log|e^{t m_n}| = t Re m_n, for growth tests that must not overflow.
std::vector<double> log_abs_scaled_coefficients(const MultiplierSymbol& s, double t,
                                                std::size_t order);

/// coeffs[n] -> m_n coeffs[n].
TruncatedTaylorSeries apply_multiplier(const MultiplierSymbol& s, const TruncatedTaylorSeries& f);

}  // namespace hflow
