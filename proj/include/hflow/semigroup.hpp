#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hflow/classify.hpp"
#include "hflow/series.hpp"
#include "hflow/symbols.hpp"

namespace hflow {

/// T_t for a multiplier symbol: (T_t f)_n = e^{t m_n} f_n.
class SemigroupEvaluator {
 public:
  /// Attaches the dilation closed form when the symbol is a real first-order
  /// Euler polynomial a*theta + b.
  explicit SemigroupEvaluator(MultiplierSymbol symbol);

  const MultiplierSymbol& symbol() const { return symbol_; }
  const std::optional<ClosedFormDilation>& closed_form() const { return closed_form_; }
  /// m_0..m_order, served from a prefix computed once at construction.
  std::vector<Complex> multipliers(std::size_t order) const;

 private:
  MultiplierSymbol symbol_;
  std::optional<ClosedFormDilation> closed_form_;
  std::vector<Complex> cached_;
};

/// Callers gate t < 0 for symbols that only generate a semigroup.
TruncatedTaylorSeries evolve(const SemigroupEvaluator& e, double t, const TruncatedTaylorSeries& f);

/// Taylor expansion of e^{tb} f(e^{ta} x).
TruncatedTaylorSeries euler_closed_form_evolve(double a, Complex b, double t,
                                               const TruncatedTaylorSeries& f);

/// max_n |(T_t T_s f)_n - (T_{t+s} f)_n| / (1 + |(T_{t+s} f)_n|).
double check_semigroup_law(const SemigroupEvaluator& e, double t, double s,
                           const TruncatedTaylorSeries& f);

struct FiniteDifferenceResult {
  TruncatedTaylorSeries approx;
  /// Max relative coefficient deviation from apply_multiplier(symbol, f).
  double error;
};

/// Forward difference (T_h f - f)/h.
FiniteDifferenceResult generator_finite_difference(const SemigroupEvaluator& e,
                                                   const TruncatedTaylorSeries& f, double h);

struct ContinuityTracePoint {
  double t;
  double sup_deviation;  // sup_{|x|<=R} |T_t f(x) - f(x)|
  double sup_value;      // sup_{|x|<=R} |T_t f(x)|
};

/// Sampled surrogate for strong continuity and boundedness on [-R, R].
struct ContinuityProbe {
  std::vector<ContinuityTracePoint> trace;  // t = t0, t0/2, ..., decreasing in t
  double bounded_sup;                       // max over the trace of sup_value
};

inline constexpr std::size_t kProbeLevels = 10;

/// DomainExceeded when [-R, R] leaves the reliable region of some T_t f
/// (for real Euler symbols: R e^{|a| t0} must stay below the radius of f).
ContinuityProbe strong_continuity_probe(const SemigroupEvaluator& e, const TruncatedTaylorSeries& f,
                                        double t0, double R, std::size_t grid);

}  // namespace hflow
