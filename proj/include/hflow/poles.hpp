#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hflow/series.hpp"

namespace hflow {

/// numerator(z) / denominator(z), coefficients in ascending powers.
struct RationalForm {
  std::vector<Complex> numerator;
  std::vector<Complex> denominator;
  /// True for the exact periodic form sum_{n<p} c_n z^n / (1 - z^p).
  bool exact = false;
  std::size_t period = 0;
  /// Largest normalized recurrence residual (0 for exact forms).
  double residual = 0.0;
};

struct PoleReport {
  struct Pole {
    Complex location;
    double residual;  // |denominator(location)|
  };
  std::vector<Pole> poles;
  bool all_real = true;
  double tolerance = 0.0;
};

inline constexpr double kPeriodTolerance = 1e-10;
inline constexpr double kFitTolerance = 1e-6;
inline constexpr double kRemovableTolerance = 1e-6;
inline constexpr double kDefaultRealAxisTolerance = 1e-8;
inline constexpr std::size_t kMaxFitDegree = 16;

/// Smallest p <= max_period with |c_{n+p} - c_n| <= 1e-10 (1 + |c_n|) for
/// every valid n. Requires c.size() >= 3 * max_period.
std::optional<std::size_t> detect_period(std::span<const Complex> c, std::size_t max_period);

/// c_0..c_{p-1} over 1 - z^p; throws PeriodMismatch if the expansion does not
/// reproduce c within the period tolerance.
RationalForm reconstruct_periodic_rational(std::span<const Complex> c, std::size_t p);

/// Taylor coefficients 0..order of the rational form.
std::vector<Complex> expand(const RationalForm& r, std::size_t order);

/// Least-squares linear-recurrence fit with denominator 1 + b_1 z + ... + b_d' z^d'
/// for the smallest d' <= d whose normalized residual is <= 1e-6. Requires
/// c.size() >= 4d and d <= 16; throws IllConditioned if no degree fits.
RationalForm fit_rational(std::span<const Complex> c, std::size_t d);

Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z);

/// Roots of a polynomial given in ascending powers, via the companion matrix.
std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs);

/// Denominator roots at which the numerator does not vanish (relative to its
/// maximum on the unit circle).
PoleReport pole_locations(const RationalForm& r, double tol = kDefaultRealAxisTolerance);

/// True iff every pole has |Im z| <= tol (1 + |z|).
bool classify_real_axis(const PoleReport& report, double tol);

enum class PoleMethod { Periodic, Fitted, None };
std::string to_string(PoleMethod m);

struct PoleAnalysis {
  PoleMethod method = PoleMethod::None;
  std::optional<RationalForm> form;
  PoleReport report;
  std::string note;
};

/// Exact periodic reconstruction first, least-squares fit second.
PoleAnalysis analyze_poles(std::span<const Complex> c, double tol = kDefaultRealAxisTolerance);

}  // namespace hflow
