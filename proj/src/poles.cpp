#include "hflow/poles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "hflow/error.hpp"

namespace hflow {
namespace {

double max_on_unit_circle(std::span<const Complex> coeffs) {
  const std::size_t samples = std::max<std::size_t>(256, 8 * coeffs.size());
  double best = 0.0;
  for (std::size_t k = 0; k < samples; ++k) {
    Complex z = std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(k) / samples);
    best = std::max(best, std::abs(evaluate_polynomial(coeffs, z)));
  }
  return best;
}

std::vector<Complex> trim_leading(std::vector<Complex> p) {
  double scale = 0.0;
  for (auto v : p) scale = std::max(scale, std::abs(v));
  while (p.size() > 1 && std::abs(p.back()) <= 1e-14 * scale) p.pop_back();
  return p;
}

Complex newton_polish(std::span<const Complex> coeffs, Complex z) {
  for (int iter = 0; iter < 3; ++iter) {
    Complex value{0.0, 0.0}, slope{0.0, 0.0};
    for (std::size_t k = coeffs.size(); k-- > 0;) {
      slope = slope * z + value;
      value = value * z + coeffs[k];
    }
    if (std::abs(slope) == 0.0) break;
    Complex step = value / slope;
    if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) break;
    z -= step;
  }
  return z;
}

}  // namespace

std::string to_string(PoleMethod m) {
  switch (m) {
    case PoleMethod::Periodic: return "periodic";
    case PoleMethod::Fitted: return "fitted";
    case PoleMethod::None: return "none";
  }
  return "none";
}

std::optional<std::size_t> detect_period(std::span<const Complex> c, std::size_t max_period) {
  if (max_period == 0 || c.size() < 3 * max_period)
    throw Error(ErrorKind::DegenerateInput, "period detection needs at least 3*max_period samples");
  for (std::size_t p = 1; p <= max_period; ++p) {
    bool periodic = true;
    for (std::size_t n = 0; n + p < c.size() && periodic; ++n)
      periodic = std::abs(c[n + p] - c[n]) <= kPeriodTolerance * (1.0 + std::abs(c[n]));
    if (periodic) return p;
  }
  return std::nullopt;
}

RationalForm reconstruct_periodic_rational(std::span<const Complex> c, std::size_t p) {
  if (p == 0 || c.size() < p)
    throw Error(ErrorKind::PeriodMismatch, "period exceeds the available coefficients");
  RationalForm r;
  r.numerator.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(p));
  r.denominator.assign(p + 1, Complex{0.0, 0.0});
  r.denominator.front() = 1.0;
  r.denominator.back() = -1.0;
  r.exact = true;
  r.period = p;

  std::vector<Complex> expanded = expand(r, c.size() - 1);
  for (std::size_t n = 0; n < c.size(); ++n) {
    if (std::abs(expanded[n] - c[n]) > kPeriodTolerance * (1.0 + std::abs(c[n])))
      throw Error(ErrorKind::PeriodMismatch,
                  "coefficients are not " + std::to_string(p) + "-periodic at n=" +
                      std::to_string(n));
  }
  return r;
}

std::vector<Complex> expand(const RationalForm& r, std::size_t order) {
  if (r.denominator.empty() || r.denominator.front() == Complex{0.0, 0.0})
    throw Error(ErrorKind::InvalidArgument, "denominator needs a nonzero constant term");
  std::vector<Complex> s(order + 1);
  for (std::size_t n = 0; n <= order; ++n) {
    Complex acc = n < r.numerator.size() ? r.numerator[n] : Complex{0.0, 0.0};
    for (std::size_t k = 1; k < r.denominator.size() && k <= n; ++k)
      acc -= r.denominator[k] * s[n - k];
    s[n] = acc / r.denominator.front();
  }
  return s;
}

RationalForm fit_rational(std::span<const Complex> c, std::size_t d) {
  if (d == 0 || d > kMaxFitDegree)
    throw Error(ErrorKind::InvalidArgument, "denominator degree must be in [1, 16]");
  if (c.size() < 4 * d)
    throw Error(ErrorKind::DegenerateInput, "rational fit of degree d needs 4d coefficients");

  if (std::all_of(c.begin(), c.end(), [](Complex v) { return v == Complex{0.0, 0.0}; }))
    return RationalForm{{Complex{0.0, 0.0}}, {Complex{1.0, 0.0}}, false, 0, 0.0};

  double best_residual = std::numeric_limits<double>::infinity();
  for (std::size_t deg = 1; deg <= d; ++deg) {
    // Row n: c_n + sum_k b_k c_{n-k} = 0, scaled by the row's largest entry.
    std::vector<std::size_t> rows;
    std::vector<double> scales;
    for (std::size_t n = deg; n < c.size(); ++n) {
      double scale = std::abs(c[n]);
      for (std::size_t k = 1; k <= deg; ++k) scale = std::max(scale, std::abs(c[n - k]));
      if (scale > 0.0) {
        rows.push_back(n);
        scales.push_back(scale);
      }
    }
    if (rows.size() < deg) continue;

    Eigen::MatrixXcd A(rows.size(), deg);
    Eigen::VectorXcd rhs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t k = 1; k <= deg; ++k) A(i, k - 1) = c[rows[i] - k] / scales[i];
      rhs(i) = -c[rows[i]] / scales[i];
    }
    Eigen::VectorXcd b = A.colPivHouseholderQr().solve(rhs);
    double residual = (A * b - rhs).cwiseAbs().maxCoeff();
    if (!std::isfinite(residual)) continue;
    best_residual = std::min(best_residual, residual);
    if (residual > kFitTolerance) continue;

    RationalForm r;
    r.denominator.assign(deg + 1, Complex{0.0, 0.0});
    r.denominator[0] = 1.0;
    for (std::size_t k = 1; k <= deg; ++k) r.denominator[k] = b(k - 1);
    r.numerator.assign(deg, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < deg; ++i) {
      for (std::size_t k = 0; k <= i; ++k) r.numerator[i] += r.denominator[k] * c[i - k];
    }
    r.residual = residual;
    return r;
  }
  throw Error(ErrorKind::IllConditioned,
              "no rational fit with denominator degree <= " + std::to_string(d) +
                  " (best residual " + std::to_string(best_residual) + ")");
}

Complex evaluate_polynomial(std::span<const Complex> coeffs, Complex z) {
  Complex acc{0.0, 0.0};
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * z + coeffs[k];
  return acc;
}

std::vector<Complex> polynomial_roots(std::span<const Complex> coeffs) {
  std::vector<Complex> p = trim_leading({coeffs.begin(), coeffs.end()});
  const std::size_t degree = p.size() - 1;
  if (degree == 0) return {};
  Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(degree, degree);
  for (std::size_t i = 1; i < degree; ++i) companion(i, i - 1) = 1.0;
  for (std::size_t i = 0; i < degree; ++i) companion(i, degree - 1) = -p[i] / p[degree];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
  std::vector<Complex> roots;
  for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i)
    roots.push_back(newton_polish(p, solver.eigenvalues()(i)));
  return roots;
}

PoleReport pole_locations(const RationalForm& r, double tol) {
  std::vector<Complex> candidates;
  if (r.exact && r.period > 0) {
    for (std::size_t j = 0; j < r.period; ++j)
      candidates.push_back(std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(j) /
                                               static_cast<double>(r.period)));
  } else {
    candidates = polynomial_roots(r.denominator);
  }

  PoleReport report;
  report.tolerance = tol;
  double numerator_scale = max_on_unit_circle(r.numerator);
  for (Complex zeta : candidates) {
    if (std::abs(evaluate_polynomial(r.numerator, zeta)) <= kRemovableTolerance * numerator_scale)
      continue;
    report.poles.push_back({zeta, std::abs(evaluate_polynomial(r.denominator, zeta))});
  }
  report.all_real = classify_real_axis(report, tol);
  return report;
}

bool classify_real_axis(const PoleReport& report, double tol) {
  return std::all_of(report.poles.begin(), report.poles.end(), [tol](const PoleReport::Pole& p) {
    return std::abs(p.location.imag()) <= tol * (1.0 + std::abs(p.location));
  });
}

PoleAnalysis analyze_poles(std::span<const Complex> c, double tol) {
  PoleAnalysis out;
  out.report.tolerance = tol;
  if (std::all_of(c.begin(), c.end(), [](Complex v) { return v == Complex{0.0, 0.0}; })) {
    out.note = "zero series: no poles";
    return out;
  }

  if (c.size() >= 3) {
    if (auto p = detect_period(c, c.size() / 3)) {
      try {
        out.form = reconstruct_periodic_rational(c, *p);
        out.method = PoleMethod::Periodic;
        out.report = pole_locations(*out.form, tol);
        return out;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::PeriodMismatch) throw;
      }
    }
  }

  std::size_t degree = std::min(kMaxFitDegree, c.size() / 4);
  if (degree > 0) {
    try {
      out.form = fit_rational(c, degree);
      out.method = PoleMethod::Fitted;
      out.report = pole_locations(*out.form, tol);
      return out;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::IllConditioned) throw;
      out.note = e.what();
    }
  }
  if (out.note.empty()) out.note = "too few coefficients for a rational fit";
  return out;
}

}  // namespace hflow
