#include "hflow/mellin.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hflow/error.hpp"

namespace hflow {
namespace {

// Closed sector {apex + w : |Im w| <= K Re w} cut at Re z = r_max.
void sample_sector(double apex, double K, double r_max, std::size_t budget,
                   std::vector<Complex>& out) {
  out.emplace_back(apex, 0.0);
  double length = r_max - apex;
  if (length <= 0.0 || budget < 8) return;
  const std::size_t rows = 8;
  std::size_t ray_points = budget / 4;
  std::size_t columns = std::max<std::size_t>(1, (budget - 1 - 2 * ray_points) / rows);

  for (std::size_t k = 1; k <= ray_points; ++k) {
    double s = length * std::pow(static_cast<double>(k) / ray_points, 2);
    out.emplace_back(apex + s, K * s);
    out.emplace_back(apex + s, -K * s);
  }
  for (std::size_t k = 1; k <= columns; ++k) {
    double s = length * std::pow(static_cast<double>(k) / columns, 2);
    double half_width = K * s;
    for (std::size_t l = 1; l <= rows; ++l) {
      double y = half_width * (2.0 * static_cast<double>(l) / (rows + 1) - 1.0);
      out.emplace_back(apex + s, y);
    }
  }
}

}  // namespace

AsymptoticHalfplane::AsymptoticHalfplane(std::vector<double> k, std::vector<double> K)
    : kappas(std::move(k)), Ks(std::move(K)) {
  if (kappas.empty() || kappas.size() != Ks.size())
    throw Error(ErrorKind::InvalidArgument, "kappa and K lists must have equal nonzero length");
  if (!(kappas.front() < 0.0)) throw Error(ErrorKind::InvalidArgument, "kappa_1 must be negative");
  for (std::size_t n = 0; n < Ks.size(); ++n) {
    if (!(Ks[n] > 0.0) || (n > 0 && !(Ks[n] > Ks[n - 1])))
      throw Error(ErrorKind::InvalidArgument, "K_n must be positive and strictly increasing");
  }
}

AsymptoticHalfplane AsymptoticHalfplane::hardy_default(std::size_t sectors) {
  std::vector<double> kappas(sectors, 0.0);
  std::vector<double> Ks(sectors);
  if (!kappas.empty()) kappas[0] = -0.5;
  for (std::size_t n = 0; n < sectors; ++n) Ks[n] = static_cast<double>(n + 1);
  return {std::move(kappas), std::move(Ks)};
}

GammaRegion::GammaRegion(std::size_t j_, AsymptoticHalfplane parent_)
    : j(j_), parent(std::move(parent_)) {
  if (j == 0 || j > parent.size())
    throw Error(ErrorKind::InvalidArgument,
                "Gamma_j needs 1 <= j <= " + std::to_string(parent.size()));
}

bool halfplane_contains(const AsymptoticHalfplane& w, Complex z) {
  for (std::size_t n = 0; n < w.size(); ++n) {
    Complex shifted = z - w.kappas[n];
    if (std::abs(shifted.imag()) < w.Ks[n] * shifted.real()) return true;
  }
  return false;
}

bool gamma_contains(const GammaRegion& g, Complex z) {
  for (std::size_t n = 0; n < g.j; ++n) {
    Complex shifted = z - g.apex(n);
    // Boundary rays are sampled too, so allow for rounding in their coordinates.
    double slack = 1e-12 * (1.0 + std::abs(z));
    if (std::abs(shifted.imag()) <= g.parent.Ks[n] * shifted.real() + slack) return true;
  }
  return false;
}

std::vector<Complex> sample_gamma(const GammaRegion& g, const GridSpec& grid) {
  std::vector<Complex> out;
  std::size_t budget = grid.points / g.j;
  for (std::size_t n = 0; n < g.j; ++n)
    sample_sector(g.apex(n), g.parent.Ks[n], grid.r_max, budget, out);
  return out;
}

std::vector<Complex> sample_halfplane(const AsymptoticHalfplane& w, const GridSpec& grid) {
  constexpr double kInset = 1e-9;
  std::vector<Complex> out;
  std::size_t budget = grid.points / w.size();
  for (std::size_t n = 0; n < w.size(); ++n)
    sample_sector(w.kappas[n] + kInset, w.Ks[n] * (1.0 - kInset), grid.r_max, budget, out);
  return out;
}

Complex MellinWitness::operator()(Complex z) const {
  Complex shifted = z + 1.0;
  if (std::abs(shifted) < 1e-9)
    throw Error(ErrorKind::PoleAtMinusOne, "Mellin witness evaluated at z = -1");
  Complex u = 1.0 / shifted;
  Complex exponent{0.0, 0.0};
  for (std::size_t k = hardy_coeffs.size(); k-- > 0;) exponent = exponent * u + t * hardy_coeffs[k];
  return std::exp(exponent);
}

MellinWitness build_hardy_witness(std::vector<Complex> coeffs, double t) {
  if (coeffs.empty()) coeffs.emplace_back(0.0, 0.0);
  return MellinWitness{std::move(coeffs), t, AsymptoticHalfplane::hardy_default()};
}

MellinWitness build_hardy_witness(const HardyRational& symbol, double t) {
  std::vector<Complex> coeffs;
  for (const auto& a : symbol.coeffs) coeffs.push_back(a.to_complex());
  return build_hardy_witness(std::move(coeffs), t);
}

std::vector<WeightedSample> weighted_samples(const MellinWitness& w, const GammaRegion& g, double a,
                                             const GridSpec& grid) {
  if (!(a > 0.0)) throw Error(ErrorKind::InvalidArgument, "seminorm weight a must be positive");
  double rate = a + 1.0 / static_cast<double>(g.j);
  std::vector<WeightedSample> out;
  for (Complex z : sample_gamma(g, grid))
    out.push_back({z, std::abs(w(z)) * std::exp(-rate * z.real())});
  return out;
}

double seminorm(const MellinWitness& w, const GammaRegion& g, double a, const GridSpec& grid) {
  double sup = 0.0;
  for (const auto& s : weighted_samples(w, g, a, grid)) sup = std::max(sup, s.value);
  return sup;
}

double hardy_seminorm_bound(std::span<const Complex> coeffs, double t, double a, std::size_t j) {
  double exponent = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k)
    exponent += std::ldexp(std::abs(t * coeffs[k]), static_cast<int>(k));
  return std::exp(exponent) * std::exp((a + 1.0 / static_cast<double>(j)) / 2.0);
}

MellinBoundCheck verify_mellin_bound(const MellinWitness& w, double C, const GridSpec& grid) {
  if (!(C > 0.0)) throw Error(ErrorKind::InvalidArgument, "Mellin constant must be positive");
  MellinBoundCheck check{true, 0.0, Complex{}};
  for (Complex z : sample_halfplane(w.domain, grid)) {
    double ratio = std::abs(w(z)) / (C * std::exp(C * std::abs(z.real())));
    if (ratio > check.max_ratio) {
      check.max_ratio = ratio;
      check.worst = z;
    }
  }
  check.holds = check.max_ratio <= 1.0;
  return check;
}

std::vector<double> witness_continuity_modulus(std::span<const Complex> coeffs, double t,
                                               std::span<const double> h_list,
                                               const GammaRegion& g, double a,
                                               const GridSpec& grid) {
  if (!(a > 0.0)) throw Error(ErrorKind::InvalidArgument, "seminorm weight a must be positive");
  for (std::size_t i = 0; i < h_list.size(); ++i) {
    if (h_list[i] < 0.0 || (i > 0 && h_list[i] > h_list[i - 1]))
      throw Error(ErrorKind::InvalidArgument, "h list must be nonnegative and nonincreasing");
  }
  std::vector<Complex> a_k(coeffs.begin(), coeffs.end());
  MellinWitness base = build_hardy_witness(a_k, t);
  double rate = a + 1.0 / static_cast<double>(g.j);
  std::vector<Complex> points = sample_gamma(g, grid);

  std::vector<double> out;
  for (double h : h_list) {
    MellinWitness moved = build_hardy_witness(a_k, t + h);
    double sup = 0.0;
    for (Complex z : points)
      sup = std::max(sup, std::abs(base(z) - moved(z)) * std::exp(-rate * z.real()));
    out.push_back(sup);
  }
  return out;
}

}  // namespace hflow
