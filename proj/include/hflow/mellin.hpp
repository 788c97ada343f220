#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hflow/series.hpp"
#include "hflow/symbols.hpp"

namespace hflow {

/// omega = union_n (kappa_n + {z : |Im z| < K_n Re z}), finitely many sectors.
struct AsymptoticHalfplane {
  std::vector<double> kappas;
  std::vector<double> Ks;

  /// Throws InvalidArgument unless kappa_1 < 0, the lists have equal nonzero
  /// length and K_n > 0 is strictly increasing.
  AsymptoticHalfplane(std::vector<double> kappas, std::vector<double> Ks);

  /// kappa_1 = -1/2, kappa_n = 0 for n >= 2, K_n = n.
  static AsymptoticHalfplane hardy_default(std::size_t sectors = 8);

  std::size_t size() const { return kappas.size(); }
};

/// Gamma_j = closure of union_{n<=j} (kappa_n + 1/j + omega_{K_n}).
struct GammaRegion {
  std::size_t j;
  AsymptoticHalfplane parent;

  GammaRegion(std::size_t j, AsymptoticHalfplane parent);
  double apex(std::size_t n) const { return parent.kappas[n] + 1.0 / static_cast<double>(j); }
};

/// Open sectors |Im(z - kappa_n)| < K_n Re(z - kappa_n).
bool halfplane_contains(const AsymptoticHalfplane& w, Complex z);
/// Closed sectors of Gamma_j, with a 1e-12 relative rounding allowance.
bool gamma_contains(const GammaRegion& g, Complex z);

/// Sampling of a sector union: apexes, both boundary rays and an interior
/// lattice, spaced quadratically so points concentrate near the apexes.
struct GridSpec {
  std::size_t points = 2048;
  double r_max = 20.0;
};

std::vector<Complex> sample_gamma(const GammaRegion& g, const GridSpec& grid);
/// Points strictly inside omega (sectors pulled in by 1e-9).
std::vector<Complex> sample_halfplane(const AsymptoticHalfplane& w, const GridSpec& grid);

/// mu_t(z) = exp(sum_k t a_k / (z+1)^k); interpolates e^{t m_n} at z = n.
struct MellinWitness {
  std::vector<Complex> hardy_coeffs;
  double t;
  AsymptoticHalfplane domain;

  /// PoleAtMinusOne within 1e-9 of z = -1.
  Complex operator()(Complex z) const;
};

MellinWitness build_hardy_witness(std::vector<Complex> coeffs, double t);
MellinWitness build_hardy_witness(const HardyRational& symbol, double t);

struct WeightedSample {
  Complex z;
  double value;  // |mu_t(z)| e^{-(a+1/j) Re z}
};

std::vector<WeightedSample> weighted_samples(const MellinWitness& w, const GammaRegion& g, double a,
                                             const GridSpec& grid = {});

/// Sampled ||mu_t||_j = sup_{Gamma_j} |mu_t(z)| e^{-(a+1/j) Re z}; requires a > 0.
double seminorm(const MellinWitness& w, const GammaRegion& g, double a, const GridSpec& grid = {});

/// exp(sum_k 2^k |t a_k|) exp((a+1/j)/2), valid because |z+1| >= 1/2 on omega.
double hardy_seminorm_bound(std::span<const Complex> coeffs, double t, double a, std::size_t j);

struct MellinBoundCheck {
  bool holds;
  double max_ratio;  // max |mu(z)| / (C e^{C |Re z|})
  Complex worst;
};

MellinBoundCheck verify_mellin_bound(const MellinWitness& w, double C, const GridSpec& grid = {});

/// ||mu_t - mu_{t+h}||_j for each h (h >= 0, nonincreasing).
std::vector<double> witness_continuity_modulus(std::span<const Complex> coeffs, double t,
                                               std::span<const double> h_list,
                                               const GammaRegion& g, double a,
                                               const GridSpec& grid = {});

}  // namespace hflow
