// Acceptance checks, one line per criterion. Exit status is nonzero if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hflow/classify.hpp"
#include "hflow/mellin.hpp"
#include "hflow/poles.hpp"
#include "hflow/semigroup.hpp"
#include "hflow/series.hpp"
#include "hflow/symbols.hpp"

using namespace hflow;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

ExactScalar rat(std::int64_t p, std::int64_t d = 1) { return ExactScalar::from_rational(Rational(p, d)); }
ExactScalar irat(std::int64_t p, std::int64_t d = 1) { return ExactScalar::imaginary_unit() * rat(p, d); }

double rel(Complex a, Complex b) {
  double s = std::max(std::abs(a), std::abs(b));
  return s == 0.0 ? 0.0 : std::abs(a - b) / s;
}

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

Complex nearest_pole(const PoleReport& r, Complex target) {
  Complex best{1e300, 0};
  for (const auto& p : r.poles)
    if (std::abs(p.location - target) < std::abs(best - target)) best = p.location;
  return best;
}

TruncatedTaylorSeries random_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  return TruncatedTaylorSeries::generate(order, [&](std::size_t) { return Complex(u(rng), u(rng)); });
}

// Dyadic coefficients keep every product exact.
TruncatedTaylorSeries dyadic_series(std::mt19937_64& rng, std::size_t order) {
  std::uniform_int_distribution<int> u(-64, 64);
  return TruncatedTaylorSeries::generate(order, [&](std::size_t) { return Complex(u(rng) / 8.0, u(rng) / 8.0); });
}

Outcome euler_closed_form() {
  double worst = 0.0;
  bool generates = true;
  for (double a : {-1.0, 0.5, 1.0}) {
    EulerPoly p({rat(0), ExactScalar::from_rational(Rational(static_cast<std::int64_t>(a * 2), 2))});
    generates = generates && classify(p).verdict == Verdict::Generates;
    for (double t : {0.25, 1.0}) {
      auto c = exp_scaled_coefficients(p, t, 128);
      PoleAnalysis an = analyze_poles(c.coeffs());
      Complex expected = std::exp(-t * a);
      worst = std::max(worst, rel(nearest_pole(an.report, expected), expected));
    }
  }
  return {generates && worst < 1e-4, "max relative pole error " + fmt("%.2e", worst)};
}

Outcome euler_nonreal() {
  EulerPoly p({rat(0), irat(1)});
  bool not_gen = classify(p).verdict == Verdict::NotGenerates;
  auto c = exp_scaled_coefficients(p, 1.0, 128);
  RationalForm r = fit_rational(c.coeffs(), 4);
  PoleReport rep = pole_locations(r);
  double im = rep.poles.empty() ? 0.0 : std::abs(rep.poles.front().location.imag());
  return {not_gen && rep.poles.size() == 1 && im > 0.5, "|Im pole| = " + fmt("%.6f", im)};
}

Outcome periodic_witness() {
  EulerPoly p({rat(0), rat(0), irat(1)});
  GenerationVerdict v = classify(p);
  if (v.verdict != Verdict::NotGenerates || v.reason != Reason::NegCase2) return {false, "wrong verdict"};
  const auto& c = std::get<RootOfUnityPole>(v.certificate->value);
  // Oracle: xi_n = e^{i pi n^2 / 4} summed directly at every 8th root of unity.
  double at_i = 0.0;
  bool pole_is_offaxis_root = false;
  for (int k = 0; k < 8; ++k) {
    Complex zeta = std::polar(1.0, std::numbers::pi * k / 4.0);
    Complex sum = 0.0;
    for (int n = 0; n < 8; ++n) sum += std::polar(1.0, std::numbers::pi * n * n / 4.0) * std::pow(zeta, n);
    if (k == 2) at_i = std::abs(sum);
    if (std::abs(zeta - c.pole) < 1e-12 && std::abs(sum) > 1e-6 && std::abs(zeta.imag()) > 1e-6)
      pole_is_offaxis_root = true;
  }
  bool witness = c.S == 1 && c.q == 4 && std::abs(c.t0 - std::numbers::pi / 4) < 1e-15 && c.period == 8;
  bool pole = std::abs(c.pole - Complex(0, 1)) < 1e-12 && pole_is_offaxis_root;
  bool modulus = std::abs(c.numerator_abs - 4.0) <= 1e-9 && std::abs(at_i - 4.0) <= 1e-9;
  auto f = exp_scaled_coefficients(p, c.t0, 64);
  PoleAnalysis an = analyze_poles(f.coeffs());
  bool pipeline = !an.report.all_real && std::abs(nearest_pole(an.report, Complex(0, 1)) - Complex(0, 1)) < 1e-10;
  std::ostringstream d;
  d << "S=" << c.S << " q=" << c.q << " t0=" << fmt("%.12f", c.t0) << " period=" << c.period
    << " |N(i)|=" << fmt("%.12f", c.numerator_abs) << " oracle=" << fmt("%.12f", at_i);
  return {witness && pole && modulus && pipeline, d.str()};
}

Outcome blow_up() {
  EulerPoly p({rat(0), rat(0), rat(1)});
  GenerationVerdict v = classify(p);
  RadiusEstimate r = radius_from_log_magnitudes(log_abs_scaled_coefficients(p, 1.0, kDefaultOrder));
  bool ok = v.verdict == Verdict::NotGenerates && v.reason == Reason::NegCase1 && r.zero && r.radius == 0.0;
  return {ok, "radius " + fmt("%g", r.radius) + ", reason " + to_string(v.reason)};
}

Outcome irrational_rotation() {
  double r = std::sqrt(2.0) - 1.0;
  Complex oracle(std::cos(2 * std::numbers::pi * r), -std::sin(2 * std::numbers::pi * r));
  ExactScalar ir = ExactScalar::imaginary_unit() * (ExactScalar::sqrt_of(2) - rat(1));

  // a = i r: f_t = 1/(1 - e^{i t r} z), sampled at t = 2 pi.
  EulerPoly linear({rat(0), ir});
  bool v1 = classify(linear).verdict == Verdict::NotGenerates;
  PoleAnalysis a1 = analyze_poles(exp_scaled_coefficients(linear, 2 * std::numbers::pi, 128).coeffs());
  double e1 = std::abs(nearest_pole(a1.report, oracle) - oracle);

  // i theta^2 + i r theta: the witness time 2 pi removes the quadratic phase.
  EulerPoly quad({rat(0), ir, irat(1)});
  GenerationVerdict v = classify(quad);
  bool v2 = v.verdict == Verdict::NotGenerates && v.reason == Reason::NegIrrationalRotation;
  double t0 = std::get<IrrationalRotation>(v.certificate->value).t;
  PoleAnalysis a2 = analyze_poles(exp_scaled_coefficients(quad, t0, 128).coeffs());
  double e2 = std::abs(nearest_pole(a2.report, oracle) - oracle);
  return {v1 && v2 && e1 < 1e-6 && e2 < 1e-6 && !a1.report.all_real && !a2.report.all_real,
          "pole errors " + fmt("%.2e", e1) + " (degree 1), " + fmt("%.2e", e2) + " (degree 2)"};
}

Outcome semigroup_law() {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> time(0.0, 2.0);
  auto f = random_series(rng, 64);
  double worst = 0.0;
  for (const auto& e : {SemigroupEvaluator(EulerPoly({rat(0), rat(1)})), SemigroupEvaluator(HardyRational({rat(0), rat(1)}))})
    for (int i = 0; i < 100; ++i) worst = std::max(worst, check_semigroup_law(e, time(rng), time(rng), f));
  return {worst < 1e-11, "max deviation " + fmt("%.2e", worst)};
}

Outcome generator_recovery() {
  SemigroupEvaluator e(EulerPoly({rat(0), rat(1)}));
  auto f = TruncatedTaylorSeries::generate(32, [](std::size_t n) { return std::pow(0.5, double(n)); });
  std::vector<double> hs = {1e-2, 1e-3, 1e-4, 1e-5};
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (double h : hs) {
    double x = std::log(h), y = std::log(generator_finite_difference(e, f, h).error);
    sx += x, sy += y, sxx += x * x, sxy += x * y;
  }
  double n = double(hs.size());
  double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return {std::abs(slope - 1.0) <= 0.1, "log-log slope " + fmt("%.4f", slope)};
}

Outcome group_property() {
  std::mt19937_64 rng(8);
  auto f = random_series(rng, 64);
  SemigroupEvaluator e(HardyRational({rat(0), rat(1)}));
  double worst = 0.0;
  for (double t : {0.5, 2.0}) {
    auto back = evolve(e, -t, evolve(e, t, f));
    for (std::size_t k = 0; k <= 64; ++k) worst = std::max(worst, std::abs(back[k] - f[k]));
  }
  return {worst < 1e-11, "max deviation " + fmt("%.2e", worst)};
}

Outcome mellin_bound() {
  AsymptoticHalfplane omega = AsymptoticHalfplane::hardy_default();
  std::vector<Complex> a1 = {0.0, 1.0};
  double worst_ratio = 0.0;
  for (double t : {-2.0, -1.0, -0.5, 0.5, 1.0, 2.0}) {
    MellinWitness w = build_hardy_witness(a1, t);
    for (std::size_t j = 1; j <= 5; ++j) {
      double bound = std::exp(2.0 * std::abs(t)) * std::exp((1.0 + 1.0 / double(j)) / 2.0);
      for (const auto& s : weighted_samples(w, GammaRegion(j, omega), 1.0))
        worst_ratio = std::max(worst_ratio, s.value / bound);
    }
  }
  double min_r = 1e300, max_r = 0.0;
  std::vector<double> hs = {1e-2, 1e-3, 1e-4};
  for (std::size_t j = 1; j <= 5; ++j) {
    auto m = witness_continuity_modulus(a1, 1.0, hs, GammaRegion(j, omega), 1.0);
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
      min_r = std::min(min_r, m[i] / m[i + 1]);
      max_r = std::max(max_r, m[i] / m[i + 1]);
    }
  }
  bool ok = worst_ratio <= 1.0 && min_r >= 5.0 && max_r <= 20.0;
  return {ok, "max sample/bound " + fmt("%.4f", worst_ratio) + ", modulus ratios in [" + fmt("%.3f", min_r) +
                  ", " + fmt("%.3f", max_r) + "]"};
}

Outcome algebra_laws() {
  std::mt19937_64 rng(10);
  int failures = 0;
  for (int i = 0; i < 100; ++i) {
    std::size_t order = 1 + rng() % 48;
    auto f = dyadic_series(rng, order), g = dyadic_series(rng, order), h = dyadic_series(rng, order);
    auto ones = TruncatedTaylorSeries::ones(order);
    if (!(hadamard_product(f, ones) == f && hadamard_product(ones, f) == f)) ++failures;
    if (!(hadamard_product(f, g) == hadamard_product(g, f))) ++failures;
    if (!(hadamard_product(hadamard_product(f, g), h) == hadamard_product(f, hadamard_product(g, h)))) ++failures;
    LaurentTailSeries lf = phi_inverse(f), lg = phi_inverse(g);
    if (!(phi_map(hadamard_product_laurent(lf, lg)) == hadamard_product(phi_map(lf), phi_map(lg)))) ++failures;
    if (!(hadamard_product_laurent(lf, LaurentTailSeries::ones(order)) == lf)) ++failures;
  }
  return {failures == 0, std::to_string(failures) + " exact-equality failures over 100 random triples"};
}

Outcome additivity() {
  EulerPoly p1({rat(0), rat(1)}), p2({rat(0), rat(2)});
  GenerationVerdict v = classify_sum(classify(p1), classify(p2));
  MultiplierSymbol sum = symbol_add(p1, p2);
  double worst = 0.0;
  for (double t : {0.25, 0.5, 1.0}) {
    auto product = hadamard_product(exp_scaled_coefficients(p1, t, 64), exp_scaled_coefficients(p2, t, 64));
    auto direct = exp_scaled_coefficients(sum, t, 64);
    for (std::size_t n = 0; n <= 64; ++n) worst = std::max(worst, rel(product[n], direct[n]));
  }
  bool ok = v.verdict == Verdict::Generates && v.reason == Reason::Additivity && worst <= 1e-12;
  return {ok, "max relative deviation " + fmt("%.2e", worst)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria = {
      {"Euler closed form: pole at e^{-ta}", euler_closed_form},
      {"Euler non-real coefficient: off-axis pole", euler_nonreal},
      {"periodic witness for i*theta^2", periodic_witness},
      {"blow-up for theta^2", blow_up},
      {"irrational rotation r = sqrt(2) - 1", irrational_rotation},
      {"semigroup law", semigroup_law},
      {"generator recovery rate", generator_recovery},
      {"group property", group_property},
      {"Mellin bound and continuity", mellin_bound},
      {"algebra laws", algebra_laws},
      {"additivity", additivity},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs >= 10.0) {
      o.pass = false;
      o.detail += " (exceeded 10 s)";
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2zu %s: %s  [%s, %.2f s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].name,
                o.detail.c_str(), secs);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
