#include "hflow/classify.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include <boost/integer/common_factor_rt.hpp>

#include "hflow/error.hpp"

namespace hflow {
namespace {

constexpr long double kPi = std::numbers::pi_v<long double>;

BigInt floor_mod(const BigInt& x, const BigInt& m) {
  BigInt r = x % m;
  if (r < 0) r += m;
  return r;
}

BigInt lcm_of_denominators(const EulerPoly& p, std::size_t first) {
  BigInt S = 1;
  for (std::size_t k = first; k < p.coeffs.size(); ++k) {
    BigInt den = denominator(p.coeffs[k].im_rat());
    S = boost::integer::lcm(S, den);
  }
  return S;
}

double real_part_at(const EulerPoly& p, std::size_t n) {
  return symbol_eval_exact(MultiplierSymbol{p}, n).real_part().to_complex().real();
}

BlowUp blow_up_certificate(const EulerPoly& p, std::size_t l) {
  constexpr double t = 1.0;
  constexpr std::size_t kSamples = 6;
  BlowUp cert{l, t, {}, {}};
  for (std::size_t start = 2; start <= (std::size_t{1} << 40); start *= 2) {
    cert.sample_n.clear();
    cert.log_root_growth.clear();
    bool increasing = true;
    for (std::size_t i = 0; i < kSamples; ++i) {
      std::size_t n = start << i;
      double g = t * real_part_at(p, n) / static_cast<double>(n);
      if (!cert.log_root_growth.empty() && !(g > cert.log_root_growth.back())) increasing = false;
      cert.sample_n.push_back(n);
      cert.log_root_growth.push_back(g);
    }
    if (increasing) return cert;
  }
  throw Error(ErrorKind::WitnessNotFound, "no monotone growth window for the blow-up certificate");
}

GenerationVerdict not_generates(Reason reason, Certificate cert) {
  return GenerationVerdict{Verdict::NotGenerates, false, reason, std::move(cert)};
}

GenerationVerdict unknown() { return GenerationVerdict{}; }

GenerationVerdict classify_first_order(const EulerPoly& p) {
  ExactScalar a = p.coeff(1);
  ExactScalar b = p.coeff(0);
  if (a.sign_im() == 0) {
    return GenerationVerdict{Verdict::Generates, true, Reason::Euler1,
                             Certificate{ClosedFormDilation{a.to_complex().real(), b.to_complex()}}};
  }
  // f_t = 1/(1 - z e^{ta}) has its pole off the real axis unless t Im a is a
  // multiple of pi; pick a sample t that keeps it clearly away.
  Complex a_num = a.to_complex();
  double t = 1.0;
  for (int i = 0; i < 60 && std::abs(std::sin(t * a_num.imag())) < 1e-3; ++i) t *= 0.5;
  return not_generates(Reason::Euler1,
                       Certificate{IrrationalRotation{a, t, std::exp(-t * a_num)}});
}

GenerationVerdict classify_euler(const EulerPoly& p) {
  const std::size_t K = p.degree();
  if (K <= 1) return classify_first_order(p);

  // Highest-degree (>= 2) coefficient with a nonvanishing real part decides case (1).
  for (std::size_t k = K; k >= 2; --k) {
    int sign = p.coeffs[k].sign_re();
    if (sign > 0)
      return not_generates(Reason::NegCase1, Certificate{blow_up_certificate(p, k)});
    if (sign < 0) return unknown();
  }
  for (std::size_t k = 2; k <= K; ++k) {
    if (!p.coeffs[k].is_in_iQ()) return unknown();
  }

  // Real parts of a_1 and a_0 are generators of their own and split off.
  ExactScalar r = p.coeff(1).imag_part();
  if (!r.has_surd()) {
    std::vector<ExactScalar> reduced = p.coeffs;
    reduced[0] = ExactScalar{};
    reduced[1] = ExactScalar::imaginary_unit() * r;
    Witness w = find_witness(EulerPoly(reduced));
    std::vector<Complex> numerator = build_periodic_numerator(w.ptilde, w.q);
    RootOfUnityPole cert;
    try {
      cert = certify_offaxis_pole(numerator, w.q);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::NoOffAxisPole) return unknown();
      throw;
    }
    cert.S = w.S;
    cert.ptilde = w.ptilde;
    cert.n0 = w.n0;
    cert.t0 = w.t0;
    return not_generates(Reason::NegCase2, Certificate{std::move(cert)});
  }

  // t0 = 2 S pi kills every theta^k, k >= 2, and leaves e^{2 pi i S r n}.
  BigInt S = lcm_of_denominators(p, 2);
  ExactScalar rotation = ExactScalar::from_rational(Rational(S)) * r;
  Rational rat = rotation.re_rat();
  BigInt whole = numerator(rat) / denominator(rat);
  if (rat < 0 && whole * denominator(rat) != numerator(rat)) whole -= 1;
  long double frac = static_cast<long double>(rational_to_double(rat - Rational(whole))) +
                     static_cast<long double>(rational_to_double(rotation.re_surd())) *
                         std::sqrt(static_cast<long double>(rotation.radicand()));
  long double phase = std::remainder(-2.0L * kPi * frac, 2.0L * kPi);
  double t0 = 2.0 * S.convert_to<double>() * std::numbers::pi;
  return not_generates(Reason::NegIrrationalRotation,
                       Certificate{IrrationalRotation{rotation, t0,
                                                      std::polar(1.0, static_cast<double>(phase))}});
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Generates: return "Generates";
    case Verdict::NotGenerates: return "NotGenerates";
    case Verdict::Unknown: return "Unknown";
  }
  return "Unknown";
}

std::string to_string(Reason r) {
  switch (r) {
    case Reason::Euler1: return "Euler1";
    case Reason::NegCase1: return "NegCase1";
    case Reason::NegCase2: return "NegCase2";
    case Reason::NegIrrationalRotation: return "NegIrrationalRotation";
    case Reason::HardyGroup: return "HardyGroup";
    case Reason::Additivity: return "Additivity";
    case Reason::PaperSilent: return "PaperSilent";
  }
  return "PaperSilent";
}

BigInt evaluate_integer_polynomial(std::span<const BigInt> coeffs, const BigInt& x) {
  BigInt acc = 0;
  for (std::size_t k = coeffs.size(); k-- > 0;) acc = acc * x + coeffs[k];
  return acc;
}

Witness find_witness(const EulerPoly& p) {
  if (p.degree() < 2) throw Error(ErrorKind::InvalidArgument, "witness search needs degree >= 2");
  if (!p.coeffs[0].is_zero())
    throw Error(ErrorKind::InvalidArgument, "constant term must be split off before the search");
  for (std::size_t k = 1; k < p.coeffs.size(); ++k) {
    if (!p.coeffs[k].is_in_iQ())
      throw Error(ErrorKind::InvalidArgument, "witness search needs every a_k in iQ");
  }

  Witness w;
  w.S = lcm_of_denominators(p, 1);
  w.ptilde.resize(p.coeffs.size());
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    Rational scaled = p.coeffs[k].im_rat() * Rational(w.S);
    w.ptilde[k] = numerator(scaled);
  }

  // values[n % 3] caches Ptilde(n) so each index is evaluated once.
  BigInt values[3];
  values[0] = evaluate_integer_polynomial(w.ptilde, 0);
  values[1] = evaluate_integer_polynomial(w.ptilde, 1);
  for (std::int64_t n0 = 0; n0 <= kWitnessSearchLimit; ++n0) {
    values[(n0 + 2) % 3] = evaluate_integer_polynomial(w.ptilde, BigInt(n0 + 2));
    const BigInt& here = values[n0 % 3];
    const BigInt& ahead = values[(n0 + 2) % 3];
    BigInt q = ahead < 0 ? BigInt(-ahead) : ahead;
    if (q <= 2 || q > kMaxWitnessQ) continue;
    if (floor_mod(here - ahead, 2 * q) == 0) continue;
    w.n0 = n0;
    w.q = q.convert_to<std::int64_t>();
    w.t0 = w.S.convert_to<double>() * std::numbers::pi / static_cast<double>(w.q);
    return w;
  }
  throw Error(ErrorKind::WitnessNotFound,
              "no n0 <= " + std::to_string(kWitnessSearchLimit) + " satisfies the witness conditions");
}

std::vector<Complex> build_periodic_numerator(std::span<const BigInt> ptilde, std::int64_t q) {
  if (q < 3) throw Error(ErrorKind::InvalidArgument, "periodic numerator needs q > 2");
  const BigInt modulus = 2 * BigInt(q);
  std::vector<Complex> xi(static_cast<std::size_t>(2 * q));
  for (std::int64_t n = 0; n < 2 * q; ++n) {
    BigInt residue = floor_mod(evaluate_integer_polynomial(ptilde, BigInt(n)), modulus);
    BigInt shifted = floor_mod(evaluate_integer_polynomial(ptilde, BigInt(n + 2 * q)), modulus);
    if (residue != shifted)
      throw Error(ErrorKind::PeriodicityViolation,
                  "Ptilde(n + 2q) differs from Ptilde(n) mod 2q at n=" + std::to_string(n));
    long double angle = kPi * residue.convert_to<long double>() / static_cast<long double>(q);
    xi[static_cast<std::size_t>(n)] = std::polar(1.0, static_cast<double>(angle));
  }
  return xi;
}

RootOfUnityPole certify_offaxis_pole(std::span<const Complex> numerator, std::int64_t q) {
  if (q < 1 || numerator.size() != static_cast<std::size_t>(2 * q))
    throw Error(ErrorKind::InvalidArgument, "numerator must have exactly 2q entries");
  for (std::int64_t j = 1; j < 2 * q; ++j) {
    if (j == q) continue;
    long double angle = kPi * static_cast<long double>(j) / static_cast<long double>(q);
    Complex zeta = std::polar(1.0, static_cast<double>(angle));
    Complex value{0.0, 0.0};
    for (std::size_t n = numerator.size(); n-- > 0;) value = value * zeta + numerator[n];
    if (std::abs(value) > kNumeratorTolerance) {
      RootOfUnityPole cert;
      cert.q = q;
      cert.period = 2 * q;
      cert.pole_index = j;
      cert.pole = zeta;
      cert.numerator_abs = std::abs(value);
      return cert;
    }
  }
  throw Error(ErrorKind::NoOffAxisPole, "numerator vanishes at every non-real root of unity");
}

GenerationVerdict classify(const MultiplierSymbol& s) {
  if (const auto* p = std::get_if<EulerPoly>(&s)) return classify_euler(*p);
  if (const auto* h = std::get_if<HardyRational>(&s)) {
    double bound = 0.0;
    for (std::size_t k = 0; k < h->coeffs.size(); ++k)
      bound += std::ldexp(std::abs(h->coeffs[k].to_complex()), static_cast<int>(k));
    return GenerationVerdict{
        Verdict::Generates, true, Reason::HardyGroup,
        Certificate{MellinWitnessRef{1.0, AsymptoticHalfplane::hardy_default(), bound}}};
  }
  return unknown();
}

GenerationVerdict classify_sum(const GenerationVerdict& v1, const GenerationVerdict& v2) {
  if (v1.verdict != Verdict::Generates || v2.verdict != Verdict::Generates) return unknown();
  SumOf sum{std::make_shared<const Certificate>(*v1.certificate),
            std::make_shared<const Certificate>(*v2.certificate)};
  return GenerationVerdict{Verdict::Generates, v1.group && v2.group, Reason::Additivity,
                           Certificate{std::move(sum)}};
}

}  // namespace hflow
