#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "hflow/exact.hpp"
#include "hflow/mellin.hpp"
#include "hflow/series.hpp"
#include "hflow/symbols.hpp"

namespace hflow {

enum class Verdict { Generates, NotGenerates, Unknown };

/// Which result decides the verdict.
enum class Reason {
  Euler1,                 // first-order Euler operator: generator iff a is real
  NegCase1,               // highest nonvanishing Re a_l (l >= 2) is positive
  NegCase2,               // a_2..a_K in iQ, Im a_1 rational: periodic witness
  NegIrrationalRotation,  // a_2..a_K in iQ, Im a_1 irrational
  HardyGroup,             // polynomials in the Hardy operator generate groups
  Additivity,             // sum of two generators
  PaperSilent,
};

std::string to_string(Verdict v);
std::string to_string(Reason r);

/// e^{tb} f(e^{ta} x).
struct ClosedFormDilation {
  double a;
  Complex b;
};

/// |e^{t P(n)}|^{1/n} grows without bound; log_root_growth[i] is
/// log |e^{t P(n_i)}|^{1/n_i} = t Re P(n_i) / n_i, strictly increasing.
struct BlowUp {
  std::size_t l;
  double t;
  std::vector<std::size_t> sample_n;
  std::vector<double> log_root_growth;
};

/// f_{t0} = sum_{n<2q} xi_n z^n / (1 - z^{2q}) has a pole at the non-real
/// 2q-th root of unity `pole`, where the numerator has modulus numerator_abs.
struct RootOfUnityPole {
  BigInt S = 0;
  std::vector<BigInt> ptilde;  // integer coefficients, ascending
  std::int64_t q = 0;
  std::int64_t n0 = 0;
  double t0 = 0.0;
  std::int64_t period = 0;
  std::int64_t pole_index = 0;  // pole = e^{i pi pole_index / q}
  Complex pole;
  double numerator_abs = 0.0;
};

/// f_t = 1/(1 - e^{t m} z) with non-real pole e^{-t m}; for degree >= 2 the
/// rotation is S*r and t = 2 S pi.
struct IrrationalRotation {
  ExactScalar rotation;
  double t;
  Complex pole;
};

struct MellinWitnessRef {
  double a;
  AsymptoticHalfplane omega;
  /// sum_k 2^k |a_k|: |mu_t| <= exp(|t| * exponent_bound) on omega.
  double exponent_bound;
};

struct Certificate;
struct SumOf {
  std::shared_ptr<const Certificate> left;
  std::shared_ptr<const Certificate> right;
};

struct Certificate {
  std::variant<ClosedFormDilation, BlowUp, RootOfUnityPole, IrrationalRotation, MellinWitnessRef,
               SumOf>
      value;
};

/// Generates and NotGenerates always carry a certificate; Unknown never does.
struct GenerationVerdict {
  Verdict verdict = Verdict::Unknown;
  bool group = false;
  Reason reason = Reason::PaperSilent;
  std::optional<Certificate> certificate;
};

struct Witness {
  BigInt S;
  std::vector<BigInt> ptilde;
  std::int64_t n0;
  std::int64_t q;
  double t0;
};

inline constexpr std::int64_t kWitnessSearchLimit = 1'000'000;
/// Witnesses whose period 2q would not fit in memory are skipped.
inline constexpr std::int64_t kMaxWitnessQ = 5'000'000;
inline constexpr double kNumeratorTolerance = 1e-6;

BigInt evaluate_integer_polynomial(std::span<const BigInt> coeffs, const BigInt& x);

/// For P = sum_{k>=1} a_k theta^k with every a_k in iQ: m_n = (i/S) Ptilde(n),
/// n0 the smallest index with q = |Ptilde(n0+2)| > 2 and
/// Ptilde(n0) != Ptilde(n0+2) mod 2q, and t0 = S pi / q.
Witness find_witness(const EulerPoly& p);

/// xi_n = exp(i pi Ptilde(n) / q), n = 0..2q-1, reduced exactly mod 2q.
std::vector<Complex> build_periodic_numerator(std::span<const BigInt> ptilde, std::int64_t q);

/// First non-real 2q-th root of unity where the numerator does not vanish.
/// Throws NoOffAxisPole when there is none.
RootOfUnityPole certify_offaxis_pole(std::span<const Complex> numerator, std::int64_t q);

GenerationVerdict classify(const MultiplierSymbol& s);
GenerationVerdict classify_sum(const GenerationVerdict& v1, const GenerationVerdict& v2);

}  // namespace hflow
