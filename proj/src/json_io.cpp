#include "hflow/json_io.hpp"

#include "hflow/error.hpp"

namespace hflow {
namespace {

template <typename Series>
Json series_json(const Series& f) {
  Json coeffs = Json::array();
  for (Complex c : f.coeffs()) coeffs.push_back({c.real(), c.imag()});
  return {{"order", f.order()}, {"coeffs", std::move(coeffs)}};
}

Json complex_list(std::span<const Complex> values) {
  Json out = Json::array();
  for (Complex c : values) out.push_back(to_json(c));
  return out;
}

}  // namespace

Json to_json(const TruncatedTaylorSeries& f) { return series_json(f); }
Json to_json(const LaurentTailSeries& f) { return series_json(f); }

TruncatedTaylorSeries taylor_series_from_json(const Json& j) {
  try {
    const Json& coeffs = j.at("coeffs");
    std::vector<Complex> c;
    for (const Json& entry : coeffs) {
      if (entry.is_number()) c.emplace_back(entry.get<double>(), 0.0);
      else c.emplace_back(entry.at(0).get<double>(), entry.at(1).get<double>());
    }
    if (j.contains("order") && j.at("order").get<std::size_t>() + 1 != c.size())
      throw Error(ErrorKind::DegenerateInput, "series 'order' disagrees with the coefficient count");
    return TruncatedTaylorSeries(std::move(c));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::DegenerateInput, std::string("malformed series JSON: ") + e.what());
  }
}

Json to_json(const Complex& z) { return {z.real(), z.imag()}; }

Json to_json(const ExactScalar& s) {
  return {{"re", rational_to_string(s.re_rat())},
          {"re_surd", rational_to_string(s.re_surd())},
          {"im", rational_to_string(s.im_rat())},
          {"im_surd", rational_to_string(s.im_surd())},
          {"d", s.radicand()},
          {"value", to_json(s.to_complex())}};
}

Json to_json(const RadiusEstimate& r) {
  Json radius = r.infinite ? Json(nullptr) : Json(r.radius);
  return {{"radius", radius},
          {"infinite", r.infinite},
          {"zero", r.zero},
          {"window", {r.window_begin, r.window_end}},
          {"uncertainty", r.uncertainty}};
}

Json to_json(const Certificate& c) {
  return std::visit(
      [](const auto& cert) -> Json {
        using T = std::decay_t<decltype(cert)>;
        if constexpr (std::is_same_v<T, ClosedFormDilation>) {
          return {{"kind", "ClosedFormDilation"}, {"a", cert.a}, {"b", to_json(cert.b)}};
        } else if constexpr (std::is_same_v<T, BlowUp>) {
          return {{"kind", "BlowUp"},
                  {"l", cert.l},
                  {"t", cert.t},
                  {"sample_n", cert.sample_n},
                  {"log_root_growth", cert.log_root_growth}};
        } else if constexpr (std::is_same_v<T, RootOfUnityPole>) {
          Json ptilde = Json::array();
          for (const auto& k : cert.ptilde) ptilde.push_back(rational_to_string(Rational(k)));
          return {{"kind", "RootOfUnityPole"},
                  {"S", rational_to_string(Rational(cert.S))},
                  {"ptilde", ptilde},
                  {"q", cert.q},
                  {"n0", cert.n0},
                  {"t0", cert.t0},
                  {"period", cert.period},
                  {"pole_index", cert.pole_index},
                  {"pole", to_json(cert.pole)},
                  {"numerator_abs", cert.numerator_abs}};
        } else if constexpr (std::is_same_v<T, IrrationalRotation>) {
          return {{"kind", "IrrationalRotation"},
                  {"rotation", to_json(cert.rotation)},
                  {"t", cert.t},
                  {"pole", to_json(cert.pole)}};
        } else if constexpr (std::is_same_v<T, MellinWitnessRef>) {
          return {{"kind", "MellinWitnessRef"},
                  {"a", cert.a},
                  {"omega", to_json(cert.omega)},
                  {"exponent_bound", cert.exponent_bound}};
        } else {
          return {{"kind", "SumOf"}, {"left", to_json(*cert.left)}, {"right", to_json(*cert.right)}};
        }
      },
      c.value);
}

Json to_json(const GenerationVerdict& v) {
  Json out = {{"verdict", to_string(v.verdict)}, {"reason", to_string(v.reason)}};
  if (v.verdict == Verdict::Generates) out["group"] = v.group;
  out["certificate"] = v.certificate ? to_json(*v.certificate) : Json(nullptr);
  return out;
}

Json to_json(const PoleReport& r) {
  Json poles = Json::array();
  for (const auto& p : r.poles)
    poles.push_back({{"re", p.location.real()}, {"im", p.location.imag()}, {"residual", p.residual}});
  return {{"poles", poles}, {"all_real", r.all_real}, {"tolerance", r.tolerance}};
}

Json to_json(const RationalForm& r) {
  return {{"numerator", complex_list(r.numerator)},
          {"denominator", complex_list(r.denominator)},
          {"exact", r.exact},
          {"period", r.period},
          {"residual", r.residual}};
}

Json to_json(const AsymptoticHalfplane& w) {
  return {{"kappas", w.kappas}, {"Ks", w.Ks}};
}

Json to_json(const ContinuityProbe& p) {
  Json trace = Json::array();
  for (const auto& point : p.trace)
    trace.push_back(
        {{"t", point.t}, {"sup_deviation", point.sup_deviation}, {"sup_value", point.sup_value}});
  return {{"trace", trace}, {"bounded_sup", p.bounded_sup}, {"surrogate", true}};
}

}  // namespace hflow
