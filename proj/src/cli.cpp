#include "hflow/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <ostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "hflow/classify.hpp"
#include "hflow/mellin.hpp"
#include "hflow/poles.hpp"
#include "hflow/semigroup.hpp"
#include "hflow/symbols.hpp"

namespace hflow {
namespace {

constexpr double kLawThreshold = 1e-11;
constexpr double kInverseThreshold = 1e-11;
constexpr double kSlopeLow = 0.9;
constexpr double kSlopeHigh = 1.1;
constexpr std::size_t kVerifyOrder = 64;
constexpr std::size_t kLawSamples = 20;
const char* const kVerifyInput = "geom(0.25)";

GenerationVerdict classify_expr(const OperatorExpr& expr) {
  if (expr.is_sum()) {
    GenerationVerdict acc = classify(expr.terms.front());
    for (std::size_t i = 1; i < expr.terms.size(); ++i)
      acc = classify_sum(acc, classify(expr.terms[i]));
    if (acc.verdict == Verdict::Generates) return acc;
  }
  return classify(to_symbol(expr));
}

void write_plot(const RunConfig& config, const std::string& header,
                const std::vector<std::vector<double>>& rows) {
  if (config.plot_path.empty()) return;
  std::ofstream out(config.plot_path);
  if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write plot data to " + config.plot_path);
  out.precision(17);
  out << header << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << row[i];
    out << '\n';
  }
}

std::vector<std::vector<double>> series_rows(const TruncatedTaylorSeries& f) {
  std::vector<std::vector<double>> rows;
  for (std::size_t n = 0; n <= f.order(); ++n)
    rows.push_back({static_cast<double>(n), f[n].real(), f[n].imag()});
  return rows;
}

std::size_t effective_order(const MultiplierSymbol& s, std::size_t order) {
  if (const auto* e = std::get_if<ExplicitSequence>(&s)) return std::min(order, e->seq.size() - 1);
  return order;
}

Json check(const std::string& status, Json details) {
  details["status"] = status;
  return details;
}

// Least-squares slope of log(err) against log(h).
double log_log_slope(const std::vector<double>& h, const std::vector<double>& err) {
  double n = static_cast<double>(h.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    double x = std::log(h[i]);
    double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

// |c_n|^{1/n} dropping by more than a factor 2 across the upper half of the
// coefficients: the tail of an entire function, not of a pole.
bool decays_superexponentially(const std::vector<Complex>& c) {
  if (c.size() < 17) return false;
  std::size_t last = c.size() - 1;
  std::size_t first = last / 2;
  if (c[first] == 0.0 || c[last] == 0.0) return false;
  double root_first = std::log(std::abs(c[first])) / static_cast<double>(first);
  double root_last = std::log(std::abs(c[last])) / static_cast<double>(last);
  return root_last < root_first - std::numbers::ln2;
}

struct PoleRun {
  Json json;
  bool has_offaxis = false;
  bool zero_radius = false;
};

PoleRun run_poles(const MultiplierSymbol& symbol, const GenerationVerdict& verdict, double t,
                  std::size_t order, double tol) {
  PoleRun run;
  std::vector<Complex> coeffs;
  std::string note;
  std::optional<RadiusEstimate> radius;

  if (const auto* e = std::get_if<ExplicitSequence>(&symbol)) {
    std::size_t n = std::min(order + 1, e->seq.size());
    coeffs.assign(e->seq.begin(), e->seq.begin() + static_cast<std::ptrdiff_t>(n));
  } else {
    std::vector<double> log_abs = log_abs_scaled_coefficients(symbol, t, order);
    bool overflow = std::any_of(log_abs.begin(), log_abs.end(),
                                [](double v) { return v > kExponentLimit; });
    if (overflow) {
      radius = radius_from_log_magnitudes(log_abs);
      run.zero_radius = radius->zero;
      note = radius->zero ? "coefficients outgrow every geometric rate; zero radius of convergence"
                          : "coefficients leave the binary64 range; poles not fitted";
    } else {
      std::size_t keep = 0;
      while (keep < log_abs.size() && log_abs[keep] >= -kExponentLimit) ++keep;
      if (keep == 0) throw Error(ErrorKind::Overflow, "every coefficient underflows");
      TruncatedTaylorSeries head = exp_scaled_coefficients(symbol, t, keep - 1);
      coeffs.assign(head.coeffs().begin(), head.coeffs().end());
    }
  }

  PoleAnalysis analysis;
  if (!coeffs.empty()) {
    if (coeffs.size() >= 17) {
      radius = radius_of_convergence_estimate(TruncatedTaylorSeries(coeffs));
      if (radius->zero) run.zero_radius = true;
    }
    if ((radius && radius->infinite) || decays_superexponentially(coeffs)) {
      note = "no finite poles detected; coefficients decay faster than any geometric rate";
    } else {
      analysis = analyze_poles(coeffs, tol);
      note = analysis.note;
    }
  }
  run.has_offaxis = !analysis.report.all_real;
  if (analysis.report.poles.empty() && verdict.verdict == Verdict::Unknown)
    note = note.empty() ? "no finite poles detected; no verdict available for this symbol"
                        : note + "; no verdict available for this symbol";

  run.json = to_json(analysis.report);
  run.json["tolerance"] = tol;
  run.json["method"] = to_string(analysis.method);
  run.json["t"] = t;
  run.json["coefficients_used"] = coeffs.size();
  run.json["radius"] = radius ? to_json(*radius) : Json(nullptr);
  run.json["form"] = analysis.form ? to_json(*analysis.form) : Json(nullptr);
  run.json["note"] = note;
  return run;
}

// Time at which the certificate exhibits the obstruction, if it names one.
std::optional<double> obstruction_time(const GenerationVerdict& v) {
  if (!v.certificate) return std::nullopt;
  const auto& c = v.certificate->value;
  if (const auto* p = std::get_if<RootOfUnityPole>(&c)) return p->t0;
  if (const auto* r = std::get_if<IrrationalRotation>(&c)) return r->t;
  if (const auto* b = std::get_if<BlowUp>(&c)) return b->t;
  return std::nullopt;
}

Json verify_pole_check(const MultiplierSymbol& symbol, const GenerationVerdict& verdict,
                       const RunConfig& config) {
  if (verdict.verdict == Verdict::Unknown)
    return check("inconclusive", {{"reason", "no verdict available for this symbol"}});
  if (verdict.verdict == Verdict::Generates) {
    PoleRun run = run_poles(symbol, verdict, config.t0, config.order, config.tol);
    return check(run.has_offaxis || run.zero_radius ? "fail" : "pass", {{"report", run.json}});
  }
  double t = *obstruction_time(verdict);
  std::size_t order = config.order;
  if (const auto* p = std::get_if<RootOfUnityPole>(&verdict.certificate->value))
    order = std::max<std::size_t>(order, static_cast<std::size_t>(3 * p->period));
  PoleRun run = run_poles(symbol, verdict, t, order, config.tol);
  bool observed = run.has_offaxis || run.zero_radius;
  return check("fail", {{"report", run.json},
                        {"obstruction", to_json(*verdict.certificate)},
                        {"obstruction_observed", observed}});
}

Json verify_mellin(const HardyRational& h, const RunConfig& config) {
  GridSpec grid{config.grid_points, config.r_max};
  std::vector<Complex> coeffs;
  for (const auto& c : h.coeffs) coeffs.push_back(c.to_complex());
  const double a = 1.0;
  bool ok = true;
  Json bounds = Json::array();
  AsymptoticHalfplane omega = AsymptoticHalfplane::hardy_default();
  for (double t : {-2.0, -1.0, 1.0, 2.0}) {
    MellinWitness w = build_hardy_witness(coeffs, t);
    for (std::size_t j = 1; j <= 5; ++j) {
      GammaRegion g{j, omega};
      double value = seminorm(w, g, a, grid);
      double bound = hardy_seminorm_bound(coeffs, t, a, j);
      bool holds = value <= bound * (1.0 + 1e-12);
      ok = ok && holds;
      bounds.push_back({{"t", t}, {"j", j}, {"seminorm", value}, {"bound", bound}, {"holds", holds}});
    }
  }
  std::vector<double> hs = {1e-2, 1e-3, 1e-4};
  GammaRegion g1{1, omega};
  std::vector<double> modulus = witness_continuity_modulus(coeffs, 1.0, hs, g1, a, grid);
  Json ratios = Json::array();
  for (std::size_t i = 0; i + 1 < modulus.size(); ++i) {
    double ratio = modulus[i + 1] > 0.0 ? modulus[i] / modulus[i + 1] : 0.0;
    ratios.push_back(ratio);
    ok = ok && ratio >= 5.0 && ratio <= 20.0;
  }
  return check(ok ? "pass" : "fail", {{"a", a},
                                      {"omega", to_json(omega)},
                                      {"seminorm_bounds", bounds},
                                      {"continuity_h", hs},
                                      {"continuity_modulus", modulus},
                                      {"continuity_ratios", ratios}});
}

}  // namespace

RunConfig RunConfig::from_environment() {
  RunConfig config;
  if (const char* env = std::getenv("HADAMARD_FLOW_ORDER")) {
    char* end = nullptr;
    unsigned long long value = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0' || value == 0)
      throw Error(ErrorKind::InvalidArgument, "HADAMARD_FLOW_ORDER must be a positive integer");
    config.order = static_cast<std::size_t>(value);
  }
  return config;
}

int exit_code_for(Verdict v) {
  switch (v) {
    case Verdict::Generates: return kExitGenerates;
    case Verdict::NotGenerates: return kExitNotGenerates;
    case Verdict::Unknown: return kExitUnknown;
  }
  return kExitUnknown;
}

int exit_code_for(ErrorKind k) { return kExitErrorBase + static_cast<int>(k); }

TruncatedTaylorSeries load_input_series(const std::string& source, std::size_t order) {
  if (source == "exp") {
    return TruncatedTaylorSeries::generate(order, [](std::size_t n) {
      return std::exp(-std::lgamma(static_cast<double>(n) + 1.0));
    });
  }
  auto argument = [&](std::string_view prefix) -> std::optional<std::string> {
    if (source.size() > prefix.size() + 1 && source.starts_with(prefix) && source.back() == ')')
      return source.substr(prefix.size(), source.size() - prefix.size() - 1);
    return std::nullopt;
  };
  try {
    if (auto rho = argument("geom(")) {
      double r = std::stod(*rho);
      return TruncatedTaylorSeries::generate(
          order, [r](std::size_t n) { return std::pow(r, static_cast<double>(n)); });
    }
    if (auto k = argument("unit(")) {
      std::size_t index = std::stoul(*k);
      if (index > order) throw Error(ErrorKind::IndexOutOfRange, "unit index beyond truncation order");
      return TruncatedTaylorSeries::unit_vector(order, index);
    }
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::ParseError, "bad preset argument in '" + source + "'");
  }
  std::ifstream in(source);
  if (!in) throw Error(ErrorKind::InvalidArgument, "unknown preset or unreadable file '" + source + "'");
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("invalid JSON in ") + source + ": " + e.what());
  }
  return taylor_series_from_json(j);
}

CommandResult cmd_classify(const OperatorExpr& expr, const RunConfig&) {
  GenerationVerdict v = classify_expr(expr);
  Json out = to_json(v);
  out["symbol"] = pretty_print(expr);
  return {out, exit_code_for(v.verdict)};
}

CommandResult cmd_evolve(const OperatorExpr& expr, const RunConfig& config, double t,
                         const std::string& input) {
  MultiplierSymbol symbol = to_symbol(expr);
  if (t < 0.0) {
    GenerationVerdict v = classify_expr(expr);
    if (v.verdict != Verdict::Generates || !v.group)
      throw Error(ErrorKind::NegativeTimeForSemigroupOnly,
                  "negative time requires a symbol that generates a group");
  }
  TruncatedTaylorSeries f = load_input_series(input, config.order);
  f = f.truncated(effective_order(symbol, f.order()));
  TruncatedTaylorSeries g = evolve(SemigroupEvaluator(symbol), t, f);
  write_plot(config, "n,re,im", series_rows(g));
  return {{{"symbol", pretty_print(expr)}, {"t", t}, {"input", input}, {"series", to_json(g)}}, 0};
}

CommandResult cmd_poles(const OperatorExpr& expr, const RunConfig& config, double t) {
  MultiplierSymbol symbol = to_symbol(expr);
  GenerationVerdict v = classify_expr(expr);
  PoleRun run = run_poles(symbol, v, t, config.order, config.tol);
  std::vector<std::vector<double>> rows;
  for (const auto& p : run.json["poles"])
    rows.push_back({p["re"].get<double>(), p["im"].get<double>(), p["residual"].get<double>()});
  write_plot(config, "re,im,residual", rows);
  run.json["symbol"] = pretty_print(expr);
  run.json["verdict"] = to_string(v.verdict);
  return {run.json, 0};
}

CommandResult cmd_verify(const OperatorExpr& expr, const RunConfig& config) {
  MultiplierSymbol symbol = to_symbol(expr);
  GenerationVerdict verdict = classify_expr(expr);
  SemigroupEvaluator evaluator(symbol);
  std::size_t order = effective_order(symbol, std::min(config.order, kVerifyOrder));
  TruncatedTaylorSeries f = load_input_series(kVerifyInput, order);

  Json checks = Json::object();
  auto guarded = [&](const std::string& name, auto&& body) {
    try {
      checks[name] = body();
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Overflow && e.kind() != ErrorKind::DomainExceeded &&
          e.kind() != ErrorKind::IllConditioned)
        throw;
      checks[name] = check("inconclusive", {{"error", to_string(e.kind())}, {"message", e.what()}});
    }
  };

  guarded("semigroup_law", [&] {
    std::mt19937_64 rng(config.seed);
    std::uniform_real_distribution<double> time(0.0, 1.0);
    double worst = 0.0;
    for (std::size_t i = 0; i < kLawSamples; ++i) {
      double t = time(rng);
      double s = time(rng);
      worst = std::max(worst, check_semigroup_law(evaluator, t, s, f));
    }
    return check(worst < kLawThreshold ? "pass" : "fail",
                 {{"max_deviation", worst}, {"threshold", kLawThreshold}, {"samples", kLawSamples}});
  });

  guarded("identity", [&] {
    bool same = evolve(evaluator, 0.0, f) == f;
    return check(same ? "pass" : "fail", {{"exact", same}});
  });

  guarded("generator_rate", [&] {
    std::vector<double> hs = {1e-2, 1e-3, 1e-4, 1e-5};
    std::vector<Complex> m = multiplier_sequence(symbol, order);
    std::size_t fd_order = 0;
    while (fd_order < order && std::abs(m[fd_order + 1]) * hs.front() <= 1.0) ++fd_order;
    TruncatedTaylorSeries g = f.truncated(fd_order);
    std::vector<double> errors;
    for (double h : hs) errors.push_back(generator_finite_difference(evaluator, g, h).error);
    bool positive = std::all_of(errors.begin(), errors.end(), [](double e) { return e > 0.0; });
    if (!positive)
      return check("pass", {{"h", hs}, {"errors", errors}, {"note", "finite difference is exact"}});
    double slope = log_log_slope(hs, errors);
    bool ok = slope >= kSlopeLow && slope <= kSlopeHigh;
    return check(ok ? "pass" : "fail",
                 {{"h", hs}, {"errors", errors}, {"slope", slope}, {"order", fd_order}});
  });

  if (verdict.verdict == Verdict::Generates && verdict.group) {
    guarded("group_inverse", [&] {
      double worst = 0.0;
      for (double t : {0.5, 2.0}) {
        TruncatedTaylorSeries back = evolve(evaluator, -t, evolve(evaluator, t, f));
        for (std::size_t n = 0; n <= f.order(); ++n)
          worst = std::max(worst, std::abs(back[n] - f[n]) / (1.0 + std::abs(f[n])));
      }
      return check(worst < kInverseThreshold ? "pass" : "fail",
                   {{"max_deviation", worst}, {"threshold", kInverseThreshold}});
    });
  }

  guarded("continuity_probe", [&] {
    ContinuityProbe probe = strong_continuity_probe(evaluator, f, config.t0, config.R, 256);
    std::vector<std::vector<double>> rows;
    for (const auto& p : probe.trace) rows.push_back({p.t, p.sup_deviation, p.sup_value});
    write_plot(config, "t,sup_deviation,sup_value", rows);
    bool monotone = true;
    for (std::size_t i = 1; i < probe.trace.size(); ++i)
      monotone = monotone && probe.trace[i].sup_deviation <= probe.trace[i - 1].sup_deviation;
    double first = probe.trace.front().sup_deviation;
    double last = probe.trace.back().sup_deviation;
    bool ok = monotone && std::isfinite(probe.bounded_sup) && last <= 1e-2 * std::max(first, 1e-300);
    Json out = to_json(probe);
    out["R"] = config.R;
    out["input"] = kVerifyInput;
    return check(ok ? "pass" : "fail", out);
  });

  if (const auto* h = std::get_if<HardyRational>(&symbol)) {
    guarded("mellin_bound", [&] { return verify_mellin(*h, config); });
  } else {
    guarded("poles", [&] { return verify_pole_check(symbol, verdict, config); });
  }

  bool all_pass = true;
  for (const auto& [name, c] : checks.items()) all_pass = all_pass && c["status"] == "pass";
  Json out = {{"symbol", pretty_print(expr)},
              {"verdict", to_json(verdict)},
              {"checks", checks},
              {"all_pass", all_pass}};
  return {out, all_pass ? 0 : kExitChecksFailed};
}

CommandResult cmd_mellin(const OperatorExpr& expr, const RunConfig& config, double t,
                         std::size_t j, double a) {
  MultiplierSymbol symbol = to_symbol(expr);
  const auto* h = std::get_if<HardyRational>(&symbol);
  if (!h) throw Error(ErrorKind::VariantMismatch, "mellin needs a hardy: symbol");
  AsymptoticHalfplane omega = AsymptoticHalfplane::hardy_default();
  if (j < 1 || j > omega.size())
    throw Error(ErrorKind::InvalidArgument, "j must lie in 1.." + std::to_string(omega.size()));
  GridSpec grid{config.grid_points, config.r_max};
  MellinWitness w = build_hardy_witness(*h, t);
  GammaRegion g{j, omega};
  std::vector<WeightedSample> samples = weighted_samples(w, g, a, grid);
  double norm = 0.0;
  for (const auto& s : samples) norm = std::max(norm, s.value);
  double bound = hardy_seminorm_bound(w.hardy_coeffs, t, a, j);
  double growth = 0.0;
  for (std::size_t k = 0; k < w.hardy_coeffs.size(); ++k)
    growth += std::ldexp(std::abs(t * w.hardy_coeffs[k]), static_cast<int>(k));
  MellinBoundCheck growth_check = verify_mellin_bound(w, std::exp(growth), grid);

  std::vector<std::vector<double>> rows;
  for (const auto& s : samples) rows.push_back({s.z.real(), s.z.imag(), s.value});
  write_plot(config, "re,im,weighted_abs", rows);
  Json out = {{"symbol", pretty_print(expr)},
              {"t", t},
              {"j", j},
              {"a", a},
              {"omega", to_json(omega)},
              {"samples", samples.size()},
              {"seminorm", norm},
              {"bound", bound},
              {"holds", norm <= bound * (1.0 + 1e-12)},
              {"growth_constant", std::exp(growth)},
              {"growth_check", {{"holds", growth_check.holds},
                                {"max_ratio", growth_check.max_ratio},
                                {"worst", to_json(growth_check.worst)}}}};
  return {out, 0};
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = RunConfig::from_environment();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }

  CLI::App app{"Hadamard multiplier semigroups on truncated power series"};
  app.require_subcommand(1);
  app.fallthrough();
  std::size_t order = 0;
  app.add_option("--order", order, "truncation order N (default 256 or $HADAMARD_FLOW_ORDER)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", config.tol, "real-axis tolerance for pole reports")
      ->check(CLI::PositiveNumber);
  app.add_flag("--json", config.compact, "single-line JSON output");
  app.add_option("--emit-plot-data", config.plot_path, "write CSV plot data to this path");

  std::string expr_src;
  double t = 0.0;
  std::string input = "exp";
  std::size_t j = 1;
  double a = 1.0;

  auto* classify_cmd = app.add_subcommand("classify", "decide whether the symbol generates");
  classify_cmd->add_option("expr", expr_src, "operator expression")->required();

  auto* evolve_cmd = app.add_subcommand("evolve", "apply T_t to an input series");
  evolve_cmd->add_option("expr", expr_src, "operator expression")->required();
  evolve_cmd->add_option("--t", t, "time")->required();
  evolve_cmd->add_option("--input", input, "exp, geom(rho), unit(k) or a series JSON file");

  auto* poles_cmd = app.add_subcommand("poles", "locate poles of f_t");
  poles_cmd->add_option("expr", expr_src, "operator expression")->required();
  poles_cmd->add_option("--t", t, "time (ignored for seq: symbols)");

  auto* verify_cmd = app.add_subcommand("verify", "run the invariant checks");
  verify_cmd->add_option("expr", expr_src, "operator expression")->required();
  verify_cmd->add_option("--R", config.R, "probe interval half-width")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--t0", config.t0, "largest probe time")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--seed", config.seed, "seed for sampled times");

  auto* mellin_cmd = app.add_subcommand("mellin", "Mellin witness seminorm for a hardy: symbol");
  mellin_cmd->add_option("expr", expr_src, "operator expression")->required();
  mellin_cmd->add_option("--t", t, "time")->required();
  mellin_cmd->add_option("--j", j, "index of the region Gamma_j")->required();
  mellin_cmd->add_option("--a", a, "weight exponent")->required()->check(CLI::PositiveNumber);
  mellin_cmd->add_option("--grid", config.grid_points, "sample points")->check(CLI::PositiveNumber);
  mellin_cmd->add_option("--rmax", config.r_max, "sampling radius")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::ostringstream usage_out;
    int code = app.exit(e, usage_out, err);
    out << usage_out.str();
    return code == 0 ? 0 : kExitUsage;
  }
  if (order > 0) config.order = order;

  try {
    OperatorExpr expr = parse_operator(expr_src);
    CommandResult result;
    if (*classify_cmd) result = cmd_classify(expr, config);
    else if (*evolve_cmd) result = cmd_evolve(expr, config, t, input);
    else if (*poles_cmd) result = cmd_poles(expr, config, t);
    else if (*verify_cmd) result = cmd_verify(expr, config);
    else result = cmd_mellin(expr, config, t, j, a);
    out << (config.compact ? result.json.dump() : result.json.dump(2)) << '\n';
    return result.exit_code;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  }
}

}  // namespace hflow
