#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "hflow/dsl.hpp"
#include "hflow/error.hpp"
#include "hflow/json_io.hpp"
#include "hflow/series.hpp"

namespace hflow {

struct RunConfig {
  std::size_t order = kDefaultOrder;
  double tol = 1e-8;          // real-axis tolerance for pole reports
  bool compact = false;       // single-line JSON
  std::string plot_path;      // CSV destination, empty for none
  std::size_t grid_points = 2048;
  double r_max = 20.0;
  double R = 1.0;             // probe interval [-R, R]
  double t0 = 0.5;            // largest probe time
  std::uint64_t seed = 20240501;

  /// Defaults with HADAMARD_FLOW_ORDER applied when set.
  static RunConfig from_environment();
};

struct CommandResult {
  Json json;
  int exit_code = 0;
};

inline constexpr int kExitGenerates = 0;
inline constexpr int kExitNotGenerates = 10;
inline constexpr int kExitUnknown = 20;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitChecksFailed = 2;
inline constexpr int kExitErrorBase = 64;

int exit_code_for(Verdict v);
int exit_code_for(ErrorKind k);

/// "exp", "geom(rho)", "unit(k)" or the path of a series JSON file.
TruncatedTaylorSeries load_input_series(const std::string& source, std::size_t order);

CommandResult cmd_classify(const OperatorExpr& expr, const RunConfig& config);
CommandResult cmd_evolve(const OperatorExpr& expr, const RunConfig& config, double t,
                         const std::string& input);
CommandResult cmd_poles(const OperatorExpr& expr, const RunConfig& config, double t);
CommandResult cmd_verify(const OperatorExpr& expr, const RunConfig& config);
CommandResult cmd_mellin(const OperatorExpr& expr, const RunConfig& config, double t,
                         std::size_t j, double a);

/// Full command line dispatch; writes JSON to out and diagnostics to err.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hflow
