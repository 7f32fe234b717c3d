#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fucik/problem.hpp"

namespace fucik {

/// JSON shape of one coefficient function:
///   {"kind":"constant","value":1}
///   {"kind":"pwlinear","points":[[t0,y0],[t1,y1],...]}
///   {"kind":"sine","amplitude":1,"omega":1,"phase":0,"offset":0}
struct FunctionSpec {
  CoefficientFn::Kind kind = CoefficientFn::Kind::constant;
  double value = 0.0;                           // constant
  std::vector<CoefficientFn::Knot> points;      // pwlinear
  double amplitude = 0.0, omega = 0.0, phase = 0.0, offset = 0.0;  // sine

  CoefficientFn build() const;
  static FunctionSpec of(const CoefficientFn& fn);
};

struct GridSpec {
  std::string scale = "log";  // "log" | "linear"
  double min = 0.0;
  double max = 0.0;
  int count = 0;

  std::vector<double> build() const;  ///< the grid points, ascending
};

/// Parsed problem configuration.
struct ProblemConfig {
  double t1 = 0.0, t2 = 0.0;  // "interval": [t1, t2]
  FunctionSpec p, q, m, n;
  std::optional<Tolerances> tolerances;
  int k_max = 8;
  std::optional<GridSpec> a_grid;

  SLProblem build() const;
};

/// Parse a config from JSON text / load from a file.  Validation failures
/// throw ConfigError with the offending field path in the message.
ProblemConfig parse_config(const std::string& json_text);
ProblemConfig load_config(const std::string& path);

/// Serialize back to JSON (numbers at 17 significant digits, keys in fixed
/// order, no locale dependence): parse(serialize(c)) rebuilds a problem
/// with bit-identical coefficients.
std::string serialize_config(const ProblemConfig& config);

/// Format one double the way all CSV/JSON output does: shortest-exact is
/// not used; everything goes through %.17g for byte-stable lossless text.
std::string format_number(double v);

}  // namespace fucik
