#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "fucik/config.hpp"
#include "fucik/eigenvalues.hpp"
#include "fucik/spectrum.hpp"

namespace fucik {

enum class OutputFormat { csv, json };

/// Eigenvalue table for one weight/branch (the `eigen` command).
/// CSV columns: index,value,interior_zeros,miss_residual,is_double
std::string eigen_table(const ProblemConfig& config, WeightSel weight,
                        Branch branch, int count, OutputFormat format);

/// Curve samples over the config's a-grid (the `curve` command).
/// CSV columns: a,b,k,end_sign,residual — rows ascending in a.
std::string curve_table(const ProblemConfig& config, CurveId id,
                        Quadrant quad, OutputFormat format);

/// Full spectrum census (the `report` command): JSON document with schema
/// tag "fucik-report/1" — per-quadrant counts with curve inventories and
/// double-curve flags, asymptote constants where defined, the trivial-line
/// positions (principal eigenvalues), sign-change counts, and the spectral
/// gap width for single-weight problems.  Deterministic: two runs over the
/// same config produce byte-identical text.
std::string spectrum_report(const ProblemConfig& config);

/// Desk-scale closed-form self checks (the `selftest` command).  Runs the
/// constant-coefficient oracle suite against the presets in `preset_dir`,
/// printing one line per check with the measured error.  Returns true when
/// every check passes.  Tolerance overrides apply to every loaded preset
/// (degrading rtol to ~1e-3 makes the asymptote-approach check fail, which
/// is itself checked by the test suite).
bool run_selftest(const std::string& preset_dir, std::ostream& out,
                  std::optional<double> rtol_override = std::nullopt,
                  std::optional<double> atol_override = std::nullopt);

}  // namespace fucik
