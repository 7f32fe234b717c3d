// fucik -- Fucik spectrum explorer for weighted Sturm-Liouville problems
// with Neumann boundary conditions.
//
// Subcommands:
//   eigen     eigenvalues of one weight on one branch
//   curve     trace one spectral curve over the configured a-grid
//   report    full per-quadrant census as versioned JSON
//   selftest  closed-form verification suite over the preset gallery

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fucik/config.hpp"
#include "fucik/errors.hpp"
#include "fucik/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

int write_out(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return kExitOk;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open output file: " << path << "\n";
    return kExitUsage;
  }
  f << content;
  return f.good() ? kExitOk : kExitUsage;
}

fucik::OutputFormat parse_format(const std::string& s) {
  return s == "json" ? fucik::OutputFormat::json : fucik::OutputFormat::csv;
}

fucik::Quadrant parse_quadrant(const std::string& s) {
  return fucik::Quadrant{s[0] == '+' ? 1 : -1, s[1] == '+' ? 1 : -1};
}

fucik::EndSign parse_end_sign(const std::string& s) {
  return (s == ">" || s == "gt") ? fucik::EndSign::positive
                                 : fucik::EndSign::negative;
}

// Runs `body`, mapping domain failures to exit 1 and configuration or I/O
// failures to exit 2.
template <typename Fn>
int guarded(Fn&& body) {
  try {
    return body();
  } catch (const fucik::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const fucik::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fucik spectrum explorer for weighted Neumann problems"};
  app.require_subcommand(1);

  std::string config_path;
  std::string out_path = "-";
  std::string format;  // empty: use the subcommand's default

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "problem configuration (JSON)")
        ->required();
    cmd->add_option("--out", out_path, "output path, or - for stdout");
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
  };
  auto chosen_format = [&](const char* fallback) {
    return parse_format(format.empty() ? fallback : format);
  };

  // eigen
  CLI::App* eigen = app.add_subcommand("eigen", "weighted eigenvalues");
  std::string weight = "m";
  std::string branch = "positive";
  int count = 5;
  add_io(eigen);
  eigen->add_option("--weight", weight, "weight function")
      ->check(CLI::IsMember({"m", "n"}));
  eigen->add_option("--branch", branch, "eigenvalue branch")
      ->check(CLI::IsMember({"positive", "negative"}));
  eigen->add_option("--count", count, "how many eigenvalues")
      ->check(CLI::PositiveNumber);

  // curve
  CLI::App* curve = app.add_subcommand("curve", "trace one spectral curve");
  int k = 1;
  std::string end_sign = ">";
  std::string quadrant = "++";
  add_io(curve);
  curve->add_option("--k", k, "interior zero count")
      ->required()
      ->check(CLI::PositiveNumber);
  curve->add_option("--end-sign", end_sign, "sign of the solution at t2")
      ->check(CLI::IsMember({">", "<", "gt", "lt"}));
  curve->add_option("--quadrant", quadrant, "parameter quadrant")
      ->check(CLI::IsMember({"++", "+-", "-+", "--"}));

  // report
  CLI::App* report = app.add_subcommand("report", "full spectrum census");
  add_io(report);

  // selftest
  CLI::App* selftest =
      app.add_subcommand("selftest", "closed-form verification suite");
  std::string preset_dir = "presets";
  std::optional<double> rtol_override;
  std::optional<double> atol_override;
  selftest->add_option("--presets", preset_dir, "preset gallery directory");
  selftest->add_option("--rtol", rtol_override,
                       "override integrator relative tolerance");
  selftest->add_option("--atol", atol_override,
                       "override integrator absolute tolerance");
  selftest->add_option("--out", out_path, "output path, or - for stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (eigen->parsed()) {
    return guarded([&] {
      fucik::ProblemConfig cfg = fucik::load_config(config_path);
      std::string table = fucik::eigen_table(
          cfg, weight == "m" ? fucik::WeightSel::m : fucik::WeightSel::n,
          branch == "positive" ? fucik::Branch::positive
                               : fucik::Branch::negative,
          count, chosen_format("csv"));
      return write_out(out_path, table);
    });
  }
  if (curve->parsed()) {
    return guarded([&] {
      fucik::ProblemConfig cfg = fucik::load_config(config_path);
      std::string table =
          fucik::curve_table(cfg, {k, parse_end_sign(end_sign)},
                             parse_quadrant(quadrant), chosen_format("csv"));
      return write_out(out_path, table);
    });
  }
  if (report->parsed()) {
    if (!format.empty() && format != "json") {
      std::cerr << "error: report is only available as json\n";
      return kExitUsage;
    }
    return guarded([&] {
      fucik::ProblemConfig cfg = fucik::load_config(config_path);
      return write_out(out_path, fucik::spectrum_report(cfg));
    });
  }
  // selftest
  return guarded([&] {
    if (out_path == "-")
      return fucik::run_selftest(preset_dir, std::cout, rtol_override,
                                 atol_override)
                 ? kExitOk
                 : kExitCheckFailure;
    std::ofstream f(out_path, std::ios::binary);
    if (!f) {
      std::cerr << "error: cannot open output file: " << out_path << "\n";
      return kExitUsage;
    }
    return fucik::run_selftest(preset_dir, f, rtol_override, atol_override)
               ? kExitOk
               : kExitCheckFailure;
  });
}
