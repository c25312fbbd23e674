// Command-line driver: single evaluations and error sweeps written as CSV or JSON.
//
//   wigner_cli eval --two-j 4000 --two-m1 0 --two-m2 0 --theta 0.001 --method approx
//   wigner_cli sweep-theta --two-j 4000 --theta-start 1e-4 --theta-stop 1 --theta-points 200
//   wigner_cli sweep-j --theta 0.001 --j-start 1 --j-stop 2000
//   wigner_cli sweep-integral --rho 1 --epsilon 0.001 --l-start 0 --l-stop 3000 --l-step 50
//
// Exit codes: 0 success, 2 usage or domain error, 3 I/O error.

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "wigner/error.hpp"
#include "wigner/harness.hpp"
#include "wigner/wigner_exact.hpp"
#include "wigner/wigner_uniform.hpp"

namespace {

constexpr int kExitDomain = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "2000.5" -> 4001. Only integers and half-integers are accepted.
int parse_doubled(const std::string& text, const char* flag) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  const double doubled = 2.0 * value;
  if (used != text.size() || !std::isfinite(value) || doubled != std::round(doubled)) {
    throw wigner::Error(wigner::ErrorCode::InvalidParameter,
                        std::string(flag) + " must be an integer or half-integer, got '" + text + "'");
  }
  return static_cast<int>(doubled);
}

template <typename Rows>
void emit(const Rows& rows, const wigner::SweepConfig& config) {
  std::ostringstream buffer;
  if (config.format == wigner::OutputFormat::Json) {
    wigner::write_json(buffer, rows);
  } else {
    wigner::write_csv(buffer, rows);
  }
  if (config.out_path.empty()) {
    std::cout << buffer.str();
    std::cout.flush();
    if (!std::cout) throw IoError("failed writing to standard output");
    return;
  }
  std::ofstream file(config.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + config.out_path + "' for writing");
  file << buffer.str();
  file.close();
  if (!file) throw IoError("failed writing '" + config.out_path + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wigner d-matrix elements, their uniform Bessel approximation, and error sweeps"};
  app.require_subcommand(1);

  wigner::SweepConfig config;
  std::string method = "exact";
  int digits = 60;
  std::optional<double> theta;
  std::string j_start = "0";
  std::string j_stop = "0";
  std::string format = "csv";

  auto add_index = [&](CLI::App* cmd, bool with_j) {
    if (with_j) cmd->add_option("--two-j", config.two_j, "2j")->required();
    cmd->add_option("--two-m1", config.two_m1, "2 m1")->capture_default_str();
    cmd->add_option("--two-m2", config.two_m2, "2 m2")->capture_default_str();
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    cmd->add_option("--out", config.out_path, "output file (default: standard output)");
    cmd->add_option("--threads", config.threads, "worker threads (0: all cores)")
        ->capture_default_str();
  };

  auto* eval = app.add_subcommand("eval", "evaluate one matrix element");
  add_index(eval, true);
  eval->add_option("--theta", theta, "angle in radians, [0, pi)")->required();
  eval->add_option("--method", method, "exact, approx or series")
      ->check(CLI::IsMember({"exact", "approx", "series"}))
      ->capture_default_str();
  eval->add_option("--digits", digits, "working digits for --method series")
      ->capture_default_str();

  auto* sweep_theta = app.add_subcommand("sweep-theta", "error table over a log-spaced theta grid");
  add_index(sweep_theta, true);
  sweep_theta->add_option("--theta-start", config.theta_grid.start)->capture_default_str();
  sweep_theta->add_option("--theta-stop", config.theta_grid.stop)->capture_default_str();
  sweep_theta->add_option("--theta-points", config.theta_grid.points)->capture_default_str();
  add_output(sweep_theta);

  auto* sweep_j = app.add_subcommand("sweep-j", "error table over j at fixed theta");
  add_index(sweep_j, false);
  sweep_j->add_option("--theta", theta, "angle in radians")->required();
  sweep_j->add_option("--j-start", j_start, "first j (integer or half-integer)")->required();
  sweep_j->add_option("--j-stop", j_stop, "last j, inclusive")->required();
  add_output(sweep_j);

  auto* sweep_integral =
      app.add_subcommand("sweep-integral", "overlap integral versus its closed form over l");
  sweep_integral->add_option("--rho", config.rho)->capture_default_str();
  sweep_integral->add_option("--epsilon", config.epsilon)->capture_default_str();
  sweep_integral->add_option("--l-start", config.l_start)->capture_default_str();
  sweep_integral->add_option("--l-stop", config.l_stop)->required();
  sweep_integral->add_option("--l-step", config.l_step)->capture_default_str();
  add_output(sweep_integral);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitDomain;
  }

  config.format = (format == "json") ? wigner::OutputFormat::Json : wigner::OutputFormat::Csv;

  try {
    if (*eval) {
      const auto idx = wigner::make_index(config.two_j, config.two_m1, config.two_m2);
      const wigner::Angle angle(*theta);
      double value = 0.0;
      if (method == "approx") {
        value = wigner::d_approx(idx, angle);
      } else if (method == "series") {
        value = wigner::d_series_highprec(idx, angle, digits);
      } else {
        value = wigner::d_exact(idx, angle);
      }
      std::printf("%.17g\n", value);
      return 0;
    }
    if (*sweep_theta) {
      config.kind = wigner::SweepKind::Theta;
      emit(wigner::sweep_theta(config), config);
    } else if (*sweep_j) {
      config.kind = wigner::SweepKind::J;
      config.theta = *theta;
      config.two_j_start = parse_doubled(j_start, "--j-start");
      config.two_j_stop = parse_doubled(j_stop, "--j-stop");
      if ((config.two_j_stop - config.two_j_start) % 2 != 0) {
        throw wigner::Error(wigner::ErrorCode::InvalidParameter,
                            "--j-start and --j-stop must differ by an integer");
      }
      emit(wigner::sweep_j(config), config);
    } else if (*sweep_integral) {
      config.kind = wigner::SweepKind::Integral;
      const auto rows = wigner::sweep_integral(config);
      for (const auto& row : rows) {
        if (!row.converged) {
          std::cerr << "warning: quadrature did not converge at l=" << row.l
                    << "; rel_error left empty\n";
        }
      }
      emit(rows, config);
    }
  } catch (const wigner::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  }
  return 0;
}
