#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "wigner/angular_core.hpp"

namespace wigner {

/// One row of an error sweep. rel_error is absent when exact == 0.
struct ErrorRecord {
  int two_j = 0;
  int two_m1 = 0;
  int two_m2 = 0;
  double theta = 0.0;
  double exact = 0.0;
  double approx = 0.0;
  double abs_error = 0.0;
  std::optional<double> rel_error;
};

ErrorRecord make_error_record(const AngularIndex& idx, Angle theta);

struct IntegralRecord {
  int l = 0;
  double rho = 0.0;
  double epsilon = 0.0;
  double exact = 0.0;  // best estimate when !converged
  double approx = 0.0;
  std::optional<double> rel_error;
  bool converged = true;
};

IntegralRecord make_integral_record(int l, double rho, double epsilon);

enum class SweepKind { Theta, J, Integral };
enum class OutputFormat { Csv, Json };

struct ThetaGrid {
  double start = 1e-4;
  double stop = 1.0;
  int points = 200;
};

struct SweepConfig {
  SweepKind kind = SweepKind::Theta;
  // theta sweep: fixed index
  int two_j = 0;
  int two_m1 = 0;
  int two_m2 = 0;
  ThetaGrid theta_grid;
  // j sweep: fixed theta and (m1, m2), j from two_j_start/2 to two_j_stop/2 in unit steps
  double theta = 1e-3;
  int two_j_start = 0;
  int two_j_stop = 0;
  // integral sweep
  int l_start = 0;
  int l_stop = 0;
  int l_step = 1;
  double rho = 1.0;
  double epsilon = 1e-3;

  OutputFormat format = OutputFormat::Csv;
  std::string out_path;  // empty: standard output
  int threads = 0;       // 0: hardware concurrency
};

/// Throws InvalidParameter for empty or malformed grids.
void validate(const SweepConfig& config);

/// Log-spaced grid from start to stop inclusive; requires 0 < start <= stop.
std::vector<double> log_spaced(double start, double stop, int points);

std::vector<ErrorRecord> sweep_theta(const SweepConfig& config);
std::vector<ErrorRecord> sweep_j(const SweepConfig& config);
std::vector<IntegralRecord> sweep_integral(const SweepConfig& config);

/// %.17g, which round-trips every double.
std::string format_number(double value);

void write_csv(std::ostream& out, std::span<const ErrorRecord> rows);
void write_csv(std::ostream& out, std::span<const IntegralRecord> rows);
void write_json(std::ostream& out, std::span<const ErrorRecord> rows);
void write_json(std::ostream& out, std::span<const IntegralRecord> rows);

}  // namespace wigner
