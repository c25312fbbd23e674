#include "wigner/harness.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <mutex>
#include <numbers>
#include <ostream>
#include <thread>

#include "wigner/error.hpp"
#include "wigner/partial_wave.hpp"
#include "wigner/wigner_exact.hpp"
#include "wigner/wigner_uniform.hpp"

namespace wigner {

namespace {

// Runs body(i) for i in [0, n) on up to `threads` workers. Results are
// written by index, so output order never depends on scheduling.
template <typename Body>
void parallel_for(std::size_t n, int threads, Body body) {
  unsigned workers = threads > 0 ? static_cast<unsigned>(threads)
                                 : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = n;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::string optional_number(const std::optional<double>& v) {
  return v ? format_number(*v) : std::string();
}

}  // namespace

ErrorRecord make_error_record(const AngularIndex& idx, Angle theta) {
  ErrorRecord r;
  r.two_j = idx.two_j();
  r.two_m1 = idx.two_m1();
  r.two_m2 = idx.two_m2();
  r.theta = theta.radians();
  r.exact = d_exact(idx, theta);
  r.approx = d_approx(idx, theta);
  r.abs_error = std::abs(r.exact - r.approx);
  if (r.exact != 0.0) r.rel_error = (r.exact - r.approx) / r.exact;
  return r;
}

IntegralRecord make_integral_record(int l, double rho, double epsilon) {
  IntegralRecord r;
  r.l = l;
  r.rho = rho;
  r.epsilon = epsilon;
  r.approx = integral_approx(rho, l, epsilon);
  try {
    r.exact = integral_exact(rho, l, epsilon);
  } catch (const QuadratureError& e) {
    r.exact = e.estimate();
    r.converged = false;
    return r;
  }
  if (std::abs(r.exact) >= 1e-280) r.rel_error = (r.exact - r.approx) / r.exact;
  return r;
}

std::vector<double> log_spaced(double start, double stop, int points) {
  if (points < 1) throw Error(ErrorCode::InvalidParameter, "grid needs at least one point");
  if (!(start > 0.0) || !(stop >= start)) {
    throw Error(ErrorCode::InvalidParameter, "log grid requires 0 < start <= stop");
  }
  std::vector<double> grid(static_cast<std::size_t>(points));
  const double lo = std::log(start);
  const double hi = std::log(stop);
  for (int i = 0; i < points; ++i) {
    grid[i] = (points == 1) ? start : std::exp(lo + (hi - lo) * i / (points - 1));
  }
  grid.front() = start;
  if (points > 1) grid.back() = stop;
  return grid;
}

void validate(const SweepConfig& config) {
  switch (config.kind) {
    case SweepKind::Theta:
      make_index(config.two_j, config.two_m1, config.two_m2);
      log_spaced(config.theta_grid.start, config.theta_grid.stop, config.theta_grid.points);
      Angle(config.theta_grid.stop);
      break;
    case SweepKind::J:
      Angle(config.theta);
      if (config.two_j_stop < config.two_j_start) {
        throw Error(ErrorCode::InvalidParameter, "j range is empty");
      }
      make_index(config.two_j_start, config.two_m1, config.two_m2);
      break;
    case SweepKind::Integral:
      if (config.l_start < 0 || config.l_stop < config.l_start || config.l_step < 1) {
        throw Error(ErrorCode::InvalidParameter, "l range is empty or malformed");
      }
      integral_approx(config.rho, config.l_start, config.epsilon);
      break;
  }
}

std::vector<ErrorRecord> sweep_theta(const SweepConfig& config) {
  validate(config);
  const AngularIndex idx = make_index(config.two_j, config.two_m1, config.two_m2);
  const std::vector<double> grid =
      log_spaced(config.theta_grid.start, config.theta_grid.stop, config.theta_grid.points);
  std::vector<ErrorRecord> rows(grid.size());
  parallel_for(grid.size(), config.threads,
               [&](std::size_t i) { rows[i] = make_error_record(idx, Angle(grid[i])); });
  return rows;
}

std::vector<ErrorRecord> sweep_j(const SweepConfig& config) {
  validate(config);
  const Angle theta(config.theta);
  const std::size_t count = static_cast<std::size_t>((config.two_j_stop - config.two_j_start) / 2 + 1);
  std::vector<ErrorRecord> rows(count);
  parallel_for(count, config.threads, [&](std::size_t i) {
    const int two_j = config.two_j_start + 2 * static_cast<int>(i);
    rows[i] = make_error_record(make_index(two_j, config.two_m1, config.two_m2), theta);
  });
  return rows;
}

std::vector<IntegralRecord> sweep_integral(const SweepConfig& config) {
  validate(config);
  std::vector<int> ls;
  for (int l = config.l_start; l <= config.l_stop; l += config.l_step) ls.push_back(l);
  std::vector<IntegralRecord> rows(ls.size());
  parallel_for(ls.size(), config.threads, [&](std::size_t i) {
    rows[i] = make_integral_record(ls[i], config.rho, config.epsilon);
  });
  return rows;
}

std::string format_number(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_csv(std::ostream& out, std::span<const ErrorRecord> rows) {
  out << "two_j,two_m1,two_m2,theta,exact,approx,abs_error,rel_error\n";
  for (const ErrorRecord& r : rows) {
    out << r.two_j << ',' << r.two_m1 << ',' << r.two_m2 << ',' << format_number(r.theta) << ','
        << format_number(r.exact) << ',' << format_number(r.approx) << ','
        << format_number(r.abs_error) << ',' << optional_number(r.rel_error) << '\n';
  }
}

void write_csv(std::ostream& out, std::span<const IntegralRecord> rows) {
  out << "l,rho,epsilon,exact,approx,rel_error\n";
  for (const IntegralRecord& r : rows) {
    out << r.l << ',' << format_number(r.rho) << ',' << format_number(r.epsilon) << ','
        << format_number(r.exact) << ',' << format_number(r.approx) << ','
        << optional_number(r.rel_error) << '\n';
  }
}

void write_json(std::ostream& out, std::span<const ErrorRecord> rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const ErrorRecord& r : rows) {
    doc.push_back({{"two_j", r.two_j},
                   {"two_m1", r.two_m1},
                   {"two_m2", r.two_m2},
                   {"theta", r.theta},
                   {"exact", r.exact},
                   {"approx", r.approx},
                   {"abs_error", r.abs_error},
                   {"rel_error", r.rel_error ? nlohmann::ordered_json(*r.rel_error) : nlohmann::ordered_json()}});
  }
  out << doc.dump(2) << '\n';
}

void write_json(std::ostream& out, std::span<const IntegralRecord> rows) {
  nlohmann::ordered_json doc = nlohmann::ordered_json::array();
  for (const IntegralRecord& r : rows) {
    doc.push_back({{"l", r.l},
                   {"rho", r.rho},
                   {"epsilon", r.epsilon},
                   {"exact", r.exact},
                   {"approx", r.approx},
                   {"rel_error", r.rel_error ? nlohmann::ordered_json(*r.rel_error) : nlohmann::ordered_json()}});
  }
  out << doc.dump(2) << '\n';
}

}  // namespace wigner
