// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fail.
//
//   acceptance <path-to-wigner_cli> <golden-csv> [criterion ...]

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracles.hpp"
#include "wigner/angular_core.hpp"
#include "wigner/bessel.hpp"
#include "wigner/error.hpp"
#include "wigner/partial_wave.hpp"
#include "wigner/quadrature.hpp"
#include "wigner/wigner_exact.hpp"
#include "wigner/wigner_uniform.hpp"

using namespace wigner;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;
  std::function<Outcome()> run;
};

std::string fmt(const char* pattern, double a, double b = 0.0) {
  char buf[160];
  std::snprintf(buf, sizeof buf, pattern, a, b);
  return buf;
}

double rel_error(const AngularIndex& idx, double theta) {
  const double exact = d_exact(idx, Angle(theta));
  return (exact - d_approx(idx, Angle(theta))) / exact;
}

double abs_error(const AngularIndex& idx, double theta) {
  return std::abs(d_exact(idx, Angle(theta)) - d_approx(idx, Angle(theta)));
}

void parallel(std::size_t n, const std::function<void(std::size_t)>& body) {
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < n; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

Outcome legendre_low_angle() {
  double worst = 0.0;
  for (int j : {10, 100, 1000, 2000}) {
    worst = std::max(worst, std::abs(rel_error(make_index(2 * j, 0, 0), 0.001)));
  }
  return {worst < 2e-6, fmt("max |R| = %.3e (limit 2e-6)", worst)};
}

Outcome stretched_state() {
  const double r2000 = std::abs(rel_error(make_index(4000, 4000, 4000), 0.001));
  bool monotone = true;
  for (int j : {20, 200, 2000}) {
    double previous = 0.0;
    for (double t : {1e-3, 1e-2, 1e-1}) {
      const double r = std::abs(rel_error(make_index(2 * j, 2 * j, 2 * j), t));
      if (r < previous) monotone = false;
      previous = r;
    }
  }
  return {r2000 < 2e-7 && monotone,
          fmt("|R(2000, 1e-3)| = %.3e (limit 2e-7), growth in theta ", r2000) +
              (monotone ? "nondecreasing" : "VIOLATED")};
}

Outcome half_integer() {
  const auto idx = make_index(4001, 5, 1);
  const double r = std::abs(rel_error(idx, 0.001));
  const double e2 = abs_error(idx, 1e-2);
  const double e3 = abs_error(idx, 1e-3);
  const double e4 = abs_error(idx, 1e-4);
  const bool decreasing = e2 > e3 && e3 > e4;
  return {r < 1e-5 && decreasing,
          fmt("|R(1e-3)| = %.3e (limit 1e-5); ", r) +
              fmt("abs errors %.2e > %.2e", e2, e3) + fmt(" > %.2e", e4)};
}

Outcome integral_rel_errors() {
  const std::vector<int> ls = {0, 500, 1000, 1500, 2000, 2500, 3000};
  std::vector<double> r(ls.size());
  parallel(ls.size(), [&](std::size_t i) { r[i] = integral_rel_error(1.0, ls[i], 0.001); });
  double worst = 0.0;
  for (double v : r) worst = std::max(worst, std::abs(v));
  return {worst <= 3e-5, fmt("max |R| = %.3e (limit 3e-5)", worst)};
}

Outcome rho_sensitivity() {
  const double rho[3] = {1.0, 0.99, 1.01};
  double r[3];
  parallel(3, [&](std::size_t i) { r[i] = integral_rel_error(rho[i], 3000, 0.001); });
  const double change = std::max(std::abs(r[1] - r[0]), std::abs(r[2] - r[0])) / std::abs(r[0]);
  return {change >= 0.02 && change <= 0.12, fmt("relative change %.4f (window [0.02, 0.12])", change)};
}

Outcome oracle_equivalence() {
  const double thetas[] = {1e-4, 1e-2, 0.3, 1.5, 3.0};
  std::vector<double> worst(101, 0.0);
  std::vector<long> counts(101, 0);
  // two_j = 1 .. 100 covers j = 1/2 .. 50
  parallel(100, [&](std::size_t k) {
    const int two_j = 100 - static_cast<int>(k);
    double w = 0.0;
    long n = 0;
    for (double t : thetas) {
      for (int a = -two_j; a <= two_j; a += 2) {
        for (int b = -two_j; b <= two_j; b += 2) {
          const auto idx = make_index(two_j, a, b);
          double series;
          try {
            series = d_series_highprec(idx, Angle(t));
          } catch (const Error&) {
            series = d_series_highprec(idx, Angle(t), 150);
          }
          w = std::max(w, std::abs(d_exact(idx, Angle(t)) - series));
          ++n;
        }
      }
    }
    worst[two_j] = w;
    counts[two_j] = n;
  });
  long total = 0;
  for (long c : counts) total += c;
  const double max_err = *std::max_element(worst.begin(), worst.end());
  return {max_err < 1e-12,
          fmt("max |exact - series| = %.3e over %.0f elements (limit 1e-12)", max_err,
              static_cast<double>(total))};
}

Outcome unitarity() {
  double worst = 0.0;
  std::mutex m;
  std::vector<std::pair<int, int>> rows;
  for (int j : {10, 100, 2000}) {
    for (int m1 : {0, j / 2, j}) rows.emplace_back(j, m1);
  }
  parallel(rows.size(), [&](std::size_t i) {
    const auto [j, m1] = rows[i];
    for (double t : {0.001, 0.1, 1.0}) {
      double sum = 0.0;
      for (int m2 = -j; m2 <= j; ++m2) {
        const double v = d_exact(make_index(2 * j, 2 * m1, 2 * m2), Angle(t));
        sum += v * v;
      }
      std::lock_guard lock(m);
      worst = std::max(worst, std::abs(sum - 1.0));
    }
  });
  return {worst < 1e-10, fmt("max |sum d^2 - 1| = %.3e (limit 1e-10)", worst)};
}

Outcome l0_closed_form() {
  double worst = 0.0;
  for (double rho : {0.9, 1.0, 1.1}) {
    for (double eps : {0.001, 0.01, 0.1}) {
      const double expected = (1.0 - std::exp(-rho / (eps * eps))) / rho;
      worst = std::max(worst, std::abs(integral_exact(rho, 0, eps) / expected - 1.0));
    }
  }
  return {worst < 1e-10, fmt("max relative deviation %.3e (limit 1e-10)", worst)};
}

Outcome bessel_suite() {
  double recurrence = 0.0;
  for (double x : {0.1, 1.0, 10.0, 100.0, 1000.0}) {
    for (int n = 1; n <= 32; ++n) {
      const double lo = bessel_j(n - 1, x);
      const double hi = bessel_j(n + 1, x);
      const double mid = 2.0 * n / x * bessel_j(n, x);
      const double scale = std::max({std::abs(lo), std::abs(hi), std::abs(mid)});
      recurrence = std::max(recurrence, std::abs(lo + hi - mid) / scale);
    }
  }
  double normalization = 0.0;
  for (double x = 0.25; x <= 100.0; x += 4.75) {
    double sum = bessel_j(0, x);
    for (int k = 1;; ++k) {
      const double term = bessel_j(2 * k, x);
      sum += 2.0 * term;
      if (2 * k > x && std::abs(term) < 1e-18) break;
    }
    normalization = std::max(normalization, std::abs(sum - 1.0));
  }
  double integral = 0.0;
  for (int n = 0; n <= 16; ++n) {
    for (double x = 0.1; x <= 50.0; x += 1.3) {
      integral = std::max(integral, std::abs(bessel_j(n, x) - oracle::bessel_integral(n, x)));
    }
  }
  const bool pass = recurrence < 1e-11 && normalization < 1e-11 && integral < 1e-10;
  return {pass, fmt("recurrence %.2e, normalization %.2e, ", recurrence, normalization) +
                    fmt("integral oracle %.2e (limits 1e-11 / 1e-11 / 1e-10)", integral)};
}

Outcome transform_normalization() {
  const double p = 1.0;
  const double eps = 0.01;
  const WavepacketParams params(p, eps * p);
  // |Psi|^2 over l is close to (2l+1) exp(-2 eps^2 l(l+1)), a Rayleigh profile in l
  // with scale 1/(2 eps); sum to its mean plus five standard deviations
  const double scale = 0.5 / eps;
  const double mean = scale * std::sqrt(std::numbers::pi / 2.0);
  const double sd = scale * std::sqrt(2.0 - std::numbers::pi / 2.0);
  const int l_max = static_cast<int>(std::ceil(mean + 5.0 * sd));

  const GaussLegendreRule rule = gauss_legendre_rule(40);
  const double half = 8.0 * params.sigma_p();
  std::vector<double> per_l(static_cast<std::size_t>(l_max + 1), 0.0);
  parallel(per_l.size(), [&](std::size_t l) {
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double k = p + half * rule.nodes[i];
      const double psi = transform_wavefunction(k, static_cast<int>(l), 0, params, IntegralMode::Quadrature);
      sum += rule.weights[i] * psi * psi;
    }
    per_l[l] = half * sum;
  });
  double total = 0.0;
  for (double v : per_l) total += v;
  const double deviation = std::abs(total - 1.0);
  return {deviation < 1e-4, fmt("sum = %.8f with l <= %.0f (limit 1e-4)", total, l_max)};
}

int run_cli(const std::string& cli, const std::string& args, const fs::path& capture) {
  const std::string cmd = cli + " " + args + " > " + capture.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Outcome cli_contract(const std::string& cli, const std::string& golden) {
  const fs::path dir = fs::temp_directory_path() / ("wigner_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const fs::path produced = dir / "sweep.csv";
  const fs::path log = dir / "log.txt";

  const int ok = run_cli(cli,
                         "sweep-theta --two-j 41 --two-m1 5 --two-m2 1 --theta-start 0.001 "
                         "--theta-stop 0.5 --theta-points 6 --threads 3 --out " + produced.string(),
                         log);
  const std::string expected = slurp(golden);
  const bool identical = !expected.empty() && slurp(produced) == expected;
  const int domain = run_cli(cli, "eval --two-j 2 --two-m1 4 --two-m2 0 --theta 0.1", log);
  const int io = run_cli(cli, "sweep-theta --two-j 4 --theta-points 3 --out " +
                                  (dir / "no_such_dir" / "x.csv").string(), log);
  fs::remove_all(dir);

  const bool pass = identical && ok == 0 && domain == 2 && io == 3;
  return {pass, std::string("golden ") + (identical ? "identical" : "DIFFERS") +
                    fmt(", exit codes %.0f/%.0f", ok, domain) + fmt("/%.0f (want 0/2/3)", io)};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::fprintf(stderr, "usage: %s <wigner_cli> <golden.csv> [criterion ...]\n", argv[0]);
    return 2;
  }
  const std::string cli = argv[1];
  const std::string golden = argv[2];
  std::set<int> only;
  for (int i = 3; i < argc; ++i) only.insert(std::atoi(argv[i]));

  const std::vector<Criterion> criteria = {
      {1, "Legendre case, low angle", 1, legendre_low_angle},
      {2, "stretched state (j,j,j)", 1, stretched_state},
      {3, "half-integer (2000.5, 5/2, 1/2)", 1, half_integer},
      {4, "overlap integral closed form, eps=0.001", 120, integral_rel_errors},
      {5, "rho sensitivity at l=3000", 60, rho_sensitivity},
      {6, "recurrence vs high-precision series, j<=50", 120, oracle_equivalence},
      {7, "unitarity of rows", 60, unitarity},
      {8, "l=0 integral closed form", 10, l0_closed_form},
      {9, "Bessel suite", 30, bessel_suite},
      {10, "transform normalization, eps=0.01", 120, transform_normalization},
      {11, "CLI golden file and exit codes", 5, [&] { return cli_contract(cli, golden); }},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = c.run();
    } catch (const std::exception& e) {
      outcome = {false, std::string("threw: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.budget_seconds;
    const bool pass = outcome.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s [%2d] %s: %s; %.2f s (budget %.0f s)%s\n", pass ? "PASS" : "FAIL", c.id, c.name,
                outcome.detail.c_str(), seconds, c.budget_seconds, in_time ? "" : " OVER BUDGET");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
