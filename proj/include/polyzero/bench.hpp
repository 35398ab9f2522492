#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyzero/hypothesis.hpp"

namespace polyzero {

/// Tightness benchmark over a seeded family: for every (instance, delta)
/// pair, the best applicable bound is compared with the cross-checked exact
/// count. Instances may be evaluated in parallel; rows are emitted in
/// (instance, delta) order regardless of thread count, so the CSV is
/// byte-identical across runs and thread counts.
struct BenchOptions {
  TheoremId family = TheoremId::THM_2;
  int degree = 8;
  std::uint64_t seed = 0;
  int count = 100;
  double scale = 1.0;
  std::vector<double> deltas;
  int threads = 1;
};

struct BenchSummary {
  int instances = 0;
  int rows = 0;
  int skipped = 0;
  int violations = 0;
  double mean_slack = 0.0;
  double max_slack = 0.0;
  /// Largest Aberth root modulus over all instances (EK_A family only).
  double max_root_modulus = 0.0;
  bool has_root_modulus = false;
};

/// Runs the benchmark and returns the CSV text (header + one row per
/// (instance, delta)) plus the summary aggregated in deterministic order.
/// Reals in the CSV carry 17 significant digits, '.' decimal separator.
BenchSummary run_bench(const BenchOptions& opts, std::string& csv_out);

/// "start:stop:step", endpoints inclusive within 1e-12.
std::vector<double> parse_delta_grid(const std::string& text);

/// One-line human summary (the line cmd_bench prints to stdout).
std::string format_summary(const BenchSummary& s);

}  // namespace polyzero
