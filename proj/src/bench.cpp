#include "polyzero/bench.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>
#include <mutex>
#include <string>
#include <thread>

#include "polyzero/bounds.hpp"
#include "polyzero/disk_oracle.hpp"
#include "polyzero/errors.hpp"
#include "polyzero/families.hpp"

namespace polyzero {

namespace {

std::string fmt_real(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

struct InstanceResult {
  std::string rows;
  int skipped = 0;
  int violations = 0;
  double slack_sum = 0.0;
  double slack_max = 0.0;
  int counted_rows = 0;
  double max_root_modulus = 0.0;
};

InstanceResult eval_instance(const Polynomial& p, int index,
                             const BenchOptions& opts, bool ek_family) {
  InstanceResult res;
  if (ek_family) {
    const RootSet rs = aberth_roots(p);
    for (const Complex& z : rs.roots) {
      res.max_root_modulus = std::max(res.max_root_modulus, std::abs(z));
    }
  }
  for (double delta : opts.deltas) {
    const BoundReport bound = best_bound(p, delta);

    int exact = -1;
    double margin = std::numeric_limits<double>::quiet_NaN();
    bool skipped = true;
    try {
      const DiskCountResult c = count_in_disk(p, delta);
      exact = c.count;
      margin = c.boundary_margin;
      skipped =
          c.method != CountMethod::CROSS_CHECKED || !(margin >= 1e-6);
    } catch (const NotConverged&) {
      // leave the row marked skipped
    } catch (const OracleDisagreement&) {
      // a root essentially on the counting circle makes the closed-disk
      // count ambiguous; such rows are skipped, anything else is real
      margin = boundary_margin(p, delta);
      if (!(margin < 1e-6)) throw;
    }

    const int slack = bound.integer_bound - exact;
    if (!skipped) {
      res.counted_rows += 1;
      res.slack_sum += slack;
      res.slack_max = std::max(res.slack_max, static_cast<double>(slack));
      if (exact > bound.integer_bound) res.violations += 1;
    } else {
      res.skipped += 1;
    }

    res.rows += std::to_string(index);
    res.rows += ',';
    res.rows += std::to_string(p.degree());
    res.rows += ',';
    res.rows += to_string(bound.theorem);
    res.rows += ',';
    res.rows += fmt_real(delta);
    res.rows += ',';
    res.rows += fmt_real(bound.m_value.value_or(
        std::numeric_limits<double>::quiet_NaN()));
    res.rows += ',';
    res.rows += fmt_real(bound.raw_bound);
    res.rows += ',';
    res.rows += std::to_string(bound.integer_bound);
    res.rows += ',';
    res.rows += std::to_string(exact);
    res.rows += ',';
    res.rows += std::to_string(slack);
    res.rows += ',';
    res.rows += fmt_real(margin);
    res.rows += ',';
    res.rows += (skipped ? '1' : '0');
    if (ek_family) {
      res.rows += ',';
      res.rows += fmt_real(res.max_root_modulus);
    }
    res.rows += '\n';
  }
  return res;
}

}  // namespace

std::vector<double> parse_delta_grid(const std::string& text) {
  double parts[3];
  std::size_t pos = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t next = text.find(':', pos);
    if ((i < 2) == (next == std::string::npos)) {
      throw Error("delta grid must be start:stop:step");
    }
    const std::string item =
        text.substr(pos, next == std::string::npos ? next : next - pos);
    try {
      std::size_t used = 0;
      parts[i] = std::stod(item, &used);
      if (used != item.size()) throw Error("bad number");
    } catch (const std::exception&) {
      throw Error("delta grid must be start:stop:step with numeric fields");
    }
    pos = next + 1;
  }
  const double start = parts[0], stop = parts[1], step = parts[2];
  if (!(step > 0.0) || !(start <= stop + 1e-12)) {
    throw Error("delta grid needs start <= stop and step > 0");
  }
  std::vector<double> grid;
  for (int k = 0;; ++k) {
    const double v = start + k * step;
    if (v > stop + 1e-12) break;
    if (grid.size() >= 10000) {
      throw Error("delta grid has more than 10000 points; check the step");
    }
    grid.push_back(v);
  }
  return grid;
}

BenchSummary run_bench(const BenchOptions& opts, std::string& csv_out) {
  if (opts.deltas.empty()) throw Error("bench needs a nonempty delta grid");
  for (double d : opts.deltas) {
    if (!(d > 0.0 && d < 1.0)) throw BadDelta("bench deltas must lie in (0,1)");
  }
  if (opts.threads < 1) throw Error("threads must be >= 1");

  FamilySpec spec;
  spec.theorem = opts.family;
  spec.degree = opts.degree;
  spec.seed = opts.seed;
  spec.scale = opts.scale;
  spec.count = opts.count;
  const std::vector<Polynomial> instances = sample(spec);
  const bool ek_family = opts.family == TheoremId::EK_A;

  std::vector<InstanceResult> results(instances.size());
  const int workers =
      std::min<int>(opts.threads, static_cast<int>(instances.size()));
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto work = [&](int worker) {
    try {
      for (std::size_t i = static_cast<std::size_t>(worker);
           i < instances.size(); i += static_cast<std::size_t>(workers)) {
        results[i] =
            eval_instance(instances[i], static_cast<int>(i), opts, ek_family);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };

  if (workers <= 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (std::thread& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  // Aggregate and emit strictly in instance order so the CSV and the
  // summary are independent of the execution schedule.
  csv_out =
      "seed_index,degree,theorem,delta,m_value,raw_bound,integer_bound,"
      "exact_count,slack,boundary_margin,skipped_flag";
  if (ek_family) csv_out += ",max_root_modulus";
  csv_out += '\n';

  BenchSummary summary;
  summary.instances = static_cast<int>(instances.size());
  summary.has_root_modulus = ek_family;
  double slack_sum = 0.0;
  int counted = 0;
  for (const InstanceResult& r : results) {
    csv_out += r.rows;
    summary.skipped += r.skipped;
    summary.violations += r.violations;
    slack_sum += r.slack_sum;
    counted += r.counted_rows;
    summary.max_slack = std::max(summary.max_slack, r.slack_max);
    summary.max_root_modulus =
        std::max(summary.max_root_modulus, r.max_root_modulus);
  }
  summary.rows = static_cast<int>(instances.size() * opts.deltas.size());
  summary.mean_slack = counted > 0 ? slack_sum / counted : 0.0;
  return summary;
}

std::string format_summary(const BenchSummary& s) {
  const double rate =
      s.rows > 0 ? 100.0 * s.skipped / static_cast<double>(s.rows) : 0.0;
  char rate_buf[32];
  std::snprintf(rate_buf, sizeof(rate_buf), "%.3f", rate);
  std::string line = "instances=" + std::to_string(s.instances) +
                     " rows=" + std::to_string(s.rows) +
                     " skipped=" + std::to_string(s.skipped) + " skip_rate=" +
                     rate_buf + "% violations=" + std::to_string(s.violations) +
                     " mean_slack=" + fmt_real(s.mean_slack) +
                     " max_slack=" + fmt_real(s.max_slack);
  if (s.has_root_modulus) {
    line += " max_root_modulus=" + fmt_real(s.max_root_modulus);
  }
  return line;
}

}  // namespace polyzero
