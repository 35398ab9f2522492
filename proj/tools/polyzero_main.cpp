#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyzero/bench.hpp"
#include "polyzero/bounds.hpp"
#include "polyzero/disk_oracle.hpp"
#include "polyzero/errors.hpp"
#include "polyzero/families.hpp"
#include "polyzero/hypothesis.hpp"
#include "polyzero/polynomial.hpp"

namespace {

using nlohmann::ordered_json;
using namespace polyzero;

class IoError : public Error {
 public:
  using Error::Error;
};

/// Shortest round-trip decimal form.
std::string fmt(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

std::string fmt17(double v) {
  char buf[64];
  const auto res =
      std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

Polynomial parse_inline_coeffs(const std::string& text) {
  std::vector<Complex> coeffs;
  std::stringstream terms(text);
  std::string term;
  while (std::getline(terms, term, ';')) {
    const std::size_t comma = term.find(',');
    if (comma == std::string::npos) {
      throw InvalidPolynomial("--coeffs terms must be re,im pairs");
    }
    try {
      std::size_t used = 0;
      const double re = std::stod(term.substr(0, comma), &used);
      if (used != comma) throw std::invalid_argument("re");
      const std::string im_text = term.substr(comma + 1);
      const double im = std::stod(im_text, &used);
      if (used != im_text.size()) throw std::invalid_argument("im");
      coeffs.emplace_back(re, im);
    } catch (const std::exception&) {
      throw InvalidPolynomial("--coeffs terms must be re,im pairs");
    }
  }
  return Polynomial(std::move(coeffs));
}

Polynomial parse_document(std::istream& in, const std::string& origin) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(in);
  } catch (const std::exception& e) {
    throw InvalidPolynomial(origin + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("coeffs") ||
      !doc["coeffs"].is_array()) {
    throw InvalidPolynomial(origin +
                            ": expected {\"coeffs\": [[re, im], ...]}");
  }
  std::vector<Complex> coeffs;
  for (const auto& pair : doc["coeffs"]) {
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() ||
        !pair[1].is_number()) {
      throw InvalidPolynomial(origin + ": coefficients must be [re, im]");
    }
    coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return Polynomial(std::move(coeffs));
}

Polynomial load_polynomial(const std::string& input_path,
                           const std::string& inline_coeffs) {
  if (!inline_coeffs.empty()) return parse_inline_coeffs(inline_coeffs);
  if (input_path.empty()) {
    throw InvalidPolynomial("no input: pass a JSON document or --coeffs");
  }
  if (input_path == "-") return parse_document(std::cin, "stdin");
  std::ifstream in(input_path);
  if (!in) {
    throw InvalidPolynomial("cannot open input file: " + input_path);
  }
  return parse_document(in, input_path);
}

std::string witness_params(const Witness& w) {
  std::string out;
  auto add = [&](const char* name, const std::string& value) {
    if (!out.empty()) out += ' ';
    out += name;
    out += '=';
    out += value;
  };
  if (w.lambda) add("lambda", std::to_string(*w.lambda));
  if (w.t) add("t", fmt(*w.t));
  if (w.s) add("s", fmt(*w.s));
  if (w.alpha) add("alpha", fmt(*w.alpha));
  if (w.beta) add("beta", fmt(*w.beta));
  return out;
}

int run_check(const Polynomial& p) {
  if (p[0] == Complex(0.0, 0.0)) {
    std::cerr << "error: a_0 = 0; the counting theorems divide by |a_0|\n";
    return 2;
  }
  if (p.degree() == 0) {
    std::cout << "degree 0: a nonzero constant has no zeros; every counting "
                 "bound is trivially 0\n";
  }
  const HypothesisReport report = full_report(p);
  for (TheoremId id : kAllTheorems) {
    bool any = false;
    for (const Witness& w : report.witnesses) {
      if (w.theorem != id) continue;
      any = true;
      std::string params = witness_params(w);
      std::printf("%-6s SATISFIED%s%s\n", to_string(id),
                  params.empty() ? "" : "  ", params.c_str());
      if (id == TheoremId::EK_A) {
        std::printf("       (all zeros lie in |z| <= 1)\n");
      }
    }
    if (!any) {
      for (const auto& [rid, why] : report.rejections) {
        if (rid == id) {
          std::printf("%-6s REJECTED   %s\n", to_string(id), why.c_str());
        }
      }
    }
  }
  return 0;
}

ordered_json witness_json(const Witness& w) {
  ordered_json j = ordered_json::object();
  j["theorem"] = to_string(w.theorem);
  if (w.lambda) j["lambda"] = *w.lambda;
  if (w.t) j["t"] = *w.t;
  if (w.s) j["s"] = *w.s;
  if (w.alpha) j["alpha"] = *w.alpha;
  if (w.beta) j["beta"] = *w.beta;
  return j;
}

ordered_json bound_json(const BoundReport& r) {
  ordered_json j = ordered_json::object();
  j["theorem"] = to_string(r.theorem);
  j["delta"] = r.delta;
  if (r.m_value) j["m_value"] = *r.m_value;
  j["raw_bound"] = r.raw_bound;
  j["integer_bound"] = r.integer_bound;
  j["clamped"] = r.clamped;
  if (r.witness) j["witness"] = witness_json(*r.witness);
  return j;
}

void render_bounds_table(const std::vector<BoundReport>& reports, bool ek) {
  std::printf("%-7s %-8s %-22s %-22s %s\n", "theorem", "delta", "M",
              "raw_bound", "integer_bound");
  for (const BoundReport& r : reports) {
    std::printf("%-7s %-8s %-22s %-22s %d%s\n", to_string(r.theorem),
                fmt(r.delta).c_str(),
                r.m_value ? fmt(*r.m_value).c_str() : "-",
                fmt(r.raw_bound).c_str(), r.integer_bound,
                r.clamped ? " (clamped to degree)" : "");
  }
  if (ek) {
    std::printf("EK_A: hypothesis satisfied; all zeros lie in |z| <= 1\n");
  }
}

void render_bounds_csv(const std::vector<BoundReport>& reports) {
  std::printf("theorem,delta,m_value,raw_bound,integer_bound,clamped\n");
  for (const BoundReport& r : reports) {
    std::printf("%s,%s,%s,%s,%d,%d\n", to_string(r.theorem),
                fmt17(r.delta).c_str(),
                r.m_value ? fmt17(*r.m_value).c_str() : "",
                fmt17(r.raw_bound).c_str(), r.integer_bound,
                r.clamped ? 1 : 0);
  }
}

void render_bounds_json(const std::vector<BoundReport>& reports, double delta,
                        bool ek) {
  ordered_json j = ordered_json::object();
  j["delta"] = delta;
  j["bounds"] = ordered_json::array();
  for (const BoundReport& r : reports) j["bounds"].push_back(bound_json(r));
  j["ek_location"] = ek;
  std::cout << j.dump(2) << '\n';
}

int run_bound(const Polynomial& p, double delta, const std::string& theorem,
              bool all, const std::string& format) {
  if (p[0] == Complex(0.0, 0.0)) {
    std::cerr << "error: a_0 = 0; the counting theorems divide by |a_0|\n";
    return 2;
  }
  if (!(delta > 0.0 && delta < 1.0)) {
    throw BadDelta("--delta must lie in (0, 1)");
  }
  const bool ek = check_enestrom_kakeya(p);

  std::vector<BoundReport> reports;
  if (all) {
    reports = all_bounds(p, delta);
    if (reports.empty()) {
      throw NoHypothesisApplies("no counting theorem applies");
    }
  } else if (theorem == "auto") {
    reports.push_back(best_bound(p, delta));
  } else {
    const auto id = theorem_from_string(theorem);
    if (!id) throw Error("unknown theorem: " + theorem);
    if (*id == TheoremId::EK_A) {
      if (ek) {
        std::printf("EK_A SATISFIED: all zeros lie in |z| <= 1\n");
        return 0;
      }
      throw HypothesisNotSatisfied("EK_A hypothesis does not hold");
    }
    const bool half_only = *id == TheoremId::THM_B ||
                           *id == TheoremId::THM_C || *id == TheoremId::THM_D;
    if (half_only && delta != 0.5) {
      throw BadDelta(std::string(to_string(*id)) +
                     " is stated only at delta = 1/2; use the general-delta "
                     "form (E, F, T1, T2)");
    }
    const std::vector<BoundReport> every = all_bounds(p, delta);
    for (const BoundReport& r : every) {
      if (r.theorem == *id) reports.push_back(r);
    }
    if (reports.empty()) {
      throw HypothesisNotSatisfied(std::string(to_string(*id)) +
                                   " hypothesis does not hold");
    }
  }

  if (format == "json") {
    render_bounds_json(reports, delta, ek);
  } else if (format == "csv") {
    render_bounds_csv(reports);
  } else {
    render_bounds_table(reports, ek);
  }
  return 0;
}

int run_count(const Polynomial& p, double delta) {
  if (!(delta > 0.0)) throw BadDelta("--delta must be positive");
  const DiskCountResult r = count_in_disk(p, delta);
  std::printf("count=%d method=%s radius=%s boundary_margin=%s\n", r.count,
              to_string(r.method), fmt(r.radius).c_str(),
              fmt(r.boundary_margin).c_str());
  return 0;
}

int run_bench(const std::string& family, int degree, std::uint64_t seed,
              int count, double scale, const std::string& grid,
              const std::string& out_path, int threads) {
  const auto id = theorem_from_string(family);
  if (!id) throw InfeasibleSpec("unknown family: " + family);
  BenchOptions opts;
  opts.family = *id;
  opts.degree = degree;
  opts.seed = seed;
  opts.count = count;
  opts.scale = scale;
  opts.deltas = parse_delta_grid(grid);
  opts.threads = threads;

  std::string csv;
  const BenchSummary summary = polyzero::run_bench(opts, csv);

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + out_path);
  out << csv;
  out.flush();
  if (!out) throw IoError("failed writing: " + out_path);

  std::cout << format_summary(summary) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Zero-count bounds for complex polynomials in disks |z| <= delta,\n"
      "with exact cross-checked counts for verification."};
  app.require_subcommand(1);

  std::string input_path;
  std::string inline_coeffs;
  double delta = 0.5;
  std::string theorem = "auto";
  bool all = false;
  std::string format = "table";

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", input_path,
                    "JSON document {\"coeffs\": [[re, im], ...]}, '-' for "
                    "stdin");
    cmd->add_option("--coeffs", inline_coeffs,
                    "inline coefficients re,im;re,im;... (ascending, a_0 "
                    "first)");
  };

  CLI::App* check = app.add_subcommand(
      "check", "report which coefficient hypotheses hold, with witnesses");
  add_input(check);

  CLI::App* bound = app.add_subcommand(
      "bound", "zero-count bounds for the disk |z| <= delta");
  add_input(bound);
  bound->add_option("--delta", delta, "disk radius, in (0, 1)")
      ->capture_default_str();
  bound->add_option("--theorem", theorem, "A, B, C, D, E, F, T1, T2 or auto")
      ->capture_default_str();
  bound->add_flag("--all", all, "every applicable bound");
  bound->add_option("--format", format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}))
      ->capture_default_str();

  CLI::App* count_cmd = app.add_subcommand(
      "count", "exact cross-checked count of zeros in |z| <= delta");
  add_input(count_cmd);
  count_cmd->add_option("--delta", delta, "disk radius, positive")
      ->capture_default_str();

  std::string family;
  int degree = 8;
  std::uint64_t seed = 0;
  int count_n = 100;
  double scale = 1.0;
  std::string grid = "0.1:0.9:0.1";
  std::string out_path;
  int threads = 1;

  CLI::App* bench = app.add_subcommand(
      "bench", "seeded tightness benchmark: bounds vs. exact counts, to CSV");
  bench->add_option("--family", family,
                    "EK_A, THM_B, THM_C, THM_D, THM_E, THM_F or THM_2")
      ->required();
  bench->add_option("--degree", degree, "polynomial degree")
      ->capture_default_str();
  bench->add_option("--seed", seed, "64-bit stream seed")
      ->capture_default_str();
  bench->add_option("--count", count_n, "number of instances")
      ->capture_default_str();
  bench->add_option("--scale", scale, "coefficient magnitude scale")
      ->capture_default_str();
  bench->add_option("--delta-grid", grid, "start:stop:step, inclusive")
      ->capture_default_str();
  bench->add_option("--out", out_path, "CSV output path")->required();
  bench->add_option("--threads", threads, "instance-level parallelism")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*check || *bound || *count_cmd) {
      const Polynomial p = load_polynomial(input_path, inline_coeffs);
      if (*check) return run_check(p);
      if (*bound) return run_bound(p, delta, theorem, all, format);
      return run_count(p, delta);
    }
    return run_bench(family, degree, seed, count_n, scale, grid, out_path,
                     threads);
  } catch (const OracleDisagreement& e) {
    std::cerr << "oracle disagreement: " << e.what() << '\n';
    return 4;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return 5;
  } catch (const NoHypothesisApplies& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const HypothesisNotSatisfied& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const InvalidPolynomial& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const BadDelta& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const InfeasibleSpec& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
