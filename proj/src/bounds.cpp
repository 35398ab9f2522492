#include "polyzero/bounds.hpp"

#include <algorithm>
#include <cmath>

namespace polyzero {

namespace {

int clamp_to_degree(double raw, int n, bool* clamped) {
  int k = static_cast<int>(std::floor(raw));
  *clamped = k > n;
  if (k > n) k = n;
  if (k < 0) k = 0;
  return k;
}

BoundReport make_report(TheoremId id, std::optional<Witness> w, double delta,
                        double m_value, double raw, int n) {
  BoundReport r;
  r.theorem = id;
  r.witness = std::move(w);
  r.delta = delta;
  r.m_value = m_value;
  r.raw_bound = raw;
  r.integer_bound = clamp_to_degree(raw, n, &r.clamped);
  return r;
}

const double kLog2 = std::log(2.0);

}  // namespace

double titchmarsh_bound(double M, double f0_abs, double delta, double R) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw BadDelta("delta must lie in (0, 1)");
  }
  if (!(R > 0.0)) {
    throw Error("disk radius R must be positive");
  }
  if (!(f0_abs > 0.0)) {
    throw ZeroAtCenter("|F(0)| must be positive");
  }
  if (M < f0_abs) {
    throw BoundBelowCenterValue("M < |F(0)|: M does not bound |F| on the disk");
  }
  return std::log(M / f0_abs) / -std::log(delta);
}

double m2(const Polynomial& p, int lambda, double t, double s) {
  const int n = p.degree();
  const int l = std::clamp(lambda, 0, n);
  const double a0 = p.re(0);
  const double an = p.re(n);
  return (std::fabs(a0) - a0) + (std::fabs(an) - an) + (std::fabs(t) - t) +
         (std::fabs(s) + s) + 2.0 * p.re(l) + 2.0 * im_abs_sum(p);
}

double m1(const Polynomial& p, int lambda, double t) {
  const int n = p.degree();
  const int l = std::clamp(lambda, 0, n);
  const double a0 = p.re(0);
  const double an = p.re(n);
  return (std::fabs(a0) - a0) + (std::fabs(an) - an) + (std::fabs(t) - t) +
         2.0 * p.re(l) + 2.0 * im_abs_sum(p);
}

BoundReport bound_thm1(const Polynomial& p, const Witness& w, double delta) {
  const double M = m1(p, w.lambda.value_or(0), w.t.value_or(0.0));
  const double raw = titchmarsh_bound(M, std::abs(p[0]), delta, 1.0);
  return make_report(TheoremId::THM_1, w, delta, M, raw, p.degree());
}

BoundReport bound_thm2(const Polynomial& p, const Witness& w, double delta) {
  const double M =
      m2(p, w.lambda.value_or(0), w.t.value_or(0.0), w.s.value_or(0.0));
  const double raw = titchmarsh_bound(M, std::abs(p[0]), delta, 1.0);
  return make_report(TheoremId::THM_2, w, delta, M, raw, p.degree());
}

BoundReport bound_thm_b(const Polynomial& p) {
  if (!check_enestrom_kakeya(p)) {
    throw HypothesisNotSatisfied(
        "THM_B needs real coefficients with 0 < a_0 <= ... <= a_n");
  }
  const int n = p.degree();
  const double raw = 1.0 + std::log(p.re(n) / p.re(0)) / kLog2;
  return make_report(TheoremId::THM_B,
                     Witness{TheoremId::THM_B, {}, {}, {}, {}, {}}, 0.5,
                     2.0 * p.re(n), raw, n);
}

namespace {

double arg_cone_m(const Polynomial& p, double alpha) {
  const int n = p.degree();
  double tail = 0.0;
  for (int j = 0; j < n; ++j) tail += std::abs(p[j]);
  return std::abs(p[n]) * (std::cos(alpha) + std::sin(alpha) + 1.0) +
         2.0 * std::sin(alpha) * tail;
}

}  // namespace

BoundReport bound_thm_e(const Polynomial& p, double alpha, double beta,
                        double delta) {
  if (!check_arg_condition(p, alpha, beta)) {
    throw HypothesisNotSatisfied(
        "THM_E needs nonzero coefficients with nondecreasing moduli and "
        "arguments within alpha of beta");
  }
  const double M = arg_cone_m(p, alpha);
  const double raw = titchmarsh_bound(M, std::abs(p[0]), delta, 1.0);
  BoundReport r = make_report(
      TheoremId::THM_E, Witness{TheoremId::THM_E, {}, {}, {}, alpha, beta},
      delta, M, raw, p.degree());
  return r;
}

BoundReport bound_thm_c(const Polynomial& p, double alpha, double beta) {
  BoundReport r = bound_thm_e(p, alpha, beta, 0.5);
  r.theorem = TheoremId::THM_C;
  r.witness->theorem = TheoremId::THM_C;
  return r;
}

BoundReport bound_thm_d(const Polynomial& p) {
  if (!check_real_parts_positive_nondecreasing(p)) {
    throw HypothesisNotSatisfied(
        "THM_D needs 0 < Re(a_0) <= ... <= Re(a_n)");
  }
  const int n = p.degree();
  const double X = p.re(n) + im_abs_sum(p);
  const double raw = 1.0 + std::log(X / std::abs(p[0])) / kLog2;
  return make_report(TheoremId::THM_D,
                     Witness{TheoremId::THM_D, {}, {}, {}, {}, {}}, 0.5,
                     2.0 * X, raw, n);
}

BoundReport bound_thm_f(const Polynomial& p, double delta) {
  if (!check_real_parts_positive_nondecreasing(p)) {
    throw HypothesisNotSatisfied(
        "THM_F needs 0 < Re(a_0) <= ... <= Re(a_n)");
  }
  const int n = p.degree();
  const double M = 2.0 * (p.re(n) + im_abs_sum(p));
  const double raw = titchmarsh_bound(M, std::abs(p[0]), delta, 1.0);
  return make_report(TheoremId::THM_F,
                     Witness{TheoremId::THM_F, {}, {}, {}, {}, {}}, delta, M,
                     raw, n);
}

std::vector<BoundReport> all_bounds(const Polynomial& p, double delta) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw BadDelta("delta must lie in (0, 1)");
  }
  const int n = p.degree();
  const bool half = delta == 0.5;
  std::vector<BoundReport> out;

  const bool ek = check_enestrom_kakeya(p);
  const auto arg = find_arg_params(p);
  const bool df = check_real_parts_positive_nondecreasing(p);
  const std::vector<Witness> t2 = find_t2_witnesses(p);

  if (ek && half) out.push_back(bound_thm_b(p));
  if (arg && half) out.push_back(bound_thm_c(p, arg->first, arg->second));
  if (df && half) out.push_back(bound_thm_d(p));
  if (arg) out.push_back(bound_thm_e(p, arg->first, arg->second, delta));
  if (df) out.push_back(bound_thm_f(p, delta));

  // THM_1 and the corollaries range over the slack-free subsets of the
  // THM_2 witnesses; each bound minimizes its M over the admissible lambdas.
  const Witness* best_t1 = nullptr;
  const Witness* best_t2 = nullptr;
  const Witness* best_cor1 = nullptr;
  bool has_cor2 = false;
  bool has_cor3 = false;
  double best_t1_m = 0.0;
  double best_t2_m = 0.0;
  double best_cor1_m = 0.0;
  for (const Witness& w : t2) {
    const double t = w.t.value_or(0.0);
    const double s = w.s.value_or(0.0);
    const double mv = m2(p, *w.lambda, t, s);
    if (!best_t2 || mv < best_t2_m) {
      best_t2 = &w;
      best_t2_m = mv;
    }
    if (s == 0.0) {
      const double mv1 = m1(p, *w.lambda, t);
      if (!best_t1 || mv1 < best_t1_m) {
        best_t1 = &w;
        best_t1_m = mv1;
      }
      if (t == 0.0) {
        const double mv0 = m1(p, *w.lambda, 0.0);
        if (!best_cor1 || mv0 < best_cor1_m) {
          best_cor1 = &w;
          best_cor1_m = mv0;
        }
        if (*w.lambda == 0) has_cor2 = true;
        if (*w.lambda == n) has_cor3 = true;
      }
    }
  }

  const double a0_abs = std::abs(p[0]);
  if (best_t1) {
    out.push_back(bound_thm1(
        p, Witness{TheoremId::THM_1, best_t1->lambda, best_t1->t, {}, {}, {}},
        delta));
  }
  if (best_t2) {
    out.push_back(bound_thm2(p, *best_t2, delta));
  }
  if (best_cor1) {
    Witness w{TheoremId::COR_1, best_cor1->lambda, {}, {}, {}, {}};
    out.push_back(make_report(
        TheoremId::COR_1, w, delta, best_cor1_m,
        titchmarsh_bound(best_cor1_m, a0_abs, delta, 1.0), n));
  }
  if (has_cor2) {
    const double M = m1(p, 0, 0.0);
    out.push_back(make_report(TheoremId::COR_2,
                              Witness{TheoremId::COR_2, 0, {}, {}, {}, {}},
                              delta, M, titchmarsh_bound(M, a0_abs, delta, 1.0),
                              n));
  }
  if (has_cor3) {
    const double M = m1(p, n, 0.0);
    out.push_back(make_report(TheoremId::COR_3,
                              Witness{TheoremId::COR_3, n, {}, {}, {}, {}},
                              delta, M, titchmarsh_bound(M, a0_abs, delta, 1.0),
                              n));
  }

  std::stable_sort(out.begin(), out.end(),
                   [](const BoundReport& a, const BoundReport& b) {
                     return static_cast<int>(a.theorem) <
                            static_cast<int>(b.theorem);
                   });
  return out;
}

BoundReport best_bound(const Polynomial& p, double delta) {
  const std::vector<BoundReport> all = all_bounds(p, delta);
  if (all.empty()) {
    throw NoHypothesisApplies("no counting theorem applies to this polynomial");
  }
  const BoundReport* best = &all.front();
  for (const BoundReport& r : all) {
    if (r.integer_bound < best->integer_bound ||
        (r.integer_bound == best->integer_bound &&
         r.raw_bound < best->raw_bound)) {
      best = &r;
    }
  }
  return *best;
}

}  // namespace polyzero
