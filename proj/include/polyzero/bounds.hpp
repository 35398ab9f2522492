#pragma once

#include <optional>
#include <vector>

#include "polyzero/hypothesis.hpp"
#include "polyzero/polynomial.hpp"

namespace polyzero {

/// One computed zero-count bound for the disk |z| <= delta.
/// raw_bound is the real-valued expression; integer_bound is
/// min(floor(raw_bound), degree) (a degree-n polynomial has at most n
/// zeros); clamped records whether that min actually bit.
struct BoundReport {
  TheoremId theorem;
  std::optional<Witness> witness;
  double delta;
  std::optional<double> m_value;
  double raw_bound;
  int integer_bound;
  bool clamped;
};

/// Generic disk count: if F is analytic with |F| <= M on |z| <= R and
/// F(0) != 0, the number of zeros of F in |z| <= delta*R is bounded by
/// log(M / f0_abs) / log(1/delta). R only fixes the disk's radius
/// semantics; it does not enter the value.
double titchmarsh_bound(double M, double f0_abs, double delta, double R);

/// M1 = |alpha_0| - alpha_0 + |alpha_n| - alpha_n + |t| - t
///      + 2 alpha_lambda + 2 sum |beta_j|.
/// No hypothesis checking here; garbage in, garbage out.
double m1(const Polynomial& p, int lambda, double t);

/// M2 = M1's terms plus |s| + s. m2(p, lambda, t, 0) == m1(p, lambda, t).
double m2(const Polynomial& p, int lambda, double t, double s);

/// log(M1 / |a_0|) / log(1/delta) for a validated THM_1-style witness.
BoundReport bound_thm1(const Polynomial& p, const Witness& w, double delta);

/// log(M2 / |a_0|) / log(1/delta) for a validated THM_2 witness.
BoundReport bound_thm2(const Polynomial& p, const Witness& w, double delta);

/// 1 + log(a_n / a_0) / log 2 at delta = 1/2 (stated only there).
BoundReport bound_thm_b(const Polynomial& p);

/// Argument-cone bound at delta = 1/2.
BoundReport bound_thm_c(const Polynomial& p, double alpha, double beta);

/// Argument-cone bound, general delta:
/// M = |a_n| (cos a + sin a + 1) + 2 sin a * sum_{j<n} |a_j|.
BoundReport bound_thm_e(const Polynomial& p, double alpha, double beta,
                        double delta);

/// 1 + log((alpha_n + sum |beta_j|) / |a_0|) / log 2 at delta = 1/2.
BoundReport bound_thm_d(const Polynomial& p);

/// log(2 (alpha_n + sum |beta_j|) / |a_0|) / log(1/delta).
BoundReport bound_thm_f(const Polynomial& p, double delta);

/// Every bound whose hypothesis holds, in TheoremId order, minimizing over
/// witnesses where a theorem admits several. THM_B/C/D appear only when
/// delta == 0.5 exactly (they are stated only there).
std::vector<BoundReport> all_bounds(const Polynomial& p, double delta);

/// The report with minimal integer_bound; ties broken by raw_bound, then
/// TheoremId order. Throws NoHypothesisApplies when nothing applies.
BoundReport best_bound(const Polynomial& p, double delta);

}  // namespace polyzero
