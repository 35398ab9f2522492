#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyzero/polynomial.hpp"

namespace polyzero {

/// The coefficient-condition variants the library knows how to certify.
/// EK_A is the classical Enestrom-Kakeya location statement; THM_B..THM_F
/// are the fixed- and general-delta counting bounds built on monotone
/// coefficient chains or argument cones; THM_1/THM_2 are the unimodal
/// real-part chains with slack parameters t (top link) and s (bottom link);
/// COR_1..COR_3 are the t = 0 / lambda = 0 / lambda = n reductions; LEMMA is
/// the generic analytic-function count that everything else feeds.
enum class TheoremId {
  EK_A,
  THM_B,
  THM_C,
  THM_D,
  THM_E,
  THM_F,
  THM_1,
  THM_2,
  COR_1,
  COR_2,
  COR_3,
  LEMMA,
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::EK_A,  TheoremId::THM_B, TheoremId::THM_C, TheoremId::THM_D,
    TheoremId::THM_E, TheoremId::THM_F, TheoremId::THM_1, TheoremId::THM_2,
    TheoremId::COR_1, TheoremId::COR_2, TheoremId::COR_3, TheoremId::LEMMA,
};

const char* to_string(TheoremId id);
std::optional<TheoremId> theorem_from_string(const std::string& name);

/// A concrete parameter assignment certifying that a theorem's hypothesis
/// holds for a given polynomial. Fields a theorem does not use are absent;
/// fields a theorem fixes (e.g. s = 0 for THM_1, t = 0 for COR_1) are
/// implied by their absence. Witnesses re-validate: validate(w, p) is true
/// for every witness produced by the find_* searches.
struct Witness {
  TheoremId theorem;
  std::optional<int> lambda;
  std::optional<double> t;
  std::optional<double> s;
  std::optional<double> alpha;
  std::optional<double> beta;
};

struct HypothesisReport {
  std::vector<Witness> witnesses;
  std::vector<std::pair<TheoremId, std::string>> rejections;
};

/// 0 < a_0 <= a_1 <= ... <= a_n with every coefficient real.
/// Exact comparisons, no tolerance.
bool check_enestrom_kakeya(const Polynomial& p);

/// All coefficients nonzero with nondecreasing moduli, 0 <= alpha <= pi/2,
/// and every arg(a_j) within angular distance alpha of beta (shortest arc).
bool check_arg_condition(const Polynomial& p, double alpha, double beta);

/// Minimal enclosing circular arc of the coefficient arguments:
/// beta = arc midpoint, alpha = arc half-width. Absent when some
/// coefficient is zero, the moduli are not nondecreasing, or the half-width
/// exceeds pi/2.
std::optional<std::pair<double, double>> find_arg_params(const Polynomial& p);

/// 0 < Re(a_0) <= Re(a_1) <= ... <= Re(a_n); imaginary parts free.
bool check_real_parts_positive_nondecreasing(const Polynomial& p);

/// The unimodal chain with peak at lambda:
///   alpha_0 - s <= alpha_1 <= ... <= alpha_lambda >= ... >= alpha_{n-1}
///   and t + alpha_n <= alpha_{n-1}.
/// Endpoint conventions: lambda = 0 fixes s = 0 and requires
/// alpha_0 >= alpha_1 >= ... >= alpha_{n-1}; lambda = n fixes t = 0 and
/// requires alpha_1 <= ... <= alpha_n. Degree 0: holds iff t = s = 0.
/// Pure chain predicate; the theorems' a_0 != 0 side condition is enforced
/// by find_t2_witnesses and validate, not here.
bool check_t2_chain(const Polynomial& p, int lambda, double t, double s);

/// For every lambda whose interior chain holds, emits the witness with the
/// M2-optimal slack: t = 0 if alpha_n <= alpha_{n-1} else alpha_{n-1} -
/// alpha_n, and s = 0 if alpha_0 <= alpha_1 else alpha_0 - alpha_1
/// (with t or s pinned to 0 at the endpoint lambdas). Every emitted witness
/// passes check_t2_chain.
std::vector<Witness> find_t2_witnesses(const Polynomial& p);

/// Re-runs the checker matching w.theorem with w's parameters.
bool validate(const Witness& w, const Polynomial& p);

/// Runs every checker and search; each TheoremId lands either in
/// witnesses (possibly several, one per lambda for THM_1/THM_2 families)
/// or in rejections with a reason.
HypothesisReport full_report(const Polynomial& p);

}  // namespace polyzero
