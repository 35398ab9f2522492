#include "polyzero/hypothesis.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace polyzero {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Shortest-arc angular distance, computed modulo 2*pi.
double angular_distance(double a, double b) {
  double d = std::fmod(std::fabs(a - b), kTwoPi);
  if (d > kPi) d = kTwoPi - d;
  return d;
}

double arg_in_0_2pi(Complex c) {
  double t = std::arg(c);
  if (t < 0.0) t += kTwoPi;
  return t;
}

bool real_parts_nonincreasing(const Polynomial& p, int from, int to) {
  for (int j = from; j < to; ++j) {
    if (!(p.re(j) >= p.re(j + 1))) return false;
  }
  return true;
}

bool real_parts_nondecreasing(const Polynomial& p, int from, int to) {
  for (int j = from; j < to; ++j) {
    if (!(p.re(j) <= p.re(j + 1))) return false;
  }
  return true;
}

}  // namespace

const char* to_string(TheoremId id) {
  switch (id) {
    case TheoremId::EK_A: return "EK_A";
    case TheoremId::THM_B: return "THM_B";
    case TheoremId::THM_C: return "THM_C";
    case TheoremId::THM_D: return "THM_D";
    case TheoremId::THM_E: return "THM_E";
    case TheoremId::THM_F: return "THM_F";
    case TheoremId::THM_1: return "THM_1";
    case TheoremId::THM_2: return "THM_2";
    case TheoremId::COR_1: return "COR_1";
    case TheoremId::COR_2: return "COR_2";
    case TheoremId::COR_3: return "COR_3";
    case TheoremId::LEMMA: return "LEMMA";
  }
  return "?";
}

std::optional<TheoremId> theorem_from_string(const std::string& name) {
  for (TheoremId id : kAllTheorems) {
    if (name == to_string(id)) return id;
  }
  // Short CLI aliases.
  if (name == "A") return TheoremId::EK_A;
  if (name == "B") return TheoremId::THM_B;
  if (name == "C") return TheoremId::THM_C;
  if (name == "D") return TheoremId::THM_D;
  if (name == "E") return TheoremId::THM_E;
  if (name == "F") return TheoremId::THM_F;
  if (name == "T1") return TheoremId::THM_1;
  if (name == "T2") return TheoremId::THM_2;
  return std::nullopt;
}

bool check_enestrom_kakeya(const Polynomial& p) {
  const int n = p.degree();
  for (int j = 0; j <= n; ++j) {
    if (p.im(j) != 0.0) return false;
  }
  if (!(p.re(0) > 0.0)) return false;
  return real_parts_nondecreasing(p, 0, n);
}

bool check_arg_condition(const Polynomial& p, double alpha, double beta) {
  if (!(alpha >= 0.0 && alpha <= kPi / 2.0)) return false;
  if (!std::isfinite(beta)) return false;
  const int n = p.degree();
  double prev = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double m = std::abs(p[j]);
    if (!(m > 0.0)) return false;
    if (!(m >= prev)) return false;
    prev = m;
  }
  for (int j = 0; j <= n; ++j) {
    if (!(angular_distance(std::arg(p[j]), beta) <= alpha)) return false;
  }
  return true;
}

std::optional<std::pair<double, double>> find_arg_params(const Polynomial& p) {
  const int n = p.degree();
  double prev = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double m = std::abs(p[j]);
    if (!(m > 0.0) || !(m >= prev)) return std::nullopt;
    prev = m;
  }

  std::vector<double> args;
  args.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) args.push_back(arg_in_0_2pi(p[j]));
  std::sort(args.begin(), args.end());

  // The minimal covering arc is the complement of the widest gap between
  // consecutive sorted arguments. Ties pick the last gap, so e.g. arguments
  // {0, pi} resolve to the arc [0, pi] rather than [pi, 2pi].
  const std::size_t count = args.size();
  std::size_t widest = 0;
  double widest_gap = -1.0;
  for (std::size_t i = 0; i < count; ++i) {
    const double next = (i + 1 < count) ? args[i + 1] : args[0] + kTwoPi;
    const double gap = next - args[i];
    if (gap >= widest_gap) {
      widest_gap = gap;
      widest = i;
    }
  }
  const double start = (widest + 1 < count) ? args[widest + 1] : args[0];
  double half_width = (kTwoPi - widest_gap) / 2.0;
  if (half_width < 0.0) half_width = 0.0;
  double beta = start + half_width;
  if (beta >= kTwoPi) beta -= kTwoPi;

  // Re-derive the half-width with the checker's own distance measure; the
  // arc arithmetic above is off by ~ulp(2*pi), which the exact-comparison
  // checker would reject.
  double alpha = 0.0;
  for (int j = 0; j <= n; ++j) {
    alpha = std::max(alpha, angular_distance(std::arg(p[j]), beta));
  }
  if (alpha > kPi / 2.0) return std::nullopt;
  if (!check_arg_condition(p, alpha, beta)) return std::nullopt;
  return std::make_pair(alpha, beta);
}

bool check_real_parts_positive_nondecreasing(const Polynomial& p) {
  if (!(p.re(0) > 0.0)) return false;
  return real_parts_nondecreasing(p, 0, p.degree());
}

bool check_t2_chain(const Polynomial& p, int lambda, double t, double s) {
  const int n = p.degree();
  if (lambda < 0 || lambda > n) return false;
  if (n == 0) return t == 0.0 && s == 0.0;

  // The two slack links are evaluated in subtracted form (equivalent in
  // exact arithmetic) so a slack computed as the exact difference always
  // passes.
  const bool top_ok = t <= p.re(n - 1) - p.re(n);
  const bool bottom_ok = s >= p.re(0) - p.re(1);

  if (lambda == 0) {
    return s == 0.0 && real_parts_nonincreasing(p, 0, n - 1) && top_ok;
  }
  if (lambda == n) {
    return t == 0.0 && real_parts_nondecreasing(p, 1, n) && bottom_ok;
  }
  return real_parts_nondecreasing(p, 1, lambda) &&
         real_parts_nonincreasing(p, lambda, n - 1) && bottom_ok && top_ok;
}

std::vector<Witness> find_t2_witnesses(const Polynomial& p) {
  std::vector<Witness> out;
  const int n = p.degree();
  if (p[0] == Complex(0.0, 0.0)) return out;
  if (n == 0) {
    out.push_back(Witness{TheoremId::THM_2, 0, 0.0, 0.0, {}, {}});
    return out;
  }

  const double a0 = p.re(0);
  const double a1 = p.re(1);
  const double atop = p.re(n - 1);
  const double an = p.re(n);
  const double slack_t = (an <= atop) ? 0.0 : atop - an;
  const double slack_s = (a0 <= a1) ? 0.0 : a0 - a1;

  for (int lambda = 0; lambda <= n; ++lambda) {
    double t = 0.0;
    double s = 0.0;
    if (lambda == 0) {
      if (!real_parts_nonincreasing(p, 0, n - 1)) continue;
      t = slack_t;
    } else if (lambda == n) {
      if (!real_parts_nondecreasing(p, 1, n)) continue;
      s = slack_s;
    } else {
      if (!real_parts_nondecreasing(p, 1, lambda) ||
          !real_parts_nonincreasing(p, lambda, n - 1)) {
        continue;
      }
      t = slack_t;
      s = slack_s;
    }
    out.push_back(Witness{TheoremId::THM_2, lambda, t, s, {}, {}});
  }
  return out;
}

bool validate(const Witness& w, const Polynomial& p) {
  const int n = p.degree();
  const bool a0_nonzero = p[0] != Complex(0.0, 0.0);
  switch (w.theorem) {
    case TheoremId::EK_A:
    case TheoremId::THM_B:
      return check_enestrom_kakeya(p);
    case TheoremId::THM_C:
    case TheoremId::THM_E:
      return w.alpha && w.beta && check_arg_condition(p, *w.alpha, *w.beta);
    case TheoremId::THM_D:
    case TheoremId::THM_F:
      return check_real_parts_positive_nondecreasing(p);
    case TheoremId::THM_1:
      return a0_nonzero && w.lambda && w.s.value_or(0.0) == 0.0 &&
             check_t2_chain(p, *w.lambda, w.t.value_or(0.0), 0.0);
    case TheoremId::THM_2:
      return a0_nonzero && w.lambda &&
             check_t2_chain(p, *w.lambda, w.t.value_or(0.0),
                            w.s.value_or(0.0));
    case TheoremId::COR_1:
      return a0_nonzero && w.lambda && check_t2_chain(p, *w.lambda, 0.0, 0.0);
    case TheoremId::COR_2:
      return a0_nonzero && check_t2_chain(p, 0, 0.0, 0.0);
    case TheoremId::COR_3:
      return a0_nonzero && check_t2_chain(p, n, 0.0, 0.0);
    case TheoremId::LEMMA:
      return a0_nonzero;
  }
  return false;
}

namespace {

std::string ek_reason(const Polynomial& p) {
  const int n = p.degree();
  for (int j = 0; j <= n; ++j) {
    if (p.im(j) != 0.0) {
      return "a_" + std::to_string(j) + " is not real";
    }
  }
  if (!(p.re(0) > 0.0)) return "a_0 not positive";
  for (int j = 0; j < n; ++j) {
    if (!(p.re(j) <= p.re(j + 1))) {
      return "a_" + std::to_string(j) + " > a_" + std::to_string(j + 1);
    }
  }
  return "hypothesis fails";
}

std::string arg_reason(const Polynomial& p) {
  const int n = p.degree();
  double prev = 0.0;
  for (int j = 0; j <= n; ++j) {
    const double m = std::abs(p[j]);
    if (!(m > 0.0)) {
      return "a_" + std::to_string(j) + " = 0 (argument undefined)";
    }
    if (!(m >= prev)) {
      return "|a_" + std::to_string(j - 1) + "| > |a_" + std::to_string(j) +
             "|";
    }
    prev = m;
  }
  return "coefficient arguments span more than a half-plane";
}

std::string df_reason(const Polynomial& p) {
  if (!(p.re(0) > 0.0)) return "Re(a_0) not positive";
  const int n = p.degree();
  for (int j = 0; j < n; ++j) {
    if (!(p.re(j) <= p.re(j + 1))) {
      return "Re(a_" + std::to_string(j) + ") > Re(a_" + std::to_string(j + 1) +
             ")";
    }
  }
  return "hypothesis fails";
}

}  // namespace

HypothesisReport full_report(const Polynomial& p) {
  HypothesisReport r;
  const int n = p.degree();

  const bool ek = check_enestrom_kakeya(p);
  if (ek) {
    r.witnesses.push_back(Witness{TheoremId::EK_A, {}, {}, {}, {}, {}});
    r.witnesses.push_back(Witness{TheoremId::THM_B, {}, {}, {}, {}, {}});
  } else {
    const std::string why = ek_reason(p);
    r.rejections.emplace_back(TheoremId::EK_A, why);
    r.rejections.emplace_back(TheoremId::THM_B, why);
  }

  if (auto ab = find_arg_params(p)) {
    r.witnesses.push_back(
        Witness{TheoremId::THM_C, {}, {}, {}, ab->first, ab->second});
    r.witnesses.push_back(
        Witness{TheoremId::THM_E, {}, {}, {}, ab->first, ab->second});
  } else {
    const std::string why = arg_reason(p);
    r.rejections.emplace_back(TheoremId::THM_C, why);
    r.rejections.emplace_back(TheoremId::THM_E, why);
  }

  if (check_real_parts_positive_nondecreasing(p)) {
    r.witnesses.push_back(Witness{TheoremId::THM_D, {}, {}, {}, {}, {}});
    r.witnesses.push_back(Witness{TheoremId::THM_F, {}, {}, {}, {}, {}});
  } else {
    const std::string why = df_reason(p);
    r.rejections.emplace_back(TheoremId::THM_D, why);
    r.rejections.emplace_back(TheoremId::THM_F, why);
  }

  const std::vector<Witness> t2 = find_t2_witnesses(p);
  const bool a0_zero = p[0] == Complex(0.0, 0.0);
  const std::string t2_why =
      a0_zero ? "a_0 = 0"
              : "no lambda gives a unimodal real-part chain";

  bool any_t1 = false;
  bool any_cor1 = false;
  bool any_cor2 = false;
  bool any_cor3 = false;
  for (const Witness& w : t2) {
    if (w.s.value_or(0.0) == 0.0) {
      r.witnesses.push_back(Witness{TheoremId::THM_1, w.lambda, w.t, {}, {}, {}});
      any_t1 = true;
      if (w.t.value_or(0.0) == 0.0) {
        r.witnesses.push_back(
            Witness{TheoremId::COR_1, w.lambda, {}, {}, {}, {}});
        any_cor1 = true;
        if (*w.lambda == 0) any_cor2 = true;
        if (*w.lambda == n) any_cor3 = true;
      }
    }
  }
  if (any_cor2) {
    r.witnesses.push_back(Witness{TheoremId::COR_2, 0, {}, {}, {}, {}});
  }
  if (any_cor3) {
    r.witnesses.push_back(Witness{TheoremId::COR_3, n, {}, {}, {}, {}});
  }
  for (const Witness& w : t2) r.witnesses.push_back(w);

  if (!any_t1) {
    r.rejections.emplace_back(
        TheoremId::THM_1,
        a0_zero ? t2_why : "no lambda admits the chain with s = 0");
  }
  if (t2.empty()) r.rejections.emplace_back(TheoremId::THM_2, t2_why);
  if (!any_cor1) {
    r.rejections.emplace_back(
        TheoremId::COR_1,
        a0_zero ? t2_why : "no lambda admits the chain with t = s = 0");
  }
  if (!any_cor2) {
    r.rejections.emplace_back(
        TheoremId::COR_2,
        a0_zero ? t2_why : "real parts not nonincreasing");
  }
  if (!any_cor3) {
    r.rejections.emplace_back(
        TheoremId::COR_3,
        a0_zero ? t2_why : "real parts not nondecreasing");
  }

  if (!a0_zero) {
    r.witnesses.push_back(Witness{TheoremId::LEMMA, {}, {}, {}, {}, {}});
  } else {
    r.rejections.emplace_back(TheoremId::LEMMA, "a_0 = 0 (value at center)");
  }

  return r;
}

}  // namespace polyzero
