#pragma once

#include "pext/bell.hpp"
#include "pext/diagnostic.hpp"
#include "pext/setfam.hpp"
#include "pext/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace pext {

/// Numerator and denominator sums defining gamma(l):
///   numerator   = sum_{i=0}^{n-l+1} B~(n-(l+t)/2+1-i) C(n-l+1, i)
///   denominator = sum_{i=0}^{n-l}   B~(n-(l+t)/2-i)   C(n-l, i)
struct GammaSums {
  BigCount numerator;
  BigCount denominator;
};

/// Requires 1 <= t <= l <= n and l = t (mod 2).
GammaSums gamma_sums(int n, int t, int ell, const BellTable& table);

/// gamma(l) as an exact ratio; DegenerateInputError when the denominator vanishes.
ExactRatio gamma(int n, int t, int ell, const BellTable& table);

struct GammaSeriesCheck {
  double exact = 0;            ///< the gamma denominator, exactly summed
  double series = 0;           ///< (1/e) sum_{i=0}^{terms} (i-1)^{(l-t)/2} i^{n-l} / i!
  double displayed_series = 0; ///< (1/e) sum_{i=2}^{terms} (i-1)^{(l-t)/2} (i-2)^{n-l} / i!
  bool matches = false;        ///< series within relative 1e-6 of exact
};

/// Cross-checks the gamma denominator against its Dobinski-type series. The
/// second series form is evaluated for reference only; it does not converge to
/// the denominator.
GammaSeriesCheck gamma_series_check(int n, int t, int ell, int terms, const BellTable& table);

/// ((l-t) / (2(l-1))) gamma(l) <= 1, decided exactly by cross-multiplication.
/// l = t always qualifies; a vanishing gamma denominator means gamma = +inf.
bool ell_condition(int n, int t, int ell, const BellTable& table);

/// The left side of ell_condition, or nullopt when gamma is infinite.
std::optional<ExactRatio> ell_condition_value(int n, int t, int ell, const BellTable& table);

/// Largest l = t + 2r <= n satisfying ell_condition.
int select_ell(int n, int t, const BellTable& table);

/// |{p in Pi(n) : |[t+2r] & f(p)| >= t+r}|
/// = sum_{i=t+r}^{t+2r} C(t+2r, i) sum_{j=0}^{n-t-2r} C(n-t-2r, j) B~(n-i-j).
BigCount frankl_size(int n, int t, int r, const BellTable& table);

struct FranklCandidate {
  int r = 0;
  int ell = 0;
  BigCount size;
};

enum class Regime { NontrivialEqualsM, FromHFamilies };

const char* to_string(Regime regime);

struct ExtremalReport {
  int n = 0;
  int t = 0;
  std::vector<FranklCandidate> candidates;
  /// Every r attaining the maximum.
  std::vector<int> maximizing_r;
  /// l chosen by the largest-l selection rule.
  int selected_ell = 0;
  BigCount m_value;

  std::optional<Regime> regime;
  std::vector<std::pair<int, BigCount>> s_sequence;
  std::optional<BigCount> m_tilde;

  Diagnostics diagnostics;
};

/// M(n,t) as the maximum Frankl-type candidate over r in [0, (n-t)/2]. Records a
/// theorem-mismatch diagnostic when the candidate at select_ell is not a maximizer;
/// t = 1 is flagged heuristic and checked against B(n-1).
ExtremalReport m_value(int n, int t, const BellTable& table);

/// H_i = {H in C([t+i], t+1) : [t] in H} u {H in C([t+i], t+i-1) : [t+1, t+i] in H},
/// as subsets of [n]. Requires i >= 1 and t + i <= n <= 64.
SetFamily h_family(int t, int i, int n);

/// S_i = |U(H_i)|, computed from the upset. Requires 2 <= i <= n-t-1.
BigCount s_value(int n, int t, int i, const BellTable& table);

/// Closed forms for S_i and the nontrivial maximum as printed in the source
/// derivation. They disagree with the upset computation and are only reported
/// as diagnostics.
BigCount s_closed_form_factorial(int n, int t, int i, const BellTable& table);
BigCount s2_asymptotic_form(int n, int t, const BellTable& table);
BigCount s_last_asymptotic_form(int n, int t, const BellTable& table);
BigCount m_tilde_asymptotic_form(int n, int t, const BellTable& table);

/// Full report: m_value plus the nontrivial maximum, its regime and the
/// S-sequence over i in [2, n-t-1]. Throws EmptyRegimeError when select_ell == t
/// and no H_i candidate exists (n < t+3).
ExtremalReport m_tilde_report(int n, int t, const BellTable& table);

/// M~(n,t): M(n,t) when select_ell > t, else max_i S_i.
BigCount m_tilde(int n, int t, const BellTable& table);

/// phi(l) = t - l + 2(t-1) / (gamma(l) - 2). PoleError when gamma(l) == 2.
ExactRatio phi(int n, int t, int ell, const BellTable& table);

struct PhiPoint {
  enum class Status { Finite, Pole, InfiniteGamma };
  int ell = 0;
  Status status = Status::Finite;
  /// phi(l); for InfiniteGamma the limit t - l.
  std::optional<ExactRatio> value;
  /// (l+1)/((l-t)/2+1) > gamma(l+2), when l+2 <= n and gamma(l+2) is finite.
  std::optional<bool> growth_condition;
};

struct PhiScan {
  int n = 0;
  int t = 0;
  std::vector<PhiPoint> points;
  /// Signs (+1, 0, -1) of the points with a value.
  std::vector<int> signs;
  int sign_changes = 0;
  /// At most one change, and it goes from + to -.
  bool single_sign_change = true;
  /// Interior l where phi(l-2) + phi(l+2) > 2 phi(l).
  std::vector<int> concavity_violations;
  Diagnostics diagnostics;

  bool concave() const { return concavity_violations.empty(); }
};

/// Evaluates phi at every l = t + 2r <= n. Requires t >= 2.
PhiScan sign_change_scan(int n, int t, const BellTable& table);

/// Smallest n* in [t, n_max] such that for every n in [n*, n_max]
/// select_ell(n,t) == t and M(n,t) == B(n-t).
int stable_regime_threshold(int t, int n_max, const BellTable& table);

/// S_i < S_{i+1} implies S_{i+1} < S_{i+2}; returns the offending i values.
std::vector<int> s_sequence_convexity_violations(const std::vector<std::pair<int, BigCount>>& s_sequence);

} // namespace pext
