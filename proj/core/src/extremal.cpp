#include "pext/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pext {

namespace {

std::string nt(int n, int t) { return "n=" + std::to_string(n) + ", t=" + std::to_string(t); }

void check_nt(int n, int t, const BellTable& table, const char* what) {
  if (t < 1 || t > n) throw ArgumentError(std::string(what) + ": need 1 <= t <= n (" + nt(n, t) + ")");
  if (n > table.capacity()) throw CapacityError(std::string(what) + ": n exceeds bell table capacity");
}

void check_ell(int n, int t, int ell, const BellTable& table, const char* what) {
  check_nt(n, t, table, what);
  if (ell < t || ell > n) throw ArgumentError(std::string(what) + ": need t <= l <= n (l=" + std::to_string(ell) + ")");
  if ((ell - t) % 2 != 0) throw ArgumentError(std::string(what) + ": l and t must have the same parity");
}

/// sum_{j=0}^{m} C(m, j) B~(top - j)
BigCount binomial_reduced_sum(int m, long top, const BellTable& table) {
  BigCount sum = 0;
  for (int j = 0; j <= m; ++j) sum += table.binomial(m, j) * table.reduced_or_zero(top - j);
  return sum;
}

int sign_of(const ExactRatio& q) { return sgn(q); }

} // namespace

GammaSums gamma_sums(int n, int t, int ell, const BellTable& table) {
  check_ell(n, t, ell, table, "gamma");
  const long half = (ell + t) / 2;
  return {binomial_reduced_sum(n - ell + 1, n - half + 1, table), binomial_reduced_sum(n - ell, n - half, table)};
}

ExactRatio gamma(int n, int t, int ell, const BellTable& table) {
  GammaSums sums = gamma_sums(n, t, ell, table);
  if (sums.denominator == 0)
    throw DegenerateInputError("gamma: denominator vanishes (" + nt(n, t) + ", l=" + std::to_string(ell) + ")");
  ExactRatio out(sums.numerator, sums.denominator);
  out.canonicalize();
  return out;
}

GammaSeriesCheck gamma_series_check(int n, int t, int ell, int terms, const BellTable& table) {
  if (terms < 1) throw ArgumentError("gamma_series_check: terms must be at least 1");
  const GammaSums sums = gamma_sums(n, t, ell, table);
  const int a = (ell - t) / 2;
  const int k = n - ell;

  // (1/e) sum_{i>=0} (i-1)^a i^k / i!: i = 0 gives (-1)^a [k == 0], i = 1 gives [a == 0].
  long double series = 0;
  if (k == 0) series += (a % 2 == 0) ? 1.0L : -1.0L;
  if (a == 0) series += 1.0L;
  long double displayed = 0;
  for (int i = 2; i <= terms; ++i) {
    const long double log_fact = std::lgamma(static_cast<long double>(i + 1));
    series += std::exp(a * std::log(static_cast<long double>(i - 1)) + k * std::log(static_cast<long double>(i)) - log_fact);
    if (i == 2) {
      if (k == 0) displayed += std::exp(-log_fact);
    } else {
      displayed += std::exp(a * std::log(static_cast<long double>(i - 1)) + k * std::log(static_cast<long double>(i - 2)) - log_fact);
    }
  }
  const long double e = std::exp(1.0L);

  GammaSeriesCheck out;
  out.exact = sums.denominator.get_d();
  out.series = static_cast<double>(series / e);
  out.displayed_series = static_cast<double>(displayed / e);
  const double scale = std::max(std::abs(out.exact), 1.0);
  out.matches = std::abs(out.series - out.exact) <= 1e-6 * scale;
  return out;
}

bool ell_condition(int n, int t, int ell, const BellTable& table) {
  check_ell(n, t, ell, table, "ell_condition");
  if (ell == t) return true;
  const GammaSums sums = gamma_sums(n, t, ell, table);
  return BigCount(ell - t) * sums.numerator <= BigCount(2 * (ell - 1)) * sums.denominator;
}

std::optional<ExactRatio> ell_condition_value(int n, int t, int ell, const BellTable& table) {
  check_ell(n, t, ell, table, "ell_condition_value");
  if (ell == t) return ExactRatio(0);
  const GammaSums sums = gamma_sums(n, t, ell, table);
  if (sums.denominator == 0) return std::nullopt;
  ExactRatio out(BigCount(ell - t) * sums.numerator, BigCount(2 * (ell - 1)) * sums.denominator);
  out.canonicalize();
  return out;
}

int select_ell(int n, int t, const BellTable& table) {
  check_nt(n, t, table, "select_ell");
  int best = t;
  for (int ell = t; ell <= n; ell += 2)
    if (ell_condition(n, t, ell, table)) best = ell;
  return best;
}

BigCount frankl_size(int n, int t, int r, const BellTable& table) {
  if (t < 1 || r < 0 || t + 2 * r > n)
    throw ArgumentError("frankl_size: need t >= 1, r >= 0, t + 2r <= n (" + nt(n, t) + ", r=" + std::to_string(r) + ")");
  if (n > table.capacity()) throw CapacityError("frankl_size: n exceeds bell table capacity");
  const int ell = t + 2 * r;
  BigCount total = 0;
  for (int i = t + r; i <= ell; ++i) total += table.binomial(ell, i) * binomial_reduced_sum(n - ell, n - i, table);
  return total;
}

const char* to_string(Regime regime) {
  switch (regime) {
  case Regime::NontrivialEqualsM: return "nontrivial-equals-M";
  case Regime::FromHFamilies: return "nontrivial-from-H-families";
  }
  return "unknown";
}

ExtremalReport m_value(int n, int t, const BellTable& table) {
  check_nt(n, t, table, "m_value");
  ExtremalReport report;
  report.n = n;
  report.t = t;
  for (int r = 0; t + 2 * r <= n; ++r) report.candidates.push_back({r, t + 2 * r, frankl_size(n, t, r, table)});

  report.m_value = report.candidates.front().size;
  for (const auto& c : report.candidates) report.m_value = std::max(report.m_value, c.size);
  for (const auto& c : report.candidates)
    if (c.size == report.m_value) report.maximizing_r.push_back(c.r);

  report.selected_ell = select_ell(n, t, table);
  const auto& chosen = report.candidates[static_cast<std::size_t>((report.selected_ell - t) / 2)];
  if (chosen.size != report.m_value) {
    report.diagnostics.push_back(
        {"theorem-mismatch", "select_ell",
         "largest l satisfying the l-condition is " + std::to_string(report.selected_ell) + " with candidate size " +
             to_decimal(chosen.size) + ", but the maximum over r is " + to_decimal(report.m_value) + " (" + nt(n, t) + ")"});
  }

  if (t == 1) {
    report.diagnostics.push_back({"heuristic", "t=1", "selection rule is derived for t >= 2; t = 1 cross-checked against B(n-1)"});
    if (report.m_value != table.bell(n - 1))
      report.diagnostics.push_back({"theorem-mismatch", "M(n,1)=B(n-1)",
                                    "maximum " + to_decimal(report.m_value) + " differs from B(n-1) = " +
                                        to_decimal(table.bell(n - 1))});
  }
  return report;
}

SetFamily h_family(int t, int i, int n) {
  if (t < 1 || i < 1 || t + i > n || n > kMaxGround)
    throw ArgumentError("h_family: need t >= 1, i >= 1, t + i <= n <= 64 (t=" + std::to_string(t) +
                        ", i=" + std::to_string(i) + ", n=" + std::to_string(n) + ")");
  const SubsetMask head = SubsetMask::range(1, t);
  const SubsetMask all = SubsetMask::range(1, t + i);
  std::vector<SubsetMask> sets;
  for (int x = t + 1; x <= t + i; ++x) sets.push_back(head | SubsetMask::single(x));
  for (int k = 1; k <= t; ++k) sets.push_back(all - SubsetMask::single(k));
  return SetFamily(n, std::move(sets));
}

BigCount s_value(int n, int t, int i, const BellTable& table) {
  if (t < 1 || i < 2 || i > n - t - 1)
    throw ArgumentError("s_value: need 2 <= i <= n-t-1 (" + nt(n, t) + ", i=" + std::to_string(i) + ")");
  return generated_size(h_family(t, i, n), table);
}

BigCount s_closed_form_factorial(int n, int t, int i, const BellTable& table) {
  const int m = n - t - i;
  BigCount factorial;
  mpz_fac_ui(factorial.get_mpz_t(), static_cast<unsigned long>(std::max(n - i, 0)));
  BigCount plain_sum = 0;
  for (int j = 0; j <= m; ++j) plain_sum += table.reduced_or_zero(n - t - i - j + 1);
  return factorial - binomial_reduced_sum(m, n - t, table) + BigCount(t) * plain_sum;
}

BigCount s2_asymptotic_form(int n, int t, const BellTable& table) {
  return table.bell(n - t) - table.reduced_or_zero(n - t) - table.reduced_or_zero(n - t - 1) + BigCount(t);
}

BigCount s_last_asymptotic_form(int n, int t, const BellTable& table) {
  return table.bell(n - t) - binomial_reduced_sum(n - t - 2, n - t, table) +
         BigCount(t) * binomial_reduced_sum(n - t - 2, n - t - 1, table);
}

BigCount m_tilde_asymptotic_form(int n, int t, const BellTable& table) {
  return table.bell(n - t) - table.reduced_or_zero(n - 1) - table.reduced_or_zero(n - t - 1) + BigCount(t);
}

std::vector<int> s_sequence_convexity_violations(const std::vector<std::pair<int, BigCount>>& s) {
  std::vector<int> out;
  for (std::size_t k = 0; k + 2 < s.size(); ++k)
    if (s[k].second < s[k + 1].second && !(s[k + 1].second < s[k + 2].second)) out.push_back(s[k].first);
  return out;
}

namespace {

void add_closed_form_check(ExtremalReport& report, const std::string& subject, const BigCount& closed_form,
                           const BigCount& computed, const std::string& computed_name) {
  if (closed_form == computed) return;
  std::string message = "closed form gives " + to_decimal(closed_form) + ", " + computed_name + " is " +
                        to_decimal(computed) + " (" + nt(report.n, report.t) + ")";
  for (const auto& [i, s] : report.s_sequence)
    if (s == closed_form) {
      message += "; it equals upset S_" + std::to_string(i);
      break;
    }
  report.diagnostics.push_back({"closed-form-mismatch", subject, message});
}

} // namespace

ExtremalReport m_tilde_report(int n, int t, const BellTable& table) {
  ExtremalReport report = m_value(n, t, table);
  const bool has_h_candidates = n >= t + 3 && n <= kMaxGround;

  if (has_h_candidates) {
    for (int i = 2; i <= n - t - 1; ++i) report.s_sequence.emplace_back(i, s_value(n, t, i, table));

    for (int i : s_sequence_convexity_violations(report.s_sequence))
      report.diagnostics.push_back({"theorem-mismatch", "s-sequence-convexity",
                                    "S_" + std::to_string(i) + " < S_" + std::to_string(i + 1) + " but S_" +
                                        std::to_string(i + 1) + " >= S_" + std::to_string(i + 2) + " (" + nt(n, t) + ")"});

    const BigCount& s2 = report.s_sequence.front().second;
    add_closed_form_check(report, "s2-factorial-form", s_closed_form_factorial(n, t, 2, table), s2, "upset S_2");
    add_closed_form_check(report, "s2-asymptotic-form", s2_asymptotic_form(n, t, table), s2, "upset S_2");
    add_closed_form_check(report, "s-last-asymptotic-form", s_last_asymptotic_form(n, t, table),
                          report.s_sequence.back().second, "upset S_" + std::to_string(n - t - 1));
    if (t + 2 <= n && s2 != frankl_size(n, t, 1, table))
      report.diagnostics.push_back({"theorem-mismatch", "s2-equals-frankl-r1",
                                    "S_2 = " + to_decimal(s2) + " differs from the r=1 candidate " +
                                        to_decimal(frankl_size(n, t, 1, table))});
  }

  if (report.selected_ell > t) {
    report.regime = Regime::NontrivialEqualsM;
    report.m_tilde = report.m_value;
  } else {
    if (!has_h_candidates)
      throw EmptyRegimeError("m_tilde: l-selection gives l = t and no H_i family exists for " + nt(n, t) +
                             " (need t + 3 <= n <= 64)");
    report.regime = Regime::FromHFamilies;
    BigCount best = report.s_sequence.front().second;
    for (const auto& [i, s] : report.s_sequence) best = std::max(best, s);
    report.m_tilde = best;
    if (report.s_sequence.front().second != best && report.s_sequence.back().second != best)
      report.diagnostics.push_back({"interior-maximum", "s-sequence",
                                    "max S_i = " + to_decimal(best) + " is attained only strictly inside (2, " +
                                        std::to_string(n - t - 1) + ")"});
  }

  if (has_h_candidates)
    add_closed_form_check(report, "m-tilde-asymptotic-form", m_tilde_asymptotic_form(n, t, table), *report.m_tilde,
                          "computed M~");
  if (*report.m_tilde > report.m_value)
    report.diagnostics.push_back({"theorem-mismatch", "m-tilde-bound", "M~ exceeds M"});
  return report;
}

BigCount m_tilde(int n, int t, const BellTable& table) { return *m_tilde_report(n, t, table).m_tilde; }

ExactRatio phi(int n, int t, int ell, const BellTable& table) {
  const ExactRatio g = gamma(n, t, ell, table);
  if (g == 2)
    throw PoleError("phi: gamma(l) = 2 (" + nt(n, t) + ", l=" + std::to_string(ell) + ")");
  ExactRatio out = ExactRatio(t - ell) + ExactRatio(2 * (t - 1)) / (g - 2);
  out.canonicalize();
  return out;
}

PhiScan sign_change_scan(int n, int t, const BellTable& table) {
  if (t < 2) throw ArgumentError("sign_change_scan: requires t >= 2");
  check_nt(n, t, table, "sign_change_scan");
  PhiScan scan;
  scan.n = n;
  scan.t = t;

  for (int ell = t; ell <= n; ell += 2) {
    PhiPoint point;
    point.ell = ell;
    const GammaSums sums = gamma_sums(n, t, ell, table);
    if (sums.denominator == 0) {
      point.status = PhiPoint::Status::InfiniteGamma;
      point.value = ExactRatio(t - ell);
      scan.diagnostics.push_back({"infinite-gamma", "phi",
                                  "gamma denominator vanishes at l=" + std::to_string(ell) + "; using limit t - l"});
    } else {
      try {
        point.value = phi(n, t, ell, table);
      } catch (const PoleError& e) {
        point.status = PhiPoint::Status::Pole;
        scan.diagnostics.push_back({"pole", "phi", e.what()});
      }
    }
    if (ell + 2 <= n) {
      const GammaSums next = gamma_sums(n, t, ell + 2, table);
      if (next.denominator != 0) {
        // (l+1)/((l-t)/2+1) > num/den  <=>  2(l+1) den > (l-t+2) num
        point.growth_condition = BigCount(2 * (ell + 1)) * next.denominator > BigCount(ell - t + 2) * next.numerator;
      }
    }
    scan.points.push_back(std::move(point));
  }

  int previous = 0;
  for (const auto& point : scan.points) {
    if (!point.value) continue;
    const int s = sign_of(*point.value);
    scan.signs.push_back(s);
    if (s == 0) continue;
    if (previous != 0 && s != previous) {
      ++scan.sign_changes;
      if (!(previous > 0 && s < 0)) scan.single_sign_change = false;
    }
    previous = s;
  }
  if (scan.sign_changes > 1) scan.single_sign_change = false;
  if (!scan.single_sign_change)
    scan.diagnostics.push_back({"theorem-mismatch", "phi-sign-change",
                                std::to_string(scan.sign_changes) + " sign changes of phi (" + nt(n, t) + ")"});

  for (std::size_t k = 1; k + 1 < scan.points.size(); ++k) {
    const auto& left = scan.points[k - 1].value;
    const auto& mid = scan.points[k].value;
    const auto& right = scan.points[k + 1].value;
    if (!left || !mid || !right) continue;
    if (*left + *right > 2 * *mid) scan.concavity_violations.push_back(scan.points[k].ell);
  }
  if (!scan.concavity_violations.empty())
    scan.diagnostics.push_back({"theorem-mismatch", "phi-concavity",
                                std::to_string(scan.concavity_violations.size()) +
                                    " interior points with phi(l-2) + phi(l+2) > 2 phi(l) (" + nt(n, t) + ")"});
  return scan;
}

int stable_regime_threshold(int t, int n_max, const BellTable& table) {
  check_nt(n_max, t, table, "stable_regime_threshold");
  int threshold = n_max + 1;
  for (int n = n_max; n >= t; --n) {
    if (select_ell(n, t, table) != t || m_value(n, t, table).m_value != table.bell(n - t)) break;
    threshold = n;
  }
  return threshold;
}

} // namespace pext
