// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.

#include "support.hpp"

#include "pext/bell.hpp"
#include "pext/extremal.hpp"
#include "pext/oracle.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

/// Runs one criterion; a run slower than `limit_s` fails regardless of outcome.
bool criterion(int number, double limit_s, const std::function<Verdict()>& body) {
  const auto start = Clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& e) {
    v = {false, std::string("exception: ") + e.what()};
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (seconds > limit_s) {
    v.pass = false;
    v.detail += "; exceeded time limit";
  }
  std::printf("%s criterion %d: %s [%.2fs, limit %.0fs]\n", v.pass ? "PASS" : "FAIL", number, v.detail.c_str(),
              seconds, limit_s);
  std::fflush(stdout);
  return v.pass;
}

std::string nt(int n, int t) { return "(" + std::to_string(n) + "," + std::to_string(t) + ")"; }

const pext::BellTable& table() {
  static const pext::BellTable t(pext::BellTable::kDefaultCapacity);
  return t;
}

Verdict bell_ground_truth() {
  int checked = 0;
  std::string bad;
  for (int n = 0; n <= 10; ++n) {
    long all = 0, singleton_free = 0;
    for (const auto& p : brute::all_partitions(n)) {
      ++all;
      if (brute::fixed_points(p).empty()) ++singleton_free;
    }
    checked += 2;
    if (table().bell(n) != all) bad += " B(" + std::to_string(n) + ")";
    if (table().bell_reduced(n) != singleton_free) bad += " B~(" + std::to_string(n) + ")";
  }
  return {bad.empty(), std::to_string(checked) + " values against enumeration for n <= 10" +
                           (bad.empty() ? "" : "; mismatches:" + bad)};
}

Verdict formula_count_equivalence() {
  int checked = 0;
  std::string bad;
  for (int n = 1; n <= 9; ++n)
    for (int t = 1; t <= n; ++t)
      for (int r = 0; t + 2 * r <= n; ++r) {
        ++checked;
        if (pext::frankl_size(n, t, r, table()) != pext::count_frankl_direct(n, t, r))
          bad += " " + nt(n, t) + "r=" + std::to_string(r);
      }
  return {bad.empty(), std::to_string(checked) + " (n,t,r) triples, exact equality" +
                           (bad.empty() ? "" : "; mismatches:" + bad)};
}

Verdict selection_rule_attains_maximum() {
  int checked = 0;
  std::string bad;
  for (int n = 2; n <= 30; ++n)
    for (int t = 2; t <= n; ++t) {
      ++checked;
      const int ell = pext::select_ell(n, t, table());
      const pext::BigCount at_ell = pext::frankl_size(n, t, (ell - t) / 2, table());
      const pext::BigCount best = pext::m_value(n, t, table()).m_value;
      if (at_ell != best)
        bad += " " + nt(n, t) + ": l=" + std::to_string(ell) + " gives " + pext::to_decimal(at_ell) + " < max " +
               pext::to_decimal(best);
    }
  return {bad.empty(),
          std::to_string(checked) + " pairs n <= 30, 2 <= t <= n" + (bad.empty() ? "" : "; mismatches:" + bad)};
}

Verdict oracle_agreement() {
  pext::SearchBudget budget;
  budget.wall_limit = std::chrono::milliseconds(60'000);
  int checked = 0;
  std::string bad;
  for (int n = 1; n <= 6; ++n)
    for (int t = 1; t <= std::min(n, 3); ++t) {
      ++checked;
      const auto result = pext::max_t_intersecting(n, t, budget, false);
      const pext::BigCount formula = pext::m_value(n, t, table()).m_value;
      if (result.budget.outcome != pext::SearchBudget::Outcome::Exact)
        bad += " " + nt(n, t) + " budget exhausted";
      else if (result.maximum != formula)
        bad += " " + nt(n, t) + " clique " + pext::to_decimal(result.maximum) + " vs " + pext::to_decimal(formula);
      if (t == 1 && result.maximum != table().bell(n - 1)) bad += " M" + nt(n, 1) + " != B(n-1)";
    }
  std::string thresholds;
  for (int t = 2; t <= 4; ++t) {
    const int from = pext::stable_regime_threshold(t, 40, table());
    thresholds += " t=" + std::to_string(t) + ":n>=" + std::to_string(from);
    if (from > 40) bad += " no stable regime for t=" + std::to_string(t);
    for (int n = from; n <= 40; ++n)
      if (pext::m_value(n, t, table()).m_value != table().bell(n - t)) bad += " M" + nt(n, t) + " != B(n-t)";
  }
  return {bad.empty(), std::to_string(checked) + " clique searches n <= 6, t in {1,2,3}; M(n,1)=B(n-1); M(n,t)=B(n-t) for" +
                           thresholds + " up to 40" + (bad.empty() ? "" : "; mismatches:" + bad)};
}

Verdict nontrivial_regime() {
  pext::SearchBudget budget;
  budget.wall_limit = std::chrono::milliseconds(60'000);
  std::string bad, notes;
  for (int n = 2; n <= 6; ++n) {
    const auto result = pext::max_t_intersecting(n, 2, budget, true);
    if (result.budget.outcome != pext::SearchBudget::Outcome::Exact) {
      bad += " " + nt(n, 2) + " budget exhausted";
      continue;
    }
    try {
      const pext::BigCount formula = pext::m_tilde(n, 2, table());
      if (result.maximum != formula)
        bad += " " + nt(n, 2) + " clique " + pext::to_decimal(result.maximum) + " vs " + pext::to_decimal(formula);
    } catch (const pext::EmptyRegimeError&) {
      notes += " " + nt(n, 2);
    }
  }
  int families = 0;
  for (int n = 4; n <= 8; ++n)
    for (int t = 1; t + 3 <= n; ++t)
      for (int i = 2; i <= n - t - 1; ++i) {
        ++families;
        const auto family = pext::generated_family(pext::h_family(t, i, n));
        if (family.empty() || !pext::is_t_intersecting(family, t) || !pext::is_nontrivial(family, t))
          bad += " H_" + std::to_string(i) + nt(n, t);
      }
  return {bad.empty(), "nontrivial clique maximum = m_tilde for t=2, n in {5,6}; empty regime (no formula) at" + notes +
                           "; " + std::to_string(families) + " H_i families t-intersecting and nontrivial" +
                           (bad.empty() ? "" : "; failures:" + bad)};
}

Verdict log_supermodularity() {
  long checked = 0, failed = 0;
  std::string first;
  for (int n = 0; n <= 20; ++n)
    for (int a = 0; a <= n; ++a)
      for (int b = 0; b <= n; ++b)
        for (int d = 0; d <= std::min(a, b); ++d) {
          if (a + b - d > n) continue;
          ++checked;
          if (!pext::log_supermodular_check(table(), n, a, b, d) && failed++ == 0)
            first = "n=" + std::to_string(n) + " a=" + std::to_string(a) + " b=" + std::to_string(b) +
                    " delta=" + std::to_string(d);
        }
  return {failed == 0, std::to_string(checked) + " (n,a,b,delta) with n <= 20; " + std::to_string(failed) +
                           " violate B~(n-a)B~(n-b) <= B~(n-delta)B~(n-a-b+delta)" +
                           (failed ? " (first: " + first + ")" : "")};
}

Verdict compression_invariants() {
  std::mt19937_64 rng(0xacce55ULL);
  int fix_bad = 0, shift_bad = 0, shift_closed_bad = 0, compress_bad = 0;
  std::string first_shift;
  for (int trial = 0; trial < 200; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const int t = std::uniform_int_distribution<int>(1, n - 1)(rng);
    const pext::PartitionFamily family = testing_support::random_family(n, t, rng);
    const pext::PartitionFamily closed = pext::fix_closure(family);
    bool fix_ok = true, shift_ok = true, shift_closed_ok = true;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        const auto fixed = pext::fix_family_op(i, j, family);
        fix_ok &= fixed.size() == family.size() && pext::is_t_intersecting(fixed, t);
        if (i > j) continue;
        const auto shifted = pext::shift_family_op(i, j, family);
        const bool ok = shifted.size() == family.size() && pext::is_t_intersecting(shifted, t);
        if (!ok && shift_ok && shift_bad == 0)
          first_shift = "trial " + std::to_string(trial) + " n=" + std::to_string(n) + " t=" + std::to_string(t) +
                        " L(" + std::to_string(i) + "," + std::to_string(j) + ")";
        shift_ok &= ok;
        const auto shifted_closed = pext::shift_family_op(i, j, closed);
        shift_closed_ok &= shifted_closed.size() == closed.size() && pext::is_t_intersecting(shifted_closed, t);
      }
    fix_bad += !fix_ok;
    shift_bad += !shift_ok;
    shift_closed_bad += !shift_closed_ok;

    const auto out = pext::compress(family, t);
    bool meet = out.size() == family.size() && pext::is_t_intersecting(out, t);
    const auto members = out.sorted();
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a + 1; b < members.size(); ++b)
        meet &= (pext::fixed_points(members[a]) & pext::fixed_points(members[b])).size() >= t;
    compress_bad += !meet;
  }
  std::ostringstream detail;
  detail << "200 random families n <= 6: fixing broke " << fix_bad << ", shifting broke " << shift_bad
         << (shift_bad ? " (first: " + first_shift + ")" : "") << ", shifting after fixing closure broke "
         << shift_closed_bad << ", compress broke " << compress_bad;
  return {fix_bad == 0 && shift_bad == 0 && shift_closed_bad == 0 && compress_bad == 0, detail.str()};
}

Verdict structural_diagnostics() {
  int scans = 0, sign_bad = 0, concave_bad = 0, convex_bad = 0;
  std::string first_concave;
  for (int t = 2; t <= 4; ++t)
    for (int n = t; n <= 30; ++n) {
      ++scans;
      const auto scan = pext::sign_change_scan(n, t, table());
      sign_bad += !scan.single_sign_change;
      if (!scan.concave() && concave_bad++ == 0)
        first_concave = nt(n, t) + " at l=" + std::to_string(scan.concavity_violations.front());
      if (n >= t + 3) {
        std::vector<std::pair<int, pext::BigCount>> s;
        for (int i = 2; i <= n - t - 1; ++i) s.emplace_back(i, pext::s_value(n, t, i, table()));
        convex_bad += !pext::s_sequence_convexity_violations(s).empty();
      }
    }
  std::ostringstream detail;
  detail << scans << " phi scans t in {2,3,4}, n <= 30: " << sign_bad << " with more than one sign change, "
         << concave_bad << " not concave" << (concave_bad ? " (first: " + first_concave + ")" : "") << "; "
         << convex_bad << " S-sequences violate the growth implication";
  return {sign_bad == 0 && concave_bad == 0 && convex_bad == 0, detail.str()};
}

Verdict typo_ledger() {
  const auto report = pext::m_tilde_report(6, 2, table());
  const auto fired = [&](const std::string& subject) {
    for (const auto& d : report.diagnostics)
      if (d.kind == "closed-form-mismatch" && d.subject == subject) return true;
    return false;
  };
  const bool s2 = fired("s2-asymptotic-form");
  const bool final_form = fired("m-tilde-asymptotic-form");
  int checked = 0;
  std::string bad;
  for (int t = 2; t <= 4; ++t)
    for (int n = t + 3; n <= 30; ++n) {
      ++checked;
      if (pext::s_value(n, t, 2, table()) != pext::frankl_size(n, t, 1, table())) bad += " " + nt(n, t);
    }
  std::string detail = std::string("n=6,t=2: S_2 display diagnostic ") + (s2 ? "fired" : "missing") +
                       ", final display diagnostic " + (final_form ? "fired" : "missing") + "; S_2 = Frankl(r=1) at " +
                       std::to_string(checked) + " (n,t)" + (bad.empty() ? "" : "; mismatches:" + bad);
  return {s2 && final_form && bad.empty(), detail};
}

} // namespace

int main() {
  bool all = true;
  all &= criterion(1, 30, bell_ground_truth);
  all &= criterion(2, 300, formula_count_equivalence);
  all &= criterion(3, 60, selection_rule_attains_maximum);
  all &= criterion(4, 60.0 * 21, oracle_agreement);
  all &= criterion(5, 60.0 * 6, nontrivial_regime);
  all &= criterion(6, 10, log_supermodularity);
  all &= criterion(7, 120, compression_invariants);
  all &= criterion(8, 600, structural_diagnostics);
  all &= criterion(9, 60, typo_ledger);
  return all ? 0 : 1;
}
