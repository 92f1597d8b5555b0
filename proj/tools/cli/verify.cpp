#include "commands.hpp"

#include "pext/extremal.hpp"
#include "pext/partition.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace pext::cli {

namespace {

constexpr int kBellSuiteMax = kMaxEnumerationGround;
constexpr int kFormulaSuiteMax = kMaxDirectCountGround;
constexpr int kOperatorSuiteMax = 6;
constexpr int kOracleSuiteMax = 6;
constexpr std::size_t kFailuresShown = 20;

std::string nt(int n, int t) { return "n=" + std::to_string(n) + " t=" + std::to_string(t); }

class Recorder {
public:
  void check(bool ok, const std::string& instance) {
    ++checks_;
    if (ok) return;
    ++failed_;
    if (failures_.size() < kFailuresShown) failures_.push_back(instance);
  }
  void note(Diagnostic d) { diagnostics_.push_back(std::move(d)); }
  void note_all(const Diagnostics& ds, bool skip_heuristic = true) {
    for (const auto& d : ds)
      if (!skip_heuristic || d.kind != "heuristic") diagnostics_.push_back(d);
  }

  std::size_t checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  const std::vector<std::string>& failures() const { return failures_; }
  const Diagnostics& diagnostics() const { return diagnostics_; }

private:
  std::size_t checks_ = 0;
  std::size_t failed_ = 0;
  std::vector<std::string> failures_;
  Diagnostics diagnostics_;
};

int suite_bound(int n_max, int bound, bool clamp, const char* suite) {
  if (n_max <= bound) return n_max;
  if (clamp) return bound;
  throw CapacityError(std::string("verify ") + suite + ": nmax must be <= " + std::to_string(bound));
}

void bell_suite(int n_max, const BellTable& table, Recorder& rec) {
  for (int n = 0; n <= n_max; ++n) {
    std::uint64_t all = n == 0 ? 1 : 0;
    std::uint64_t singleton_free = n == 0 ? 1 : 0;
    if (n > 0)
      for_each_partition(n, [&](const SetPartition& p) {
        ++all;
        if (fixed_points(p).empty()) ++singleton_free;
      });
    const std::string at = "n=" + std::to_string(n);
    rec.check(table.bell(n) == BigCount(static_cast<unsigned long>(all)), "bell " + at);
    rec.check(table.bell_reduced(n) == BigCount(static_cast<unsigned long>(singleton_free)), "bell_reduced " + at);
    rec.check(verify_inversion(table, n), "inversion " + at);
    const double exact = table.bell_reduced(n).get_d();
    const double series = dobinski_reduced_approx(n, 120);
    rec.check(std::abs(series - exact) <= 1e-9 * std::max(exact, 1.0), "dobinski series " + at);
  }
}

void formula_suite(int n_max, const BellTable& table, Recorder& rec) {
  for (int n = 1; n <= n_max; ++n) {
    for (int t = 1; t <= n; ++t) {
      for (int r = 0; t + 2 * r <= n; ++r)
        rec.check(frankl_size(n, t, r, table) == count_frankl_direct(n, t, r),
                  "frankl_size " + nt(n, t) + " r=" + std::to_string(r));
      const ExtremalReport report = m_value(n, t, table);
      rec.note_all(report.diagnostics);
      if (t >= 2 && n >= t + 3) {
        rec.check(s_value(n, t, 2, table) == frankl_size(n, t, 1, table), "S_2 = Frankl r=1 " + nt(n, t));
        std::vector<std::pair<int, BigCount>> s;
        for (int i = 2; i <= n - t - 1; ++i) s.emplace_back(i, s_value(n, t, i, table));
        for (int i : s_sequence_convexity_violations(s))
          rec.note({"theorem-mismatch", "s-sequence", nt(n, t) + ": S_i < S_{i+1} but not S_{i+1} < S_{i+2} at i=" +
                                                          std::to_string(i)});
      }
    }
  }
}

/// Grows a t-intersecting family by scanning partitions in random order.
PartitionFamily random_t_intersecting(int n, int t, std::mt19937_64& rng) {
  std::vector<SetPartition> pool = enumerate_partitions(n);
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, pool.size())(rng);
  std::vector<SetPartition> chosen;
  for (const auto& p : pool) {
    if (chosen.size() >= target) break;
    if (std::all_of(chosen.begin(), chosen.end(), [&](const SetPartition& q) { return common_parts(p, q) >= t; }))
      chosen.push_back(p);
  }
  PartitionFamily family(n);
  for (const auto& p : chosen) family.insert(p);
  return family;
}

bool fixed_points_meet(const PartitionFamily& family, int t) {
  const std::vector<SetPartition> members = family.sorted();
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if ((fixed_points(members[a]) & fixed_points(members[b])).size() < t) return false;
  return true;
}

void operator_suite(int n_max, Recorder& rec) {
  std::mt19937_64 rng(20240607);
  std::size_t raw_shift_breaks = 0;
  std::string first_break;
  for (int n = 2; n <= n_max; ++n) {
    for (int t = 1; t < n; ++t) {
      for (int trial = 0; trial < 8; ++trial) {
        const PartitionFamily family = random_t_intersecting(n, t, rng);
        const std::string at = nt(n, t) + " trial=" + std::to_string(trial);
        const PartitionFamily closed = fix_closure(family);
        rec.check(closed.size() == family.size() && is_t_intersecting(closed, t) && fixed_points_meet(closed, t),
                  "fixing closure " + at);
        for (int i = 1; i <= n; ++i) {
          for (int j = 1; j <= n; ++j) {
            if (i == j) continue;
            const std::string pair = " i=" + std::to_string(i) + " j=" + std::to_string(j);
            const PartitionFamily fixed = fix_family_op(i, j, family);
            rec.check(fixed.size() == family.size() && is_t_intersecting(fixed, t), "fixing " + at + pair);
            if (i > j) continue;
            const PartitionFamily shifted = shift_family_op(i, j, family);
            rec.check(shifted.size() == family.size(), "shifting size " + at + pair);
            if (!is_t_intersecting(shifted, t) && raw_shift_breaks++ == 0) first_break = at + pair;
            const PartitionFamily shifted_closed = shift_family_op(i, j, closed);
            rec.check(shifted_closed.size() == closed.size() && is_t_intersecting(shifted_closed, t),
                      "shifting after fixing " + at + pair);
          }
        }
        const PartitionFamily compressed = compress(family, t);
        rec.check(compressed.size() == family.size() && is_t_intersecting(compressed, t) &&
                      fixed_points_meet(compressed, t),
                  "compress " + at);
      }
    }
  }
  if (raw_shift_breaks > 0)
    rec.note({"theorem-mismatch", "shifting",
              std::to_string(raw_shift_breaks) +
                  " shifts of families not closed under fixing lost t-intersection (first: " + first_break + ")"});
}

void oracle_suite(int n_max, const VerifyOptions& options, const BellTable& table, Recorder& rec) {
  SearchOptions search;
  search.threads = options.threads;
  for (int n = 1; n <= n_max; ++n) {
    for (int t = 1; t <= std::min(n, 3); ++t) {
      const SearchResult result = max_t_intersecting(n, t, options.budget, false, search);
      if (result.budget.outcome != SearchBudget::Outcome::Exact) {
        rec.note_all(result.diagnostics);
        continue;
      }
      const BigCount expected = m_value(n, t, table).m_value;
      rec.check(result.maximum == expected,
                "oracle " + nt(n, t) + ": clique " + to_decimal(result.maximum) + " vs formula " + to_decimal(expected));
    }
  }
  // Nontrivial maxima below n = 5 come from degenerate families that no H_i reaches.
  for (int n = 5; n <= n_max; ++n) {
    const SearchResult result = max_t_intersecting(n, 2, options.budget, true, search);
    if (result.budget.outcome != SearchBudget::Outcome::Exact) {
      rec.note_all(result.diagnostics);
      continue;
    }
    const BigCount expected = m_tilde(n, 2, table);
    rec.check(result.maximum == expected, "nontrivial oracle " + nt(n, 2) + ": clique " + to_decimal(result.maximum) +
                                              " vs formula " + to_decimal(expected));
  }
  for (int n = 3; n <= std::min(n_max, 5); ++n) {
    const StatementCheck s1 = verify_statement_s1(n, 2, options.budget);
    if (s1.holds && !*s1.holds)
      rec.note({"theorem-mismatch", "common-blocks",
                nt(n, 2) + ": " + std::to_string(s1.with_common_blocks) + " of " +
                    std::to_string(s1.families_checked) + " maximum nontrivial families share a block"});
  }
}

} // namespace

std::optional<Suite> parse_suite(const std::string& name) {
  for (Suite s : {Suite::Bell, Suite::Formulas, Suite::Operators, Suite::Oracle, Suite::All})
    if (name == to_string(s)) return s;
  return std::nullopt;
}

const char* to_string(Suite suite) {
  switch (suite) {
  case Suite::Bell:
    return "bell";
  case Suite::Formulas:
    return "formulas";
  case Suite::Operators:
    return "operators";
  case Suite::Oracle:
    return "oracle";
  case Suite::All:
    return "all";
  }
  return "unknown";
}

VerifyOutcome cmd_verify(const VerifyOptions& options, const BellTable& table) {
  if (options.n_max < 1) throw ArgumentError("verify: nmax must be >= 1");
  const bool clamp = options.suite == Suite::All;
  const auto runs = [&](Suite s) { return options.suite == s || options.suite == Suite::All; };
  Recorder rec;
  if (runs(Suite::Bell)) bell_suite(suite_bound(options.n_max, kBellSuiteMax, clamp, "bell"), table, rec);
  if (runs(Suite::Formulas))
    formula_suite(suite_bound(options.n_max, kFormulaSuiteMax, clamp, "formulas"), table, rec);
  if (runs(Suite::Operators)) operator_suite(suite_bound(options.n_max, kOperatorSuiteMax, clamp, "operators"), rec);
  if (runs(Suite::Oracle))
    oracle_suite(suite_bound(options.n_max, kOracleSuiteMax, clamp, "oracle"), options, table, rec);

  std::size_t fatal = 0;
  if (options.fatal_diagnostics)
    fatal = static_cast<std::size_t>(std::count_if(rec.diagnostics().begin(), rec.diagnostics().end(), [](const auto& d) {
      return d.kind == "theorem-mismatch" || d.kind == "closed-form-mismatch";
    }));

  VerifyOutcome outcome;
  outcome.passed = rec.failed() == 0 && fatal == 0;
  OutputDocument& doc = outcome.document;
  doc.command = "verify";
  doc.inputs = {{"suite", to_string(options.suite)},
                {"nmax", options.n_max},
                {"fatal_diagnostics", options.fatal_diagnostics}};
  doc.results["checks"] = rec.checks();
  doc.results["failed"] = rec.failed();
  doc.results["failures"] = rec.failures();
  doc.results["fatal_diagnostics"] = fatal;
  doc.results["status"] = outcome.passed ? "pass" : "fail";
  doc.diagnostics = rec.diagnostics();
  return outcome;
}

} // namespace pext::cli
