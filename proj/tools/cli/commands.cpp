#include "commands.hpp"

#include "pext/extremal.hpp"
#include "pext/partition.hpp"
#include "pext/setfam.hpp"

namespace pext::cli {

namespace {

std::string dec(const BigCount& value) { return to_decimal(value); }

Json ratio_or_null(const std::optional<ExactRatio>& value) {
  return value ? Json(to_decimal(*value)) : Json(nullptr);
}

const char* to_string(PhiPoint::Status status) {
  switch (status) {
  case PhiPoint::Status::Finite:
    return "finite";
  case PhiPoint::Status::Pole:
    return "pole";
  case PhiPoint::Status::InfiniteGamma:
    return "infinite-gamma";
  }
  return "unknown";
}

Json report_json(const ExtremalReport& report) {
  Json candidates = Json::array();
  for (const auto& c : report.candidates) candidates.push_back({{"r", c.r}, {"ell", c.ell}, {"size", dec(c.size)}});
  return {
      {"candidates", candidates},
      {"maximizing_r", report.maximizing_r},
      {"tie", report.maximizing_r.size() > 1},
      {"selected_ell", report.selected_ell},
      {"M", dec(report.m_value)},
  };
}

} // namespace

OutputDocument cmd_bell(int n, bool reduced, const BellTable& table) {
  OutputDocument doc;
  doc.command = "bell";
  doc.inputs = {{"n", n}, {"reduced", reduced}};
  doc.results["value"] = dec(reduced ? table.bell_reduced(n) : table.bell(n));
  return doc;
}

OutputDocument cmd_m(int n, int t, const BellTable& table) {
  OutputDocument doc;
  doc.command = "m";
  doc.inputs = {{"n", n}, {"t", t}};
  const ExtremalReport report = m_value(n, t, table);
  doc.results = report_json(report);
  doc.diagnostics = report.diagnostics;
  return doc;
}

OutputDocument cmd_mtilde(int n, int t, const BellTable& table) {
  OutputDocument doc;
  doc.command = "mtilde";
  doc.inputs = {{"n", n}, {"t", t}};
  try {
    const ExtremalReport report = m_tilde_report(n, t, table);
    doc.results = report_json(report);
    doc.results["regime"] = report.regime ? to_string(*report.regime) : "";
    Json s = Json::array();
    for (const auto& [i, value] : report.s_sequence) s.push_back({{"i", i}, {"S", dec(value)}});
    doc.results["s_sequence"] = s;
    doc.results["M_tilde"] = report.m_tilde ? Json(dec(*report.m_tilde)) : Json(nullptr);
    doc.diagnostics = report.diagnostics;
  } catch (const EmptyRegimeError& e) {
    const ExtremalReport report = m_value(n, t, table);
    doc.results = report_json(report);
    doc.results["regime"] = "empty";
    doc.results["s_sequence"] = Json::array();
    doc.results["M_tilde"] = nullptr;
    doc.diagnostics = report.diagnostics;
    doc.diagnostics.push_back({"empty-regime", "m_tilde", e.what()});
  }
  return doc;
}

OutputDocument cmd_gamma(int n, int t, int ell, const BellTable& table) {
  OutputDocument doc;
  doc.command = "gamma";
  doc.inputs = {{"n", n}, {"t", t}, {"ell", ell}};
  const GammaSums sums = gamma_sums(n, t, ell, table);
  doc.results["numerator"] = dec(sums.numerator);
  doc.results["denominator"] = dec(sums.denominator);
  if (sums.denominator == 0) {
    doc.results["gamma"] = "inf";
    doc.diagnostics.push_back({"infinite-gamma", "gamma", "denominator vanishes; gamma is +inf"});
  } else {
    doc.results["gamma"] = to_decimal(gamma(n, t, ell, table));
  }
  doc.results["condition_value"] = ratio_or_null(ell_condition_value(n, t, ell, table));
  doc.results["ell_condition"] = ell_condition(n, t, ell, table);
  const GammaSeriesCheck series = gamma_series_check(n, t, ell, 4 * n + 60, table);
  doc.results["denominator_series"] = {
      {"exact", series.exact},
      {"series", series.series},
      {"displayed_series", series.displayed_series},
      {"matches", series.matches},
  };
  return doc;
}

OutputDocument cmd_phi(int n, int t, int ell, const BellTable& table) {
  OutputDocument doc;
  doc.command = "phi";
  doc.inputs = {{"n", n}, {"t", t}, {"ell", ell}};
  try {
    doc.results["phi"] = to_decimal(phi(n, t, ell, table));
    doc.results["status"] = "finite";
  } catch (const PoleError& e) {
    doc.results["phi"] = nullptr;
    doc.results["status"] = "pole";
    doc.diagnostics.push_back({"pole", "phi", e.what()});
  } catch (const DegenerateInputError&) {
    doc.results["phi"] = std::to_string(t - ell);
    doc.results["status"] = "infinite-gamma";
    doc.diagnostics.push_back({"infinite-gamma", "phi", "gamma is +inf; reporting the limit t - l"});
  }
  return doc;
}

OutputDocument cmd_scan(std::optional<int> n, int t, std::optional<int> n_max, const BellTable& table) {
  if (!n && !n_max) throw ArgumentError("scan: give --n for a phi scan, --nmax for the threshold scan, or both");
  OutputDocument doc;
  doc.command = "scan";
  doc.inputs["t"] = t;
  if (n) doc.inputs["n"] = *n;
  if (n_max) doc.inputs["nmax"] = *n_max;
  if (n) {
    const PhiScan scan = sign_change_scan(*n, t, table);
    Json points = Json::array();
    for (const auto& p : scan.points) {
      Json point = {{"ell", p.ell}, {"status", to_string(p.status)}, {"phi", ratio_or_null(p.value)}};
      point["growth_condition"] = p.growth_condition ? Json(*p.growth_condition) : Json(nullptr);
      points.push_back(point);
    }
    doc.results["points"] = points;
    doc.results["sign_changes"] = scan.sign_changes;
    doc.results["single_sign_change"] = scan.single_sign_change;
    doc.results["concave"] = scan.concave();
    doc.results["concavity_violations"] = scan.concavity_violations;
    doc.diagnostics = scan.diagnostics;
  }
  if (n_max) {
    const int threshold = stable_regime_threshold(t, *n_max, table);
    doc.results["threshold"] = threshold;
  }
  return doc;
}

OutputDocument cmd_hfamily(int n, int t, int i, const BellTable& table) {
  OutputDocument doc;
  doc.command = "hfamily";
  doc.inputs = {{"n", n}, {"t", t}, {"i", i}};
  const SetFamily generators = h_family(t, i, n);
  Json sets = Json::array();
  for (SubsetMask s : generators.sets()) sets.push_back(s.to_string());
  doc.results["generators"] = sets;
  doc.results["minimal_generators"] = minimal_elements(generators).size();
  doc.results["generators_t_intersecting"] = is_t_intersecting_setfam(generators, t);
  Json profile = Json::array();
  const std::vector<BigCount> counts = upset_profile(generators);
  for (std::size_t k = 0; k < counts.size(); ++k)
    if (counts[k] != 0) profile.push_back({{"size", k}, {"count", dec(counts[k])}});
  doc.results["upset_profile"] = profile;
  doc.results["S"] = dec(generated_size(generators, table));
  if (n <= kMaxGraphGround) {
    const PartitionFamily family = generated_family(generators);
    doc.results["enumerated_size"] = std::to_string(family.size());
    doc.results["t_intersecting"] = is_t_intersecting(family, t);
    doc.results["nontrivial"] = !family.empty() && is_nontrivial(family, t);
  }
  return doc;
}

OutputDocument cmd_oracle(int n, int t, bool nontrivial, SearchBudget budget, unsigned threads) {
  OutputDocument doc;
  doc.command = "oracle";
  doc.inputs = {{"n", n},
                {"t", t},
                {"nontrivial", nontrivial},
                {"budget_ms", budget.wall_limit.count()},
                {"budget_nodes", budget.max_nodes}};
  SearchOptions options;
  options.threads = threads;
  const SearchResult result = max_t_intersecting(n, t, budget, nontrivial, options);
  doc.results["maximum"] = dec(result.maximum);
  doc.results["outcome"] = to_string(result.budget.outcome);
  Json witness = Json::array();
  for (const auto& p : result.witness.sorted()) witness.push_back(p.to_string());
  doc.results["witness"] = witness;
  doc.diagnostics = result.diagnostics;
  return doc;
}

} // namespace pext::cli
