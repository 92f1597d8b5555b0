#include "commands.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <ostream>
#include <thread>

namespace pext::cli {

namespace {

int table_capacity_from_env() {
  const char* raw = std::getenv("PEXT_TABLE_CAP");
  if (raw == nullptr || *raw == '\0') return BellTable::kDefaultCapacity;
  const std::string_view text(raw);
  int value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || value < 1)
    throw ArgumentError("PEXT_TABLE_CAP must be a positive integer, got '" + std::string(text) + "'");
  return value;
}

struct Flags {
  int n = 0;
  int t = 0;
  int ell = 0;
  int i = 0;
  int n_max = 0;
  bool reduced = false;
  bool json = false;
  bool nontrivial = false;
  bool fatal_diagnostics = false;
  long long budget_ms = 60'000;
  unsigned long long budget_nodes = 100'000'000;
  unsigned threads = std::max(1U, std::thread::hardware_concurrency());
  std::string suite = "all";
};

void emit(const OutputDocument& doc, bool json, std::ostream& out) {
  out << (json ? doc.dump_json() : doc.render_text());
}

int fail(const std::string& command, const char* subject, const std::string& message, int code, bool json,
         std::ostream& out, std::ostream& err) {
  err << "pext: " << message << '\n';
  if (json) {
    OutputDocument doc;
    doc.command = command;
    doc.diagnostics.push_back({"error", subject, message});
    out << doc.dump_json();
  }
  return code;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Extremal t-intersecting families of set partitions"};
  app.name("pext");
  app.require_subcommand(1);
  Flags f;

  const auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", f.json, "Emit a JSON output document"); };
  const auto add_nt = [&](CLI::App* sub) {
    sub->add_option("--n", f.n, "Ground set size")->required();
    sub->add_option("--t", f.t, "Intersection threshold")->required();
  };

  CLI::App* bell = app.add_subcommand("bell", "Bell number B(n), or B~(n) with --reduced");
  bell->add_option("--n", f.n, "Index")->required();
  bell->add_flag("--reduced", f.reduced, "Singleton-free Bell number");
  add_json(bell);

  CLI::App* m = app.add_subcommand("m", "Maximum t-intersecting family size M(n,t)");
  add_nt(m);
  add_json(m);

  CLI::App* mtilde = app.add_subcommand("mtilde", "Maximum nontrivially t-intersecting family size");
  add_nt(mtilde);
  add_json(mtilde);

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "gamma(l) and the l-selection condition");
  add_nt(gamma_cmd);
  gamma_cmd->add_option("--ell", f.ell, "l = t + 2r")->required();
  add_json(gamma_cmd);

  CLI::App* phi_cmd = app.add_subcommand("phi", "phi(l) = t - l + 2(t-1)/(gamma(l) - 2)");
  add_nt(phi_cmd);
  phi_cmd->add_option("--ell", f.ell, "l = t + 2r")->required();
  add_json(phi_cmd);

  CLI::App* scan = app.add_subcommand("scan", "Sign changes of phi at n, and the stable-regime threshold up to nmax");
  CLI::Option* scan_n = scan->add_option("--n", f.n, "Ground set size for the phi scan");
  scan->add_option("--t", f.t, "Intersection threshold")->required();
  CLI::Option* scan_nmax = scan->add_option("--nmax", f.n_max, "Upper end of the threshold scan");
  add_json(scan);

  CLI::App* hfamily = app.add_subcommand("hfamily", "The generator family H_i, its upset and S_i");
  add_nt(hfamily);
  hfamily->add_option("--i", f.i, "Family index")->required();
  add_json(hfamily);

  CLI::App* oracle = app.add_subcommand("oracle", "Exact maximum by clique search");
  add_nt(oracle);
  oracle->add_flag("--nontrivial", f.nontrivial, "Require fewer than t blocks common to all members");
  oracle->add_option("--budget-ms", f.budget_ms, "Wall-clock budget in milliseconds")->check(CLI::PositiveNumber);
  oracle->add_option("--budget-nodes", f.budget_nodes, "Search node budget")->check(CLI::PositiveNumber);
  oracle->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
  add_json(oracle);

  CLI::App* verify = app.add_subcommand("verify", "Run a verification suite; exit 3 on any failed assertion");
  verify->add_option("--suite", f.suite, "bell, formulas, operators, oracle or all")
      ->check(CLI::IsMember({"bell", "formulas", "operators", "oracle", "all"}));
  verify->add_option("--nmax", f.n_max, "Largest ground set")->required();
  verify->add_option("--budget-ms", f.budget_ms, "Per-search wall-clock budget")->check(CLI::PositiveNumber);
  verify->add_option("--budget-nodes", f.budget_nodes, "Per-search node budget")->check(CLI::PositiveNumber);
  verify->add_option("--threads", f.threads, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--fatal-diagnostics", f.fatal_diagnostics, "Treat theorem diagnostics as failures");
  add_json(verify);

  std::string command = "pext";
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitArgument;
  }
  for (CLI::App* sub : app.get_subcommands()) command = sub->get_name();

  SearchBudget budget;
  budget.wall_limit = std::chrono::milliseconds(f.budget_ms);
  budget.max_nodes = f.budget_nodes;

  try {
    const BellTable table(table_capacity_from_env());
    if (bell->parsed()) emit(cmd_bell(f.n, f.reduced, table), f.json, out);
    if (m->parsed()) emit(cmd_m(f.n, f.t, table), f.json, out);
    if (mtilde->parsed()) emit(cmd_mtilde(f.n, f.t, table), f.json, out);
    if (gamma_cmd->parsed()) emit(cmd_gamma(f.n, f.t, f.ell, table), f.json, out);
    if (phi_cmd->parsed()) emit(cmd_phi(f.n, f.t, f.ell, table), f.json, out);
    if (scan->parsed()) {
      const std::optional<int> n = scan_n->count() > 0 ? std::optional(f.n) : std::nullopt;
      const std::optional<int> n_max = scan_nmax->count() > 0 ? std::optional(f.n_max) : std::nullopt;
      emit(cmd_scan(n, f.t, n_max, table), f.json, out);
    }
    if (hfamily->parsed()) emit(cmd_hfamily(f.n, f.t, f.i, table), f.json, out);
    if (oracle->parsed()) emit(cmd_oracle(f.n, f.t, f.nontrivial, budget, f.threads), f.json, out);
    if (verify->parsed()) {
      VerifyOptions options;
      options.suite = *parse_suite(f.suite);
      options.n_max = f.n_max;
      options.threads = f.threads;
      options.budget = budget;
      options.fatal_diagnostics = f.fatal_diagnostics;
      const VerifyOutcome outcome = cmd_verify(options, table);
      emit(outcome.document, f.json, out);
      if (!outcome.passed) return kExitAssertion;
    }
  } catch (const CapacityError& e) {
    return fail(command, "capacity", e.what(), kExitCapacity, f.json, out, err);
  } catch (const Error& e) {
    return fail(command, "argument", e.what(), kExitArgument, f.json, out, err);
  }
  return kExitSuccess;
}

} // namespace pext::cli
