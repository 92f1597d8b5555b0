#pragma once

#include "output.hpp"

#include "pext/bell.hpp"
#include "pext/oracle.hpp"

#include <iosfwd>
#include <optional>
#include <string>

namespace pext::cli {

OutputDocument cmd_bell(int n, bool reduced, const BellTable& table);
OutputDocument cmd_m(int n, int t, const BellTable& table);
OutputDocument cmd_mtilde(int n, int t, const BellTable& table);
OutputDocument cmd_gamma(int n, int t, int ell, const BellTable& table);
OutputDocument cmd_phi(int n, int t, int ell, const BellTable& table);
/// phi scan at n when given; threshold of the stable regime up to n_max when given.
OutputDocument cmd_scan(std::optional<int> n, int t, std::optional<int> n_max, const BellTable& table);
OutputDocument cmd_hfamily(int n, int t, int i, const BellTable& table);
OutputDocument cmd_oracle(int n, int t, bool nontrivial, SearchBudget budget, unsigned threads);

enum class Suite { Bell, Formulas, Operators, Oracle, All };

std::optional<Suite> parse_suite(const std::string& name);
const char* to_string(Suite suite);

struct VerifyOptions {
  Suite suite = Suite::All;
  int n_max = 5;
  unsigned threads = 1;
  SearchBudget budget;
  /// Count theorem and closed-form diagnostics as failures.
  bool fatal_diagnostics = false;
};

struct VerifyOutcome {
  OutputDocument document;
  bool passed = false;
};

VerifyOutcome cmd_verify(const VerifyOptions& options, const BellTable& table);

/// Full command-line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace pext::cli
