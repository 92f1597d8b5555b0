#pragma once

#include <string>
#include <vector>

namespace pext {

/// A structured finding reported alongside results. Diagnostics flag places where
/// a stated closed form or theorem disagrees with first-principles computation,
/// or where a computation was cut short; they are not assertion failures.
struct Diagnostic {
  /// One of: "theorem-mismatch", "closed-form-mismatch", "budget-exhausted",
  /// "pole", "infinite-gamma", "empty-regime", "heuristic", "interior-maximum".
  std::string kind;
  /// What was being checked, e.g. "select_ell" or "s2-asymptotic-form".
  std::string subject;
  std::string message;

  bool operator==(const Diagnostic&) const = default;
};

using Diagnostics = std::vector<Diagnostic>;

} // namespace pext
