#pragma once

#include "pext/types.hpp"

#include <vector>

namespace pext {

/// Precomputed Bell numbers B(n), singleton-free Bell numbers B~(n) and binomial
/// coefficients up to a fixed capacity. Immutable after construction.
class BellTable {
public:
  static constexpr int kDefaultCapacity = 512;

  explicit BellTable(int capacity = kDefaultCapacity);

  int capacity() const { return capacity_; }

  /// Number of partitions of an n-element set.
  const BigCount& bell(int n) const;
  /// Number of partitions of an n-element set without singleton blocks.
  const BigCount& bell_reduced(int n) const;
  /// B~(n), extended by 0 to negative n.
  const BigCount& reduced_or_zero(long n) const;
  /// C(n, k); zero outside 0 <= k <= n. Rows are cached up to capacity + 1.
  const BigCount& binomial(long n, long k) const;

private:
  void check(long n) const;

  int capacity_;
  std::vector<BigCount> bell_;
  std::vector<BigCount> reduced_;
  std::vector<std::vector<BigCount>> pascal_;
};

/// Checks B~(n) == sum_i C(n,i) (-1)^(n-i) B(i) exactly.
bool verify_inversion(const BellTable& table, int n);

/// Truncated Dobinski-type series (1/e) sum_{i=0}^{terms} (i-1)^n / i!, which
/// converges to B~(n).
double dobinski_reduced_approx(int n, int terms);

/// Log-supermodularity of B~ along the subset lattice:
/// B~(n-a) B~(n-b) <= B~(n-delta) B~(n-(a+b-delta)).
/// Requires 0 <= delta <= min(a, b) and every index nonnegative.
bool log_supermodular_check(const BellTable& table, int n, int a, int b, int delta);

} // namespace pext
