#include "pext/bell.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pext {

BellTable::BellTable(int capacity) : capacity_(capacity) {
  if (capacity < 1) throw ArgumentError("bell table capacity must be at least 1");
  const auto size = static_cast<std::size_t>(capacity) + 1;

  // Rows 0..capacity+1: gamma() needs C(n-l+1, i) with n at capacity.
  pascal_.resize(size + 1);
  for (std::size_t row = 0; row < pascal_.size(); ++row) {
    pascal_[row].resize(row + 1);
    pascal_[row][0] = 1;
    pascal_[row][row] = 1;
    for (std::size_t k = 1; k < row; ++k) pascal_[row][k] = pascal_[row - 1][k - 1] + pascal_[row - 1][k];
  }

  // B(m+1) = sum_{i<=m} C(m,i) B(i);  B~(m+1) = sum_{i<m} C(m,i) B~(i).
  bell_.resize(size);
  reduced_.resize(size);
  bell_[0] = 1;
  reduced_[0] = 1;
  for (std::size_t m = 0; m + 1 < size; ++m) {
    BigCount b = 0;
    BigCount r = 0;
    for (std::size_t i = 0; i <= m; ++i) {
      b += pascal_[m][i] * bell_[i];
      if (i < m) r += pascal_[m][i] * reduced_[i];
    }
    bell_[m + 1] = std::move(b);
    reduced_[m + 1] = std::move(r);
  }
}

void BellTable::check(long n) const {
  if (n < 0) throw ArgumentError("negative index " + std::to_string(n));
  if (n > capacity_)
    throw CapacityError("index " + std::to_string(n) + " exceeds bell table capacity " + std::to_string(capacity_));
}

const BigCount& BellTable::bell(int n) const {
  check(n);
  return bell_[static_cast<std::size_t>(n)];
}

const BigCount& BellTable::bell_reduced(int n) const {
  check(n);
  return reduced_[static_cast<std::size_t>(n)];
}

const BigCount& BellTable::reduced_or_zero(long n) const {
  static const BigCount zero = 0;
  if (n < 0) return zero;
  check(n);
  return reduced_[static_cast<std::size_t>(n)];
}

const BigCount& BellTable::binomial(long n, long k) const {
  static const BigCount zero = 0;
  if (n < 0 || k < 0 || k > n) return zero;
  if (n >= static_cast<long>(pascal_.size()))
    throw CapacityError("binomial row " + std::to_string(n) + " exceeds cached Pascal triangle");
  return pascal_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

bool verify_inversion(const BellTable& table, int n) {
  BigCount alternating = 0;
  for (int i = 0; i <= n; ++i) {
    const BigCount term = table.binomial(n, i) * table.bell(i);
    if ((n - i) % 2 == 0)
      alternating += term;
    else
      alternating -= term;
  }
  return alternating == table.bell_reduced(n);
}

double dobinski_reduced_approx(int n, int terms) {
  if (n < 0) throw ArgumentError("dobinski_reduced_approx: n must be nonnegative");
  if (terms < 1) throw ArgumentError("dobinski_reduced_approx: terms must be at least 1");
  // i = 0 contributes (-1)^n, i = 1 contributes 0^n.
  long double sum = (n % 2 == 0) ? 1.0L : -1.0L;
  if (n == 0) sum += 1.0L;
  for (int i = 2; i <= terms; ++i) {
    const long double log_term = static_cast<long double>(n) * std::log(static_cast<long double>(i - 1)) -
                                 std::lgamma(static_cast<long double>(i + 1));
    sum += std::exp(log_term);
  }
  return static_cast<double>(sum / std::exp(1.0L));
}

bool log_supermodular_check(const BellTable& table, int n, int a, int b, int delta) {
  if (a < 0 || b < 0 || delta < 0 || delta > std::min(a, b))
    throw ArgumentError("log_supermodular_check: need 0 <= delta <= min(a, b)");
  const int join = a + b - delta;
  if (n - std::max(a, join) < 0 || n - b < 0)
    throw ArgumentError("log_supermodular_check: B~ index would be negative");
  return table.bell_reduced(n - a) * table.bell_reduced(n - b) <=
         table.bell_reduced(n - delta) * table.bell_reduced(n - join);
}

} // namespace pext
