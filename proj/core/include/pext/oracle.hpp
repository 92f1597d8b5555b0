#pragma once

#include "pext/diagnostic.hpp"
#include "pext/partition.hpp"
#include "pext/types.hpp"

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

namespace pext {

/// Largest ground set accepted by count_frankl_direct.
inline constexpr int kMaxDirectCountGround = 10;
/// Largest ground set for which an intersection graph is built (B(8) = 4140 vertices).
inline constexpr int kMaxGraphGround = 8;

/// Fixed-width bit set over vertex or block indices.
class Bits {
public:
  Bits() = default;
  explicit Bits(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1U; }
  bool any() const;
  std::size_t count() const;
  /// Index of the lowest set bit, or size() when empty.
  std::size_t first() const;
  Bits& operator&=(const Bits& other);
  Bits& subtract(const Bits& other);
  Bits operator&(const Bits& other) const {
    Bits out = *this;
    out &= other;
    return out;
  }
  std::vector<std::size_t> indices() const;

  bool operator==(const Bits&) const = default;

private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Partitions of [n] (enumeration order) joined when they share at least t blocks.
class IntersectionGraph {
public:
  /// n <= kMaxGraphGround, t >= 1. threads = 0 picks hardware concurrency.
  IntersectionGraph(int n, int t, unsigned threads = 1);

  int n() const { return n_; }
  int t() const { return t_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  const std::vector<SetPartition>& vertices() const { return vertices_; }
  const Bits& neighbours(std::size_t v) const { return adjacency_[v]; }
  bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].test(v); }
  /// Blocks of vertex v, indexed by block bit pattern minus one.
  const Bits& blocks(std::size_t v) const { return blocks_[v]; }
  std::size_t index_of(const SetPartition& p) const;

private:
  int n_;
  int t_;
  std::vector<SetPartition> vertices_;
  std::vector<Bits> adjacency_;
  std::vector<Bits> blocks_;
};

struct SearchBudget {
  enum class Outcome { Exact, BudgetExhausted };

  std::uint64_t max_nodes = 100'000'000;
  std::chrono::milliseconds wall_limit{60'000};
  Outcome outcome = Outcome::Exact;
  std::uint64_t nodes_used = 0;
};

const char* to_string(SearchBudget::Outcome outcome);

struct SearchOptions {
  unsigned threads = 1;
  /// Start from the best explicitly constructed and verified formula family.
  bool seed_incumbent = true;
};

struct SearchResult {
  BigCount maximum;
  PartitionFamily witness{0};
  SearchBudget budget;
  Diagnostics diagnostics;
};

/// Brute-force count of {p in Pi(n) : |[t+2r] & f(p)| >= t+r}; n <= kMaxDirectCountGround.
BigCount count_frankl_direct(int n, int t, int r);

/// Maximum (nontrivially) t-intersecting family of partitions of [n], by
/// branch-and-bound clique search with greedy-colouring bounds. The witness is
/// the lexicographically first maximum family in enumeration order and is
/// re-verified before it is returned.
SearchResult max_t_intersecting(int n, int t, SearchBudget budget, bool nontrivial, SearchOptions options = {});

struct StatementCheck {
  /// nullopt when the budget ran out.
  std::optional<bool> holds;
  std::size_t maximum = 0;
  std::size_t families_checked = 0;
  /// Maximum families with at least one block common to all members.
  std::size_t with_common_blocks = 0;
  /// Maximum families with at least one fixed point common to all members.
  std::size_t with_common_fixed_points = 0;
  SearchBudget budget;
};

/// Checks that every maximum nontrivially t-intersecting family has no block
/// common to all members. n <= 5. Vacuously true when no such family exists.
StatementCheck verify_statement_s1(int n, int t, SearchBudget budget);

} // namespace pext
