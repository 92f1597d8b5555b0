#pragma once

#include "pext/subset_mask.hpp"
#include "pext/types.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace pext {

/// Largest ground set accepted by the exhaustive enumerator (B(12) = 4213597).
inline constexpr int kMaxEnumerationGround = 12;

/// A partition of [n] into disjoint nonempty blocks. Blocks are kept sorted by
/// their minimum element, so equal partitions have identical representations.
class SetPartition {
public:
  SetPartition() = default;

  /// Validates that the blocks are nonempty, disjoint and cover [n].
  static SetPartition from_blocks(int n, std::vector<SubsetMask> blocks);
  /// Restricted growth string: rgs[i] is the block index of element i+1.
  static SetPartition from_rgs(std::span<const std::uint8_t> rgs);
  /// All singletons.
  static SetPartition discrete(int n);
  /// Parses "{1,2}|{3}". The ground set is [n] when n > 0, else [max element].
  static SetPartition parse(std::string_view text, int n = 0);

  int n() const { return n_; }
  std::span<const SubsetMask> blocks() const { return blocks_; }
  std::size_t block_count() const { return blocks_.size(); }

  /// The block containing element (1-based).
  SubsetMask block_of(int element) const;
  bool has_block(SubsetMask block) const;
  bool fixes(int element) const { return block_of(element) == SubsetMask::single(element); }

  std::vector<std::uint8_t> rgs() const;
  /// "{1,2}|{3}"
  std::string to_string() const;

  bool operator==(const SetPartition& other) const = default;
  /// Lexicographic order of restricted growth strings (the enumeration order).
  bool operator<(const SetPartition& other) const;

private:
  SetPartition(int n, std::vector<SubsetMask> blocks) : n_(n), blocks_(std::move(blocks)) {}

  int n_ = 0;
  std::vector<SubsetMask> blocks_;
};

struct SetPartitionHash {
  std::size_t operator()(const SetPartition& p) const noexcept;
};

/// Streams the partitions of [n] in lexicographic restricted-growth order.
class PartitionEnumerator {
public:
  /// 1 <= n <= kMaxEnumerationGround.
  explicit PartitionEnumerator(int n);

  /// Writes the next partition into `out`; false once exhausted.
  bool next(SetPartition& out);

private:
  int n_;
  bool started_ = false;
  bool done_ = false;
  std::vector<std::uint8_t> rgs_;
  std::vector<std::uint8_t> prefix_max_;
};

template <typename Visitor>
void for_each_partition(int n, Visitor&& visit) {
  PartitionEnumerator it(n);
  SetPartition p;
  while (it.next(p)) visit(p);
}

std::vector<SetPartition> enumerate_partitions(int n);

/// f(p): elements forming singleton blocks of p.
SubsetMask fixed_points(const SetPartition& p);

/// Number of blocks present in both p and q.
int common_parts(const SetPartition& p, const SetPartition& q);

/// A deduplicated set of partitions of a common ground set.
class PartitionFamily {
public:
  using Storage = std::unordered_set<SetPartition, SetPartitionHash>;

  explicit PartitionFamily(int n) : n_(n) {}
  PartitionFamily(int n, std::span<const SetPartition> members);

  int n() const { return n_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  /// False if already present; throws ArgumentError on a ground-set mismatch.
  bool insert(SetPartition p);
  bool contains(const SetPartition& p) const { return members_.contains(p); }

  Storage::const_iterator begin() const { return members_.begin(); }
  Storage::const_iterator end() const { return members_.end(); }

  /// Members in enumeration order.
  std::vector<SetPartition> sorted() const;

  /// One partition per line, in enumeration order.
  std::string to_string() const;
  static PartitionFamily parse(std::string_view text, int n);

  bool operator==(const PartitionFamily& other) const { return n_ == other.n_ && members_ == other.members_; }

private:
  int n_;
  Storage members_;
};

/// Every pair of distinct members shares at least t blocks.
bool is_t_intersecting(const PartitionFamily& family, int t);

/// Blocks present in every member (sorted by minimum element). Family must be nonempty.
std::vector<SubsetMask> common_blocks(const PartitionFamily& family);

/// Fewer than t blocks are common to all members. Family must be nonempty.
bool is_nontrivial(const PartitionFamily& family, int t);

/// Fixing: if j shares i's block, split {i} off that block.
SetPartition fix_op(int i, int j, const SetPartition& p);

/// Applies fix_op to every member unless the image is already a member.
PartitionFamily fix_family_op(int i, int j, const PartitionFamily& family);

/// Shifting: if p fixes w but not v, exchange the roles of v and w
/// (w joins v's block and {v} becomes a singleton); otherwise identity.
SetPartition shift_op(int v, int w, const SetPartition& p);

/// Collision-aware shifting of a family. Requires v < w unless allow_any_order.
PartitionFamily shift_family_op(int v, int w, const PartitionFamily& family, bool allow_any_order = false);

struct CompressStats {
  int sweeps = 0;
  int productive_steps = 0;
  /// Termination measure before and after: sum over members of n*|f(p)| + sum_{i in f(p)} (n - i).
  long long initial_measure = 0;
  long long final_measure = 0;
};

/// Termination measure of a single partition: n*|f(p)| + sum_{i in f(p)} (n - i).
long long compression_measure(const SetPartition& p);

/// Applies fixing over all ordered pairs (i, j) until no pair changes the family.
/// Shifting preserves t-intersection on families of this form; on arbitrary
/// t-intersecting families it need not.
PartitionFamily fix_closure(const PartitionFamily& family);

/// Repeatedly applies fixing over all ordered pairs and shifting over all v < w
/// until a full sweep changes nothing. The input must be t-intersecting; the
/// result has the same size and every two members share at least t fixed points.
PartitionFamily compress(const PartitionFamily& family, int t, CompressStats* stats = nullptr);

} // namespace pext
