#pragma once

#include "pext/bell.hpp"
#include "pext/partition.hpp"
#include "pext/subset_mask.hpp"
#include "pext/types.hpp"

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pext {

/// Largest ground set for which upset_closure materializes the closure.
inline constexpr int kMaxClosureGround = 24;

/// A deduplicated family of subsets of [n], ordered by cardinality and then by bits.
class SetFamily {
public:
  explicit SetFamily(int n);
  SetFamily(int n, std::vector<SubsetMask> sets, bool is_upset = false);

  int n() const { return n_; }
  bool is_upset() const { return is_upset_; }
  std::size_t size() const { return sets_.size(); }
  bool empty() const { return sets_.empty(); }
  std::span<const SubsetMask> sets() const { return sets_; }
  bool contains(SubsetMask s) const;

  /// Union of all members.
  SubsetMask support() const;
  /// profile[k] = number of members of cardinality k, for k = 0..n.
  std::vector<std::size_t> size_profile() const;

  /// One member per line as "1,2,3" (an empty line is the empty set).
  std::string to_string() const;
  static SetFamily parse(std::string_view text, int n);

  bool operator==(const SetFamily& other) const { return n_ == other.n_ && sets_ == other.sets_; }

private:
  int n_;
  std::vector<SubsetMask> sets_;
  bool is_upset_ = false;
};

/// True iff some member of `generators` is contained in s.
bool in_upset(const SetFamily& generators, SubsetMask s);

/// W(C): all S in 2^[n] containing a member of C. n <= kMaxClosureGround.
SetFamily upset_closure(const SetFamily& family);

/// Members that strictly contain no other member.
SetFamily minimal_elements(const SetFamily& family);

/// Cardinality profile of W(C) over [n] without materializing it: entry k counts
/// the k-subsets of [n] lying in the upset.
std::vector<BigCount> upset_profile(const SetFamily& generators);

/// |U(C)| = sum_{S in W(C)} B~(n - |S|): partitions of [n] whose fixed-point set
/// lies in the upset generated by C.
BigCount generated_size(const SetFamily& generators, const BellTable& table);

/// U(C) materialized by enumeration; n <= kMaxEnumerationGround.
PartitionFamily generated_family(const SetFamily& generators);

/// Every pair of distinct members meets in at least t elements.
bool is_t_intersecting_setfam(const SetFamily& family, int t);

} // namespace pext
