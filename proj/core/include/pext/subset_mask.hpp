#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace pext {

/// Largest ground set a SubsetMask can describe.
inline constexpr int kMaxGround = 64;

/// A subset of [n] = {1, ..., n}; element i is stored in bit i-1.
class SubsetMask {
public:
  constexpr SubsetMask() = default;
  constexpr explicit SubsetMask(std::uint64_t bits) : bits_(bits) {}
  SubsetMask(std::initializer_list<int> elements) {
    for (int e : elements) insert(e);
  }

  /// {1, ..., n}.
  static constexpr SubsetMask full(int n) {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  /// {lo, ..., hi}; empty when lo > hi.
  static constexpr SubsetMask range(int lo, int hi) {
    return lo > hi ? SubsetMask() : SubsetMask(full(hi).bits_ & ~full(lo - 1).bits_);
  }
  static constexpr SubsetMask single(int element) { return SubsetMask(std::uint64_t{1} << (element - 1)); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int element) const { return (bits_ >> (element - 1)) & 1U; }
  constexpr bool contains(SubsetMask other) const { return (other.bits_ & ~bits_) == 0; }
  /// Smallest element; 0 for the empty set.
  constexpr int min_element() const { return bits_ == 0 ? 0 : std::countr_zero(bits_) + 1; }
  /// Largest element; 0 for the empty set.
  constexpr int max_element() const { return bits_ == 0 ? 0 : 64 - std::countl_zero(bits_); }

  constexpr void insert(int element) { bits_ |= std::uint64_t{1} << (element - 1); }
  constexpr void erase(int element) { bits_ &= ~(std::uint64_t{1} << (element - 1)); }

  constexpr SubsetMask operator&(SubsetMask o) const { return SubsetMask(bits_ & o.bits_); }
  constexpr SubsetMask operator|(SubsetMask o) const { return SubsetMask(bits_ | o.bits_); }
  /// Set difference.
  constexpr SubsetMask operator-(SubsetMask o) const { return SubsetMask(bits_ & ~o.bits_); }

  constexpr bool operator==(const SubsetMask&) const = default;
  constexpr auto operator<=>(const SubsetMask&) const = default;

  /// Elements in increasing order.
  std::vector<int> elements() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b) + 1);
    return out;
  }

  /// "1,2,3" (empty string for the empty set).
  std::string to_string(char sep = ',') const {
    std::string out;
    for (int e : elements()) {
      if (!out.empty()) out += sep;
      out += std::to_string(e);
    }
    return out;
  }

private:
  std::uint64_t bits_ = 0;
};

struct SubsetMaskHash {
  std::size_t operator()(SubsetMask m) const noexcept { return std::hash<std::uint64_t>{}(m.bits()); }
};

} // namespace pext
