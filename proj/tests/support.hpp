#pragma once

#include "oracles/brute.hpp"

#include "pext/partition.hpp"
#include "pext/setfam.hpp"

#include <random>
#include <set>
#include <vector>

namespace testing_support {

inline pext::SetPartition to_library(int n, const brute::Partition& p) {
  std::vector<pext::SubsetMask> blocks;
  for (const auto& b : p) {
    pext::SubsetMask m;
    for (int x : b) m.insert(x);
    blocks.push_back(m);
  }
  return pext::SetPartition::from_blocks(n, blocks);
}

inline brute::Partition to_brute(const pext::SetPartition& p) {
  brute::Partition out;
  for (pext::SubsetMask b : p.blocks()) out.push_back(b.elements());
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::set<int>> to_sets(const pext::SetFamily& family) {
  std::vector<std::set<int>> out;
  for (pext::SubsetMask s : family.sets()) {
    const auto e = s.elements();
    out.emplace_back(e.begin(), e.end());
  }
  return out;
}

/// Random t-intersecting family: partitions of [n] in shuffled order, each kept
/// when it meets every kept member in >= t blocks, up to a random target size.
inline pext::PartitionFamily random_family(int n, int t, std::mt19937_64& rng) {
  std::vector<brute::Partition> pool = brute::all_partitions(n);
  std::shuffle(pool.begin(), pool.end(), rng);
  const std::size_t target = std::uniform_int_distribution<std::size_t>(1, pool.size())(rng);
  std::vector<brute::Partition> kept;
  for (const auto& p : pool) {
    if (kept.size() >= target) break;
    bool ok = true;
    for (const auto& q : kept)
      if (brute::common_blocks(p, q) < t) ok = false;
    if (ok) kept.push_back(p);
  }
  pext::PartitionFamily family(n);
  for (const auto& p : kept) family.insert(to_library(n, p));
  return family;
}

} // namespace testing_support
