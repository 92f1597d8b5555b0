#pragma once

// Independent reference implementations used only by the tests. Nothing here
// calls into the library; partitions are plain sorted block lists.

#include <gmpxx.h>

#include <set>
#include <vector>

namespace brute {

using Block = std::vector<int>;
using Partition = std::vector<Block>;

/// All partitions of {1..n}, built by inserting element k into every existing
/// block or a new one. Blocks and partitions are sorted.
std::vector<Partition> all_partitions(int n);

/// B(n) from Stirling numbers of the second kind.
mpz_class bell(int n);
/// Singleton-free Bell number from the associated Stirling recurrence
/// S2(n,k) = k S2(n-1,k) + (n-1) S2(n-2,k-1).
mpz_class bell_reduced(int n);
mpz_class binomial(int n, int k);

std::set<int> fixed_points(const Partition& p);
int common_blocks(const Partition& p, const Partition& q);

/// |{p : |[t+2r] & f(p)| >= t+r}| by filtering all_partitions.
long frankl_count(int n, int t, int r);

/// Sum of B~(n - |S|) over all S in 2^[n] containing some generator, by a full sweep.
mpz_class upset_sum(int n, const std::vector<std::set<int>>& generators);
/// Size of each layer of the upset, by the same sweep.
std::vector<long> upset_layers(int n, const std::vector<std::set<int>>& generators);

/// Largest family of partitions of [n] in which every two members share >= t
/// blocks (and, when nontrivial, fewer than t blocks are common to all members),
/// from all maximal cliques of the intersection graph (Bron-Kerbosch with pivot).
std::size_t max_family(int n, int t, bool nontrivial);

/// Every maximum family found by the same enumeration.
std::vector<std::vector<Partition>> maximum_families(int n, int t, bool nontrivial);

/// All blocks common to every member.
std::vector<Block> shared_blocks(const std::vector<Partition>& family);

} // namespace brute
