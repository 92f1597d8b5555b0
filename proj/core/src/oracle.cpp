#include "pext/oracle.hpp"

#include "pext/extremal.hpp"
#include "pext/setfam.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace pext {

bool Bits::any() const {
  return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
}

std::size_t Bits::count() const {
  std::size_t c = 0;
  for (std::uint64_t w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

std::size_t Bits::first() const {
  for (std::size_t k = 0; k < words_.size(); ++k)
    if (words_[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(words_[k]));
  return size_;
}

Bits& Bits::operator&=(const Bits& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
  return *this;
}

Bits& Bits::subtract(const Bits& other) {
  for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= ~other.words_[k];
  return *this;
}

std::vector<std::size_t> Bits::indices() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < words_.size(); ++k)
    for (std::uint64_t w = words_[k]; w != 0; w &= w - 1)
      out.push_back(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  return out;
}

namespace {

unsigned resolve_threads(unsigned threads) {
  if (threads != 0) return threads;
  return std::max(1U, std::thread::hardware_concurrency());
}

template <typename Work>
void parallel_for(std::size_t count, unsigned threads, Work work) {
  threads = std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) work(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < threads; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < count; i = next++) work(i);
    });
}

} // namespace

IntersectionGraph::IntersectionGraph(int n, int t, unsigned threads) : n_(n), t_(t) {
  if (n < 1 || n > kMaxGraphGround)
    throw CapacityError("intersection graph: n must lie in [1, " + std::to_string(kMaxGraphGround) + "]");
  if (t < 1) throw ArgumentError("intersection graph: t must be >= 1");
  vertices_ = enumerate_partitions(n);
  const std::size_t count = vertices_.size();
  const std::size_t block_space = (std::size_t{1} << n) - 1;

  blocks_.assign(count, Bits(block_space));
  for (std::size_t v = 0; v < count; ++v)
    for (SubsetMask b : vertices_[v].blocks()) blocks_[v].set(static_cast<std::size_t>(b.bits() - 1));

  adjacency_.assign(count, Bits(count));
  parallel_for(count, threads, [&](std::size_t u) {
    for (std::size_t v = 0; v < count; ++v)
      if (u != v && (blocks_[u] & blocks_[v]).count() >= static_cast<std::size_t>(t)) adjacency_[u].set(v);
  });
}

std::size_t IntersectionGraph::index_of(const SetPartition& p) const {
  const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), p);
  if (it == vertices_.end() || !(*it == p)) throw ArgumentError("partition is not a vertex of this graph");
  return static_cast<std::size_t>(it - vertices_.begin());
}

const char* to_string(SearchBudget::Outcome outcome) {
  return outcome == SearchBudget::Outcome::Exact ? "exact" : "budget-exhausted";
}

BigCount count_frankl_direct(int n, int t, int r) {
  if (n > kMaxDirectCountGround)
    throw CapacityError("count_frankl_direct: n must be <= " + std::to_string(kMaxDirectCountGround));
  if (t < 1 || r < 0 || t + 2 * r > n) throw ArgumentError("count_frankl_direct: need t >= 1, r >= 0, t + 2r <= n");
  const SubsetMask window = SubsetMask::range(1, t + 2 * r);
  std::uint64_t count = 0;
  for_each_partition(n, [&](const SetPartition& p) {
    if ((fixed_points(p) & window).size() >= t + r) ++count;
  });
  return BigCount(static_cast<unsigned long>(count));
}

namespace {

/// Graph relabelled in smallest-last (degeneracy) order, so greedy colouring in
/// label order gives tight bounds.
struct OrderedGraph {
  std::vector<std::size_t> original; // label -> graph vertex
  std::vector<Bits> adjacency;
  std::vector<Bits> blocks;
};

OrderedGraph degeneracy_order(const IntersectionGraph& g) {
  const std::size_t count = g.vertex_count();
  std::vector<std::size_t> degree(count);
  for (std::size_t v = 0; v < count; ++v) degree[v] = g.neighbours(v).count();
  std::vector<bool> removed(count, false);
  std::vector<std::size_t> removal;
  removal.reserve(count);
  for (std::size_t step = 0; step < count; ++step) {
    std::size_t pick = count;
    for (std::size_t v = 0; v < count; ++v)
      if (!removed[v] && (pick == count || degree[v] < degree[pick])) pick = v;
    removed[pick] = true;
    removal.push_back(pick);
    for (std::size_t u : g.neighbours(pick).indices())
      if (!removed[u]) --degree[u];
  }

  OrderedGraph out;
  out.original.assign(removal.rbegin(), removal.rend());
  std::vector<std::size_t> label(count);
  for (std::size_t i = 0; i < count; ++i) label[out.original[i]] = i;
  out.adjacency.assign(count, Bits(count));
  out.blocks.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t u : g.neighbours(out.original[i]).indices()) out.adjacency[i].set(label[u]);
    out.blocks.push_back(g.blocks(out.original[i]));
  }
  return out;
}

struct Coloured {
  std::size_t vertex;
  std::size_t colour;
};

/// Greedy sequential colouring of `candidates` in label order; colours ascend.
std::vector<Coloured> colour_classes(const Bits& candidates, const std::vector<Bits>& adjacency) {
  std::vector<Coloured> out;
  Bits uncoloured = candidates;
  std::size_t colour = 0;
  while (uncoloured.any()) {
    ++colour;
    Bits available = uncoloured;
    while (available.any()) {
      const std::size_t v = available.first();
      available.reset(v);
      uncoloured.reset(v);
      available.subtract(adjacency[v]);
      out.push_back({v, colour});
    }
  }
  return out;
}

class BudgetClock {
public:
  explicit BudgetClock(const SearchBudget& budget)
      : max_nodes_(budget.max_nodes), deadline_(std::chrono::steady_clock::now() + budget.wall_limit) {}

  /// Counts one node; true once the budget is spent.
  bool tick() {
    if (stopped_.load(std::memory_order_relaxed)) return true;
    const std::uint64_t used = ++nodes_;
    if (used > max_nodes_ || ((used & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_)) {
      stopped_ = true;
      return true;
    }
    return false;
  }
  bool stopped() const { return stopped_.load(std::memory_order_relaxed); }
  std::uint64_t nodes() const { return nodes_.load(); }

private:
  std::uint64_t max_nodes_;
  std::chrono::steady_clock::time_point deadline_;
  std::atomic<std::uint64_t> nodes_{0};
  std::atomic<bool> stopped_{false};
};

/// Branch and bound over cliques; with `nontrivial`, only cliques whose common
/// block set has fewer than t elements are admissible.
class CliqueSearch {
public:
  enum class Mode { Best, CollectAll };

  CliqueSearch(const OrderedGraph& g, int t, bool nontrivial, Mode mode, BudgetClock& clock)
      : g_(g), t_(static_cast<std::size_t>(t)), nontrivial_(nontrivial), mode_(mode), clock_(clock) {}

  void seed(std::vector<std::size_t> clique) {
    best_size_ = clique.size();
    best_ = std::move(clique);
  }

  void run(unsigned threads) {
    const std::size_t count = g_.adjacency.size();
    Bits all(count);
    for (std::size_t v = 0; v < count; ++v) all.set(v);
    const Bits universe = full_blocks();

    const std::vector<Coloured> root = colour_classes(all, g_.adjacency);
    // Root branch k takes root[k] with candidates root[0..k-1], exactly as the
    // sequential loop would after discarding root[k+1..].
    parallel_for(root.size(), threads, [&](std::size_t j) {
      const std::size_t k = root.size() - 1 - j;
      if (clock_.stopped() || !can_improve(root[k].colour)) return;
      Bits prefix(count);
      for (std::size_t m = 0; m < k; ++m) prefix.set(root[m].vertex);
      std::vector<std::size_t> clique;
      branch(clique, root[k].vertex, prefix, universe);
    });
  }

  std::size_t best_size() const { return best_size_.load(); }
  const std::vector<std::size_t>& best() const { return best_; }
  const std::vector<std::vector<std::size_t>>& all_best() const { return all_best_; }

private:
  Bits full_blocks() const {
    Bits out(g_.blocks.empty() ? 0 : g_.blocks.front().size());
    for (std::size_t b = 0; b < out.size(); ++b) out.set(b);
    return out;
  }

  bool can_improve(std::size_t reachable) const {
    return mode_ == Mode::CollectAll ? reachable >= best_size_.load() : reachable > best_size_.load();
  }

  void branch(std::vector<std::size_t>& clique, std::size_t v, const Bits& candidates, const Bits& common) {
    if (clock_.tick()) return;
    Bits next = candidates & g_.adjacency[v];
    Bits next_common;
    bool admissible = true;
    if (nontrivial_) {
      next_common = common & g_.blocks[v];
      Bits floor = next_common;
      for (std::size_t u : next.indices()) floor &= g_.blocks[u];
      // Every extension keeps at least `floor` in common.
      if (floor.count() >= t_) return;
      admissible = next_common.count() < t_;
    }
    clique.push_back(v);
    if (admissible) consider(clique);
    if (next.any()) expand(clique, next, next_common);
    clique.pop_back();
  }

  void expand(std::vector<std::size_t>& clique, Bits candidates, const Bits& common) {
    const std::vector<Coloured> order = colour_classes(candidates, g_.adjacency);
    for (std::size_t k = order.size(); k-- > 0;) {
      if (clock_.stopped() || !can_improve(clique.size() + order[k].colour)) return;
      candidates.reset(order[k].vertex);
      branch(clique, order[k].vertex, candidates, common);
    }
  }

  void consider(const std::vector<std::size_t>& clique) {
    if (!can_improve(clique.size())) return;
    std::lock_guard lock(mutex_);
    if (clique.size() > best_size_.load()) {
      best_size_ = clique.size();
      best_ = clique;
      all_best_.clear();
    }
    if (mode_ == Mode::CollectAll && clique.size() == best_size_.load()) all_best_.push_back(clique);
  }

  const OrderedGraph& g_;
  std::size_t t_;
  bool nontrivial_;
  Mode mode_;
  BudgetClock& clock_;
  std::mutex mutex_;
  std::atomic<std::size_t> best_size_{0};
  std::vector<std::size_t> best_;
  std::vector<std::vector<std::size_t>> all_best_;
};

/// Lexicographically first admissible clique of exactly `size` vertices, in
/// graph (enumeration) order.
class LexFirstClique {
public:
  LexFirstClique(const IntersectionGraph& g, std::size_t size, int t, bool nontrivial, BudgetClock& clock)
      : g_(g), size_(size), t_(static_cast<std::size_t>(t)), nontrivial_(nontrivial), clock_(clock) {
    adjacency_.reserve(g.vertex_count());
    for (std::size_t v = 0; v < g.vertex_count(); ++v) adjacency_.push_back(g.neighbours(v));
  }

  std::optional<std::vector<std::size_t>> find() {
    const std::size_t count = g_.vertex_count();
    Bits all(count);
    for (std::size_t v = 0; v < count; ++v) all.set(v);
    Bits universe(g_.blocks(0).size());
    for (std::size_t b = 0; b < universe.size(); ++b) universe.set(b);
    std::vector<std::size_t> clique;
    if (search(clique, all, universe)) return clique;
    return std::nullopt;
  }

private:
  bool search(std::vector<std::size_t>& clique, const Bits& candidates, const Bits& common) {
    if (clock_.tick()) return false;
    const std::vector<Coloured> colours = colour_classes(candidates, adjacency_);
    const std::size_t bound = colours.empty() ? 0 : colours.back().colour;
    if (clique.size() + bound < size_) return false;

    std::vector<std::size_t> order = candidates.indices();
    for (std::size_t k = 0; k < order.size(); ++k) {
      if (clique.size() + (order.size() - k) < size_) return false;
      const std::size_t v = order[k];
      Bits next = candidates & adjacency_[v];
      for (std::size_t m = 0; m <= k; ++m) next.reset(order[m]);
      Bits next_common;
      if (nontrivial_) {
        next_common = common & g_.blocks(v);
        Bits floor = next_common;
        for (std::size_t u : next.indices()) floor &= g_.blocks(u);
        if (floor.count() >= t_) continue;
      }
      clique.push_back(v);
      if (clique.size() == size_) {
        if (!nontrivial_ || next_common.count() < t_) return true;
      } else if (search(clique, next, next_common)) {
        return true;
      }
      clique.pop_back();
      if (clock_.stopped()) return false;
    }
    return false;
  }

  const IntersectionGraph& g_;
  std::size_t size_;
  std::size_t t_;
  bool nontrivial_;
  BudgetClock& clock_;
  std::vector<Bits> adjacency_;
};

bool admissible_clique(const IntersectionGraph& g, const std::vector<std::size_t>& clique, int t, bool nontrivial) {
  for (std::size_t a = 0; a < clique.size(); ++a)
    for (std::size_t b = a + 1; b < clique.size(); ++b)
      if (!g.adjacent(clique[a], clique[b])) return false;
  if (!nontrivial || clique.empty()) return true;
  Bits common = g.blocks(clique.front());
  for (std::size_t v : clique) common &= g.blocks(v);
  return common.count() < static_cast<std::size_t>(t);
}

/// Best verified clique among the explicit formula families.
std::vector<std::size_t> formula_seed(const IntersectionGraph& g, int t, bool nontrivial) {
  const int n = g.n();
  std::vector<std::vector<std::size_t>> candidates;
  for (int r = 0; t + 2 * r <= n; ++r) {
    const SubsetMask window = SubsetMask::range(1, t + 2 * r);
    std::vector<std::size_t> clique;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if ((fixed_points(g.vertices()[v]) & window).size() >= t + r) clique.push_back(v);
    candidates.push_back(std::move(clique));
  }
  if (nontrivial) {
    for (int i = 2; i <= n - t - 1; ++i) {
      std::vector<std::size_t> clique;
      for (const auto& p : generated_family(h_family(t, i, n)).sorted()) clique.push_back(g.index_of(p));
      candidates.push_back(std::move(clique));
    }
  }
  std::vector<std::size_t> best;
  for (auto& c : candidates)
    if (c.size() > best.size() && admissible_clique(g, c, t, nontrivial)) best = std::move(c);
  return best;
}

PartitionFamily to_family(const IntersectionGraph& g, const std::vector<std::size_t>& clique) {
  PartitionFamily family(g.n());
  for (std::size_t v : clique) family.insert(g.vertices()[v]);
  return family;
}

} // namespace

SearchResult max_t_intersecting(int n, int t, SearchBudget budget, bool nontrivial, SearchOptions options) {
  if (t < 1) throw ArgumentError("max_t_intersecting: t must be >= 1");
  const IntersectionGraph graph(n, t, options.threads);
  const OrderedGraph ordered = degeneracy_order(graph);
  std::vector<std::size_t> label(graph.vertex_count());
  for (std::size_t i = 0; i < ordered.original.size(); ++i) label[ordered.original[i]] = i;

  BudgetClock clock(budget);
  CliqueSearch search(ordered, t, nontrivial, CliqueSearch::Mode::Best, clock);
  std::vector<std::size_t> incumbent;
  if (options.seed_incumbent) {
    incumbent = formula_seed(graph, t, nontrivial);
    std::vector<std::size_t> relabelled;
    for (std::size_t v : incumbent) relabelled.push_back(label[v]);
    search.seed(std::move(relabelled));
  }
  search.run(options.threads);

  SearchResult result;
  result.budget = budget;
  const bool exhausted = clock.stopped();
  std::vector<std::size_t> witness;
  for (std::size_t v : search.best()) witness.push_back(ordered.original[v]);
  std::sort(witness.begin(), witness.end());

  if (!exhausted && !witness.empty()) {
    BudgetClock lex_clock(budget);
    if (auto first = LexFirstClique(graph, witness.size(), t, nontrivial, lex_clock).find())
      witness = std::move(*first);
    else
      result.diagnostics.push_back({"budget-exhausted", "witness",
                                    "lexicographic witness pass ran out of budget; witness is not canonical"});
  }

  if (!admissible_clique(graph, witness, t, nontrivial))
    throw std::logic_error("max_t_intersecting: witness failed verification");
  result.witness = to_family(graph, witness);
  if (!result.witness.empty()) {
    if (!is_t_intersecting(result.witness, t) || (nontrivial && !is_nontrivial(result.witness, t)))
      throw std::logic_error("max_t_intersecting: witness family failed verification");
  }
  result.maximum = BigCount(static_cast<unsigned long>(witness.size()));
  result.budget.nodes_used = clock.nodes();
  result.budget.outcome = exhausted ? SearchBudget::Outcome::BudgetExhausted : SearchBudget::Outcome::Exact;
  if (exhausted)
    result.diagnostics.push_back({"budget-exhausted", "max_t_intersecting",
                                  "search stopped after " + std::to_string(clock.nodes()) +
                                      " nodes; reporting the best family found"});
  return result;
}

StatementCheck verify_statement_s1(int n, int t, SearchBudget budget) {
  if (n > 5) throw CapacityError("verify_statement_s1: n must be <= 5");
  const IntersectionGraph graph(n, t);
  const OrderedGraph ordered = degeneracy_order(graph);
  BudgetClock clock(budget);
  CliqueSearch search(ordered, t, true, CliqueSearch::Mode::CollectAll, clock);
  search.run(1);

  StatementCheck check;
  check.budget = budget;
  check.budget.nodes_used = clock.nodes();
  if (clock.stopped()) {
    check.budget.outcome = SearchBudget::Outcome::BudgetExhausted;
    return check;
  }
  check.maximum = search.best_size();
  if (check.maximum == 0) {
    check.holds = true;
    return check;
  }
  for (const auto& labels : search.all_best()) {
    std::vector<std::size_t> clique;
    for (std::size_t v : labels) clique.push_back(ordered.original[v]);
    const PartitionFamily family = to_family(graph, clique);
    ++check.families_checked;
    const auto common = common_blocks(family);
    if (!common.empty()) ++check.with_common_blocks;
    if (std::any_of(common.begin(), common.end(), [](SubsetMask b) { return b.size() == 1; }))
      ++check.with_common_fixed_points;
  }
  check.holds = check.with_common_blocks == 0;
  return check;
}

} // namespace pext
