#include "pext/setfam.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace pext {

namespace {

bool family_order(SubsetMask a, SubsetMask b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

std::vector<int> parse_elements(std::string_view line) {
  std::vector<int> out;
  std::string token;
  std::istringstream in{std::string(line)};
  while (std::getline(in, token, ',')) {
    const auto first = token.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(token.substr(first), &used));
      if (token.find_first_not_of(" \t\r", first + used) != std::string::npos) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw ArgumentError("cannot parse set '" + std::string(line) + "'");
    }
  }
  return out;
}

/// Alive-generator set for the upset counting search.
class GeneratorMask {
public:
  explicit GeneratorMask(std::size_t count = 0) : words_((count + 63) / 64, 0) {}
  void set(std::size_t g) { words_[g / 64] |= std::uint64_t{1} << (g % 64); }
  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w != 0; });
  }
  bool intersects(const GeneratorMask& o) const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if ((words_[k] & o.words_[k]) != 0) return true;
    return false;
  }
  GeneratorMask minus(const GeneratorMask& o) const {
    GeneratorMask out = *this;
    for (std::size_t k = 0; k < words_.size(); ++k) out.words_[k] &= ~o.words_[k];
    return out;
  }

private:
  std::vector<std::uint64_t> words_;
};

/// Counts subsets of the support, by cardinality, that contain some generator.
/// Elements are decided in increasing order; a branch dies once every generator
/// lost an element, and is closed by binomials once a generator is complete.
class UpsetCounter {
public:
  UpsetCounter(const std::vector<SubsetMask>& generators, SubsetMask support) : elements_(support.elements()) {
    const std::size_t m = elements_.size();
    containing_.assign(m, GeneratorMask(generators.size()));
    completes_.assign(m, GeneratorMask(generators.size()));
    for (std::size_t g = 0; g < generators.size(); ++g) {
      for (std::size_t pos = 0; pos < m; ++pos) {
        if (!generators[g].contains(elements_[pos])) continue;
        containing_[pos].set(g);
        if (elements_[pos] == generators[g].max_element()) completes_[pos].set(g);
      }
    }
    binom_.assign(m + 1, std::vector<BigCount>(m + 1, 0));
    for (std::size_t r = 0; r <= m; ++r) {
      binom_[r][0] = 1;
      for (std::size_t k = 1; k <= r; ++k) binom_[r][k] = binom_[r - 1][k - 1] + (k < r ? binom_[r - 1][k] : BigCount(0));
    }
    profile_.assign(m + 1, 0);
  }

  std::vector<BigCount> run(std::size_t generator_count) {
    GeneratorMask alive(generator_count);
    for (std::size_t g = 0; g < generator_count; ++g) alive.set(g);
    if (generator_count > 0) visit(0, 0, alive);
    return profile_;
  }

private:
  void visit(std::size_t pos, std::size_t included, const GeneratorMask& alive) {
    const std::size_t m = elements_.size();
    if (pos == m) return;
    const std::size_t rest = m - pos - 1;

    if (completes_[pos].intersects(alive)) {
      for (std::size_t j = 0; j <= rest; ++j) profile_[included + 1 + j] += binom_[rest][j];
    } else {
      visit(pos + 1, included + 1, alive);
    }

    const GeneratorMask excluded = alive.minus(containing_[pos]);
    if (excluded.any()) visit(pos + 1, included, excluded);
  }

  std::vector<int> elements_;
  std::vector<GeneratorMask> containing_;
  std::vector<GeneratorMask> completes_;
  std::vector<std::vector<BigCount>> binom_;
  std::vector<BigCount> profile_;
};

} // namespace

SetFamily::SetFamily(int n) : n_(n) {
  if (n < 0 || n > kMaxGround) throw ArgumentError("set family ground set out of range: " + std::to_string(n));
}

SetFamily::SetFamily(int n, std::vector<SubsetMask> sets, bool is_upset) : SetFamily(n) {
  const SubsetMask ground = SubsetMask::full(n);
  for (SubsetMask s : sets)
    if (!ground.contains(s)) throw ArgumentError("set {" + s.to_string() + "} is not a subset of [" + std::to_string(n) + "]");
  std::sort(sets.begin(), sets.end(), family_order);
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  sets_ = std::move(sets);
  is_upset_ = is_upset;
}

bool SetFamily::contains(SubsetMask s) const {
  return std::binary_search(sets_.begin(), sets_.end(), s, family_order);
}

SubsetMask SetFamily::support() const {
  SubsetMask out;
  for (SubsetMask s : sets_) out = out | s;
  return out;
}

std::vector<std::size_t> SetFamily::size_profile() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(n_) + 1, 0);
  for (SubsetMask s : sets_) ++out[static_cast<std::size_t>(s.size())];
  return out;
}

std::string SetFamily::to_string() const {
  std::string out;
  for (SubsetMask s : sets_) out += s.to_string() + '\n';
  return out;
}

SetFamily SetFamily::parse(std::string_view text, int n) {
  std::vector<SubsetMask> sets;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    SubsetMask s;
    for (int e : parse_elements(line)) {
      if (e < 1 || e > n) throw ArgumentError("element " + std::to_string(e) + " outside [1, " + std::to_string(n) + "]");
      s.insert(e);
    }
    sets.push_back(s);
  }
  return SetFamily(n, std::move(sets));
}

bool in_upset(const SetFamily& generators, SubsetMask s) {
  return std::any_of(generators.sets().begin(), generators.sets().end(), [&](SubsetMask g) { return s.contains(g); });
}

SetFamily upset_closure(const SetFamily& family) {
  const int n = family.n();
  if (n > kMaxClosureGround)
    throw CapacityError("upset_closure: n = " + std::to_string(n) + " exceeds materialization limit " +
                        std::to_string(kMaxClosureGround));
  const SetFamily generators = minimal_elements(family);
  std::vector<SubsetMask> members;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t bits = 0; bits < count; ++bits)
    if (in_upset(generators, SubsetMask(bits))) members.emplace_back(bits);
  return SetFamily(n, std::move(members), true);
}

SetFamily minimal_elements(const SetFamily& family) {
  // Sorted by cardinality, so any strict subset of s appears before s.
  std::vector<SubsetMask> minimal;
  for (SubsetMask s : family.sets()) {
    const bool dominated =
        std::any_of(minimal.begin(), minimal.end(), [&](SubsetMask m) { return m != s && s.contains(m); });
    if (!dominated) minimal.push_back(s);
  }
  return SetFamily(family.n(), std::move(minimal));
}

std::vector<BigCount> upset_profile(const SetFamily& generators) {
  const int n = generators.n();
  const SetFamily minimal = minimal_elements(generators);
  const SubsetMask support = minimal.support();
  const auto m = static_cast<std::size_t>(support.size());

  std::vector<BigCount> inside;
  if (minimal.contains(SubsetMask())) {
    // The empty set generates everything.
    inside.assign(m + 1, 0);
    for (std::size_t k = 0; k <= m; ++k) mpz_bin_uiui(inside[k].get_mpz_t(), m, k);
  } else {
    std::vector<SubsetMask> gens(minimal.sets().begin(), minimal.sets().end());
    inside = UpsetCounter(gens, support).run(gens.size());
  }

  // Elements outside the support are free.
  const std::size_t outside = static_cast<std::size_t>(n) - m;
  std::vector<BigCount> profile(static_cast<std::size_t>(n) + 1, 0);
  BigCount binom;
  for (std::size_t k = 0; k <= m; ++k) {
    if (inside[k] == 0) continue;
    for (std::size_t j = 0; j <= outside; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), outside, j);
      profile[k + j] += inside[k] * binom;
    }
  }
  return profile;
}

BigCount generated_size(const SetFamily& generators, const BellTable& table) {
  const int n = generators.n();
  if (n > table.capacity()) throw CapacityError("generated_size: n exceeds bell table capacity");
  const std::vector<BigCount> profile = upset_profile(generators);
  BigCount total = 0;
  for (int k = 0; k <= n; ++k)
    if (profile[static_cast<std::size_t>(k)] != 0) total += profile[static_cast<std::size_t>(k)] * table.bell_reduced(n - k);
  return total;
}

PartitionFamily generated_family(const SetFamily& generators) {
  const SetFamily minimal = minimal_elements(generators);
  PartitionFamily out(generators.n());
  for_each_partition(generators.n(), [&](const SetPartition& p) {
    if (in_upset(minimal, fixed_points(p))) out.insert(p);
  });
  return out;
}

bool is_t_intersecting_setfam(const SetFamily& family, int t) {
  if (t < 1) throw ArgumentError("is_t_intersecting_setfam: t must be >= 1");
  const auto sets = family.sets();
  for (std::size_t a = 0; a < sets.size(); ++a)
    for (std::size_t b = a + 1; b < sets.size(); ++b)
      if ((sets[a] & sets[b]).size() < t) return false;
  return true;
}

} // namespace pext
