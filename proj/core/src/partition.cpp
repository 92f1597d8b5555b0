#include "pext/partition.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace pext {

namespace {

void check_element(int element, int n, const char* what) {
  if (element < 1 || element > n)
    throw ArgumentError(std::string(what) + ": element " + std::to_string(element) + " outside [1, " +
                        std::to_string(n) + "]");
}

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    const auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc())
      throw ArgumentError("cannot parse element list '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
  }
  return out;
}

} // namespace

SetPartition SetPartition::from_blocks(int n, std::vector<SubsetMask> blocks) {
  if (n < 0 || n > kMaxGround) throw ArgumentError("ground set size out of range: " + std::to_string(n));
  SubsetMask seen;
  for (SubsetMask b : blocks) {
    if (b.empty()) throw ArgumentError("partition has an empty block");
    if (!(b & seen).empty()) throw ArgumentError("partition blocks overlap");
    seen = seen | b;
  }
  if (seen != SubsetMask::full(n)) throw ArgumentError("partition blocks do not cover [" + std::to_string(n) + "]");
  std::sort(blocks.begin(), blocks.end(),
            [](SubsetMask a, SubsetMask b) { return a.min_element() < b.min_element(); });
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::from_rgs(std::span<const std::uint8_t> rgs) {
  std::vector<SubsetMask> blocks;
  for (std::size_t i = 0; i < rgs.size(); ++i) {
    const std::size_t k = rgs[i];
    if (k > blocks.size()) throw ArgumentError("not a restricted growth string");
    if (k == blocks.size()) blocks.emplace_back();
    blocks[k].insert(static_cast<int>(i) + 1);
  }
  return SetPartition(static_cast<int>(rgs.size()), std::move(blocks));
}

SetPartition SetPartition::discrete(int n) {
  std::vector<SubsetMask> blocks;
  blocks.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) blocks.push_back(SubsetMask::single(i));
  return SetPartition(n, std::move(blocks));
}

SetPartition SetPartition::parse(std::string_view text, int n) {
  std::vector<SubsetMask> blocks;
  int max_element = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto open = text.find('{', pos);
    const auto gap = text.substr(pos, open == std::string_view::npos ? std::string_view::npos : open - pos);
    if (gap.find_first_not_of(" |\t\r") != std::string_view::npos)
      throw ArgumentError("unexpected text in partition '" + std::string(text) + "'");
    if (open == std::string_view::npos) break;
    const auto close = text.find('}', open);
    if (close == std::string_view::npos) throw ArgumentError("unterminated block in '" + std::string(text) + "'");
    SubsetMask block;
    for (int e : parse_int_list(text.substr(open + 1, close - open - 1))) {
      if (e < 1 || e > kMaxGround) throw ArgumentError("element out of range in '" + std::string(text) + "'");
      if (block.contains(e)) throw ArgumentError("repeated element in '" + std::string(text) + "'");
      block.insert(e);
      max_element = std::max(max_element, e);
    }
    blocks.push_back(block);
    pos = close + 1;
  }
  return from_blocks(n > 0 ? n : max_element, std::move(blocks));
}

SubsetMask SetPartition::block_of(int element) const {
  for (SubsetMask b : blocks_)
    if (b.contains(element)) return b;
  throw ArgumentError("element " + std::to_string(element) + " not in ground set");
}

bool SetPartition::has_block(SubsetMask block) const {
  if (block.empty() || block.max_element() > n_) return false;
  return block_of(block.min_element()) == block;
}

std::vector<std::uint8_t> SetPartition::rgs() const {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(n_));
  for (std::size_t k = 0; k < blocks_.size(); ++k)
    for (int e : blocks_[k].elements()) out[static_cast<std::size_t>(e - 1)] = static_cast<std::uint8_t>(k);
  return out;
}

std::string SetPartition::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < blocks_.size(); ++k) {
    if (k != 0) out += '|';
    out += '{' + blocks_[k].to_string() + '}';
  }
  return out;
}

bool SetPartition::operator<(const SetPartition& other) const {
  if (n_ != other.n_) return n_ < other.n_;
  return rgs() < other.rgs();
}

std::size_t SetPartitionHash::operator()(const SetPartition& p) const noexcept {
  std::size_t h = static_cast<std::size_t>(p.n());
  for (SubsetMask b : p.blocks()) h ^= SubsetMaskHash{}(b) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

PartitionEnumerator::PartitionEnumerator(int n) : n_(n) {
  if (n < 1 || n > kMaxEnumerationGround)
    throw ArgumentError("enumerate_partitions: n must lie in [1, " + std::to_string(kMaxEnumerationGround) + "]");
  rgs_.assign(static_cast<std::size_t>(n), 0);
  prefix_max_.assign(static_cast<std::size_t>(n), 0);
}

bool PartitionEnumerator::next(SetPartition& out) {
  if (done_) return false;
  if (started_) {
    // prefix_max_[i] = max(rgs_[0..i-1]); position i may grow up to prefix_max_[i] + 1.
    int i = n_ - 1;
    while (i > 0 && rgs_[static_cast<std::size_t>(i)] > prefix_max_[static_cast<std::size_t>(i)]) --i;
    if (i == 0) {
      done_ = true;
      return false;
    }
    ++rgs_[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < n_; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      rgs_[uj] = 0;
      prefix_max_[uj] = std::max(prefix_max_[uj - 1], rgs_[uj - 1]);
    }
  }
  started_ = true;
  out = SetPartition::from_rgs(rgs_);
  return true;
}

std::vector<SetPartition> enumerate_partitions(int n) {
  std::vector<SetPartition> out;
  for_each_partition(n, [&](const SetPartition& p) { out.push_back(p); });
  return out;
}

SubsetMask fixed_points(const SetPartition& p) {
  SubsetMask out;
  for (SubsetMask b : p.blocks())
    if (b.size() == 1) out = out | b;
  return out;
}

int common_parts(const SetPartition& p, const SetPartition& q) {
  if (p.n() != q.n()) throw ArgumentError("common_parts: ground sets differ");
  int count = 0;
  for (SubsetMask b : p.blocks())
    if (q.block_of(b.min_element()) == b) ++count;
  return count;
}

PartitionFamily::PartitionFamily(int n, std::span<const SetPartition> members) : n_(n) {
  for (const auto& p : members) insert(p);
}

bool PartitionFamily::insert(SetPartition p) {
  if (p.n() != n_)
    throw ArgumentError("partition over [" + std::to_string(p.n()) + "] added to family over [" +
                        std::to_string(n_) + "]");
  return members_.insert(std::move(p)).second;
}

std::vector<SetPartition> PartitionFamily::sorted() const {
  std::vector<SetPartition> out(members_.begin(), members_.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::string PartitionFamily::to_string() const {
  std::string out;
  for (const auto& p : sorted()) out += p.to_string() + '\n';
  return out;
}

PartitionFamily PartitionFamily::parse(std::string_view text, int n) {
  PartitionFamily family(n);
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (line.find('{') == std::string::npos) continue;
    family.insert(SetPartition::parse(line, n));
  }
  return family;
}

bool is_t_intersecting(const PartitionFamily& family, int t) {
  if (t < 1) throw ArgumentError("is_t_intersecting: t must be >= 1");
  const std::vector<SetPartition> members(family.begin(), family.end());
  for (std::size_t a = 0; a < members.size(); ++a)
    for (std::size_t b = a + 1; b < members.size(); ++b)
      if (common_parts(members[a], members[b]) < t) return false;
  return true;
}

std::vector<SubsetMask> common_blocks(const PartitionFamily& family) {
  if (family.empty()) throw ArgumentError("common_blocks: empty family");
  const auto& first = *family.begin();
  std::vector<SubsetMask> out(first.blocks().begin(), first.blocks().end());
  for (const auto& p : family)
    std::erase_if(out, [&](SubsetMask b) { return !p.has_block(b); });
  return out;
}

bool is_nontrivial(const PartitionFamily& family, int t) {
  if (family.empty()) throw ArgumentError("is_nontrivial: empty family");
  return static_cast<int>(common_blocks(family).size()) < t;
}

SetPartition fix_op(int i, int j, const SetPartition& p) {
  check_element(i, p.n(), "fix_op");
  check_element(j, p.n(), "fix_op");
  if (i == j) throw ArgumentError("fix_op: i and j must differ");
  const SubsetMask home = p.block_of(i);
  if (!home.contains(j)) return p;
  std::vector<SubsetMask> blocks;
  blocks.reserve(p.block_count() + 1);
  for (SubsetMask b : p.blocks())
    if (b != home) blocks.push_back(b);
  blocks.push_back(SubsetMask::single(i));
  blocks.push_back(home - SubsetMask::single(i));
  return SetPartition::from_blocks(p.n(), std::move(blocks));
}

namespace {

template <typename Op>
PartitionFamily apply_collision_aware(const PartitionFamily& family, Op op) {
  PartitionFamily out(family.n());
  for (const auto& p : family) {
    SetPartition image = op(p);
    out.insert(family.contains(image) ? p : std::move(image));
  }
  if (out.size() != family.size()) throw std::logic_error("family operator changed the family size");
  return out;
}

} // namespace

PartitionFamily fix_family_op(int i, int j, const PartitionFamily& family) {
  if (i == j) throw ArgumentError("fix_family_op: i and j must differ");
  check_element(i, family.n(), "fix_family_op");
  check_element(j, family.n(), "fix_family_op");
  return apply_collision_aware(family, [&](const SetPartition& p) { return fix_op(i, j, p); });
}

SetPartition shift_op(int v, int w, const SetPartition& p) {
  check_element(v, p.n(), "shift_op");
  check_element(w, p.n(), "shift_op");
  if (v == w) throw ArgumentError("shift_op: v and w must differ");
  if (!p.fixes(w) || p.fixes(v)) return p;
  // Transposition (v w): w takes v's place in its block, v becomes a singleton.
  std::vector<SubsetMask> blocks;
  blocks.reserve(p.block_count());
  for (SubsetMask b : p.blocks()) {
    if (b == SubsetMask::single(w))
      blocks.push_back(SubsetMask::single(v));
    else if (b.contains(v))
      blocks.push_back((b - SubsetMask::single(v)) | SubsetMask::single(w));
    else
      blocks.push_back(b);
  }
  return SetPartition::from_blocks(p.n(), std::move(blocks));
}

PartitionFamily shift_family_op(int v, int w, const PartitionFamily& family, bool allow_any_order) {
  if (v == w) throw ArgumentError("shift_family_op: v and w must differ");
  if (!allow_any_order && v > w) throw ArgumentError("shift_family_op: requires v < w");
  check_element(v, family.n(), "shift_family_op");
  check_element(w, family.n(), "shift_family_op");
  return apply_collision_aware(family, [&](const SetPartition& p) { return shift_op(v, w, p); });
}

long long compression_measure(const SetPartition& p) {
  const SubsetMask f = fixed_points(p);
  long long measure = static_cast<long long>(p.n()) * f.size();
  for (int i : f.elements()) measure += p.n() - i;
  return measure;
}

namespace {

long long family_measure(const PartitionFamily& family) {
  long long total = 0;
  for (const auto& p : family) total += compression_measure(p);
  return total;
}

} // namespace

PartitionFamily fix_closure(const PartitionFamily& family) {
  const int n = family.n();
  PartitionFamily current = family;
  for (bool changed = true; changed;) {
    changed = false;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        if (i == j) continue;
        PartitionFamily next = fix_family_op(i, j, current);
        if (next == current) continue;
        current = std::move(next);
        changed = true;
      }
  }
  return current;
}

PartitionFamily compress(const PartitionFamily& family, int t, CompressStats* stats) {
  if (!is_t_intersecting(family, t)) throw ArgumentError("compress: family is not t-intersecting");
  const int n = family.n();
  PartitionFamily current = family;
  long long measure = family_measure(current);
  CompressStats local;
  local.initial_measure = measure;

  // Each productive step strictly raises the measure, which is bounded by
  // |family| * n * (3n - 1) / 2, so the loop terminates.
  auto step = [&](PartitionFamily next) {
    if (next == current) return false;
    const long long next_measure = family_measure(next);
    if (next_measure <= measure) throw std::logic_error("compress: termination measure did not increase");
    measure = next_measure;
    current = std::move(next);
    ++local.productive_steps;
    return true;
  };

  bool changed_in_sweep = true;
  while (changed_in_sweep) {
    changed_in_sweep = false;
    ++local.sweeps;
    changed_in_sweep |= step(fix_closure(current));
    for (bool changed = true; changed;) {
      changed = false;
      for (int v = 1; v <= n; ++v)
        for (int w = v + 1; w <= n; ++w)
          if (step(shift_family_op(v, w, current))) changed = true;
      changed_in_sweep |= changed;
    }
  }

  local.final_measure = measure;
  if (stats != nullptr) *stats = local;
  return current;
}

} // namespace pext
