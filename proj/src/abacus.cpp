#include "hookblock/abacus.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace hookblock {

BetaSeq beta_sequence(const Partition& lambda, int beads) {
  if (beads < lambda.length()) throw std::invalid_argument("too few beads for partition");
  BetaSeq out;
  out.betas.reserve(static_cast<std::size_t>(beads));
  for (int l = 1; l <= beads; ++l) out.betas.push_back(lambda[static_cast<std::size_t>(l - 1)] - l);
  return out;
}

Partition partition_of(const BetaSeq& beta) {
  std::vector<int> parts;
  for (std::size_t l = 0; l < beta.betas.size(); ++l) {
    if (l > 0 && beta.betas[l] >= beta.betas[l - 1])
      throw std::invalid_argument("beta sequence must be strictly decreasing");
    parts.push_back(beta.betas[l] + static_cast<int>(l) + 1);
  }
  for (int part : parts)
    if (part < 0) throw std::invalid_argument("beta sequence encodes a negative part");
  return Partition(std::move(parts));
}

int standard_bead_count(const Partition& lambda, int p) {
  int b = lambda.length() + p;
  return (b + p - 1) / p * p;
}

namespace {

// Bead positions (shifted by b, hence non-negative), decreasing.
std::vector<int> positions(const Partition& lambda, int b) {
  BetaSeq beta = beta_sequence(lambda, b);
  for (int& x : beta.betas) x += b;
  return beta.betas;
}

Partition from_positions(std::vector<int> pos, int b) {
  std::sort(pos.begin(), pos.end(), std::greater<>());
  for (int& x : pos) x -= b;
  return partition_of(BetaSeq{std::move(pos)});
}

}  // namespace

CoreWeight p_core_and_weight(const Partition& lambda, int p) {
  require_prime(p);
  const int b = standard_bead_count(lambda, p);
  std::vector<int> pos = positions(lambda, b);
  std::vector<std::vector<int>> runner(static_cast<std::size_t>(p));
  for (int x : pos) runner[static_cast<std::size_t>(x % p)].push_back(x / p);
  int weight = 0;
  std::vector<int> core_pos;
  for (int r = 0; r < p; ++r) {
    auto& levels = runner[static_cast<std::size_t>(r)];
    std::sort(levels.begin(), levels.end());
    for (std::size_t k = 0; k < levels.size(); ++k) {
      weight += levels[k] - static_cast<int>(k);
      core_pos.push_back(static_cast<int>(k) * p + r);
    }
  }
  return CoreWeight{from_positions(std::move(core_pos), b), weight};
}

bool is_p_core(const Partition& lambda, int p) { return p_core_and_weight(lambda, p).weight == 0; }

std::vector<RimHookDescriptor> removable_rim_hooks(const Partition& lambda, int p) {
  require_prime(p);
  const int b = standard_bead_count(lambda, p);
  std::vector<int> pos = positions(lambda, b);
  std::vector<char> occupied(static_cast<std::size_t>(pos.front() + 1), 0);
  for (int x : pos) occupied[static_cast<std::size_t>(x)] = 1;
  std::vector<RimHookDescriptor> out;
  for (std::size_t l = 0; l < pos.size(); ++l) {
    const int x = pos[l];
    if (x - p < 0 || occupied[static_cast<std::size_t>(x - p)]) continue;
    int between = 0;
    for (int y = x - p + 1; y < x; ++y) between += occupied[static_cast<std::size_t>(y)];
    out.push_back(RimHookDescriptor{static_cast<int>(l) + 1, p - 1 - between, p});
  }
  return out;
}

Partition remove_rim_hook(const Partition& lambda, const RimHookDescriptor& d) {
  if (d.size < 2 || !is_prime(d.size)) throw std::invalid_argument("invalid rim hook descriptor");
  auto valid = removable_rim_hooks(lambda, d.size);
  if (std::find(valid.begin(), valid.end(), d) == valid.end())
    throw std::invalid_argument("rim hook descriptor is not removable from " + lambda.to_string());
  // Enough implicit beads that the lowered entry stays above the last one.
  BetaSeq padded = beta_sequence(lambda, lambda.length() + d.size);
  padded.betas[static_cast<std::size_t>(d.hand_row - 1)] -= d.size;
  std::sort(padded.betas.begin(), padded.betas.end(), std::greater<>());
  return partition_of(padded);
}

Partition mu_index(const Partition& core, int p, int i) {
  require_prime(p);
  if (i < 0 || i > p - 1) throw std::invalid_argument("hook index out of range");
  if (!is_p_core(core, p)) throw std::invalid_argument(core.to_string() + " is not a p-core");
  const int b = standard_bead_count(core, p);
  std::vector<int> pos = positions(core, b);
  std::vector<char> occupied(static_cast<std::size_t>(pos.front() + p + 1), 0);
  for (int x : pos) occupied[static_cast<std::size_t>(x)] = 1;
  std::vector<int> candidates;
  for (int x : pos) {
    if (occupied[static_cast<std::size_t>(x + p)]) continue;
    int between = 0;
    for (int y = x + 1; y < x + p; ++y) between += occupied[static_cast<std::size_t>(y)];
    if (between == p - i - 1) candidates.push_back(x);
  }
  if (candidates.size() != 1)
    throw std::logic_error("abacus slide for mu_index is not unique");
  std::replace(pos.begin(), pos.end(), candidates.front(), candidates.front() + p);
  return from_positions(std::move(pos), b);
}

namespace {

using CoreGroups = std::map<Partition, std::vector<Partition>>;

const CoreGroups& groups_for(int total, int p) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, CoreGroups> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(total, p);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  CoreGroups groups;
  for (const Partition& lambda : enumerate_partitions(total)) {
    CoreWeight cw = p_core_and_weight(lambda, p);
    groups[cw.core].push_back(lambda);
  }
  return cache.emplace(key, std::move(groups)).first->second;
}

}  // namespace

std::vector<Partition> weight1_diagrams(const Partition& core, int p) {
  require_prime(p);
  const int total = core.weight() + p;
  if (total > kDefaultEnumerationBound) throw std::out_of_range("enumeration bound exceeded");
  const CoreGroups& groups = groups_for(total, p);
  auto it = groups.find(core);
  if (it == groups.end()) return {};
  return it->second;
}

std::string abacus_diagram(const Partition& lambda, int p) {
  require_prime(p);
  const int b = standard_bead_count(lambda, p);
  std::vector<int> pos = positions(lambda, b);
  const int top = pos.front();
  std::vector<char> occupied(static_cast<std::size_t>(top + 1), 0);
  for (int x : pos) occupied[static_cast<std::size_t>(x)] = 1;
  std::string out;
  for (int level = 0; level * p <= top; ++level) {
    for (int r = 0; r < p; ++r) {
      int x = level * p + r;
      if (r) out += ' ';
      out += (x <= top && occupied[static_cast<std::size_t>(x)]) ? 'o' : '.';
    }
    out += '\n';
  }
  return out;
}

}  // namespace hookblock
