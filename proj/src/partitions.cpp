#include "hookblock/partitions.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

namespace hookblock {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (parts_[j] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (j > 0 && parts_[j] > parts_[j - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

Partition Partition::parse(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || end != token.data() + token.size() || value < 0)
      throw std::invalid_argument("malformed partition literal: " + std::string(text));
    parts.push_back(value);
    pos = comma + 1;
  }
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  std::vector<int> result;
  if (parts_.empty()) return Partition();
  result.assign(static_cast<std::size_t>(parts_.front()), 0);
  for (int part : parts_)
    for (int c = 0; c < part; ++c) ++result[static_cast<std::size_t>(c)];
  return Partition(std::move(result));
}

bool Partition::contains(const Partition& inner) const {
  if (inner.length() > length()) return false;
  for (int j = 0; j < inner.length(); ++j)
    if (inner.parts_[static_cast<std::size_t>(j)] > parts_[static_cast<std::size_t>(j)]) return false;
  return true;
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  for (std::size_t j = 0; j < parts_.size(); ++j) {
    if (j) out += ',';
    out += std::to_string(parts_[j]);
  }
  return out;
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

bool dominates_reversed(const Partition& lambda, const Partition& mu) {
  if (lambda.weight() != mu.weight())
    throw std::invalid_argument("dominance comparison undefined for different weights");
  const int len = std::max(lambda.length(), mu.length());
  int a = 0, b = 0;
  for (int j = 0; j < len; ++j) {
    a += lambda[static_cast<std::size_t>(j)];
    b += mu[static_cast<std::size_t>(j)];
    if (a > b) return false;
  }
  return true;
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

void require_prime(int p) {
  if (!is_prime(p)) throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

Partition hook_partition(HookIdx h) {
  require_prime(h.p);
  if (h.i < 0 || h.i > h.p - 1) throw std::invalid_argument("hook index out of range");
  std::vector<int> parts(static_cast<std::size_t>(h.p - h.i), 1);
  parts[0] = h.i + 1;
  return Partition(std::move(parts));
}

std::optional<HookIdx> hook_index(const Partition& lambda, int p) {
  require_prime(p);
  if (lambda.weight() != p) return std::nullopt;
  if (lambda[1] > 1) return std::nullopt;
  return HookIdx{p, lambda[0] - 1};
}

std::vector<Partition> enumerate_partitions(int e, int bound) {
  if (e < 0) throw std::invalid_argument("negative degree");
  if (e > bound) throw std::out_of_range("enumeration bound exceeded");
  std::vector<Partition> out;
  if (e == 0) {
    out.emplace_back();
    return out;
  }
  // Standard successor in reverse-lex order on the multiset of parts.
  std::vector<int> a{e};
  while (true) {
    out.emplace_back(a);
    int ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) break;
    int k = --a.back();
    int rest = ones + 1;
    while (rest > 0) {
      int take = std::min(k, rest);
      a.push_back(take);
      rest -= take;
    }
  }
  return out;
}

}  // namespace hookblock
