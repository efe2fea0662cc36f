#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace hookblock {

inline constexpr int kDefaultEnumerationBound = 60;

// Weakly decreasing sequence of positive integers; trailing zeros are stripped.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  // "3,1,1" or "0" for the empty partition.
  static Partition parse(std::string_view text);

  const std::vector<int>& parts() const { return parts_; }
  int weight() const;
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based row access with implicit zero parts beyond the length.
  int operator[](std::size_t row) const { return row < parts_.size() ? parts_[row] : 0; }

  Partition conjugate() const;
  bool contains(const Partition& inner) const;
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& lambda);

// Partial sums of lambda are all <= those of mu (the reversed dominance order).
// Throws std::invalid_argument when the weights differ.
bool dominates_reversed(const Partition& lambda, const Partition& mu);

struct HookIdx {
  int p = 2;
  int i = 0;
  auto operator<=>(const HookIdx&) const = default;
};

bool is_prime(int p);
void require_prime(int p);

// (i+1, 1^{p-i-1})
Partition hook_partition(HookIdx h);
std::optional<HookIdx> hook_index(const Partition& lambda, int p);

// All partitions of e in reverse-lexicographic order, starting with (e).
std::vector<Partition> enumerate_partitions(int e, int bound = kDefaultEnumerationBound);

}  // namespace hookblock
