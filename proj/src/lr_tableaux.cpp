#include "hookblock/lr_tableaux.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "hookblock/abacus.hpp"

namespace hookblock {

int SkewTableau::at(int row, int col) const {
  return entries[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - inner[static_cast<std::size_t>(row)])];
}

std::vector<int> SkewTableau::content() const {
  std::vector<int> out;
  for (const auto& row : entries)
    for (int v : row) {
      if (static_cast<int>(out.size()) < v) out.resize(static_cast<std::size_t>(v), 0);
      ++out[static_cast<std::size_t>(v - 1)];
    }
  return out;
}

bool is_yamanouchi(const std::vector<int>& word) {
  std::vector<int> count;
  for (int v : word) {
    if (v < 1) return false;
    if (static_cast<int>(count.size()) < v) count.resize(static_cast<std::size_t>(v), 0);
    ++count[static_cast<std::size_t>(v - 1)];
    if (v > 1 && count[static_cast<std::size_t>(v - 1)] > count[static_cast<std::size_t>(v - 2)]) return false;
  }
  return true;
}

namespace {

bool in_skew(const Partition& outer, const Partition& inner, int r, int c) {
  if (r < 0 || c < 0) return false;
  auto row = static_cast<std::size_t>(r);
  return c < outer[row] && c >= inner[row];
}

void check_shape(const Partition& lambda, const Partition& nu, const Partition& mu) {
  if (lambda.weight() + nu.weight() != mu.weight())
    throw std::invalid_argument("weights do not satisfy |lambda| + |nu| = |mu|");
}

struct Cell {
  int r;
  int c;
};

// Backtracking over cells in reading order with lattice-word pruning.
std::vector<SkewTableau> enumerate(const Partition& outer, const Partition& inner, const Partition& content,
                                   const std::vector<Cell>& order,
                                   const std::function<bool(const std::vector<std::vector<int>>&, Cell, int)>& fits) {
  std::vector<SkewTableau> out;
  if (!outer.contains(inner)) return out;
  std::vector<std::vector<int>> grid(static_cast<std::size_t>(outer.length()));
  for (int r = 0; r < outer.length(); ++r) grid[static_cast<std::size_t>(r)].assign(static_cast<std::size_t>(outer[static_cast<std::size_t>(r)]), 0);
  const int letters = content.length();
  std::vector<int> count(static_cast<std::size_t>(letters), 0);
  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (k == order.size()) {
      SkewTableau t{outer, inner, {}};
      for (int r = 0; r < outer.length(); ++r) {
        auto& row = grid[static_cast<std::size_t>(r)];
        t.entries.emplace_back(row.begin() + inner[static_cast<std::size_t>(r)], row.end());
      }
      out.push_back(std::move(t));
      return;
    }
    const Cell cell = order[k];
    for (int v = 1; v <= letters; ++v) {
      auto idx = static_cast<std::size_t>(v - 1);
      if (count[idx] >= content[idx]) continue;
      if (v > 1 && count[idx] + 1 > count[idx - 1]) continue;
      if (!fits(grid, cell, v)) continue;
      ++count[idx];
      grid[static_cast<std::size_t>(cell.r)][static_cast<std::size_t>(cell.c)] = v;
      step(k + 1);
      grid[static_cast<std::size_t>(cell.r)][static_cast<std::size_t>(cell.c)] = 0;
      --count[idx];
    }
  };
  step(0);
  return out;
}

}  // namespace

bool is_semistandard(const SkewTableau& t) {
  for (int r = 0; r < t.outer.length(); ++r)
    for (int c = t.inner[static_cast<std::size_t>(r)]; c < t.outer[static_cast<std::size_t>(r)]; ++c) {
      if (in_skew(t.outer, t.inner, r, c + 1) && t.at(r, c) > t.at(r, c + 1)) return false;
      if (in_skew(t.outer, t.inner, r + 1, c) && t.at(r, c) >= t.at(r + 1, c)) return false;
    }
  return true;
}

std::vector<int> row_reading_word(const SkewTableau& t) {
  std::vector<int> word;
  for (const auto& row : t.entries) word.insert(word.end(), row.rbegin(), row.rend());
  return word;
}

std::vector<int> column_reading_word(const SkewTableau& t) {
  std::vector<int> word;
  for (int c = 0; c < t.outer[0]; ++c)
    for (int r = t.outer.length() - 1; r >= 0; --r)
      if (in_skew(t.outer, t.inner, r, c)) word.push_back(t.at(r, c));
  return word;
}

std::vector<SkewTableau> lr_tableaux(const Partition& lambda, const Partition& nu, const Partition& mu) {
  check_shape(lambda, nu, mu);
  std::vector<Cell> order;
  for (int r = 0; r < mu.length(); ++r)
    for (int c = mu[static_cast<std::size_t>(r)] - 1; c >= lambda[static_cast<std::size_t>(r)]; --c) order.push_back({r, c});
  return enumerate(mu, lambda, nu, order, [&](const auto& grid, Cell cell, int v) {
    if (in_skew(mu, lambda, cell.r, cell.c + 1) && v > grid[static_cast<std::size_t>(cell.r)][static_cast<std::size_t>(cell.c + 1)]) return false;
    if (in_skew(mu, lambda, cell.r - 1, cell.c) && v <= grid[static_cast<std::size_t>(cell.r - 1)][static_cast<std::size_t>(cell.c)]) return false;
    return true;
  });
}

long lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu) {
  return static_cast<long>(lr_tableaux(lambda, nu, mu).size());
}

std::vector<SkewTableau> column_lr_tableaux(const Partition& lambda, const Partition& nu, const Partition& mu) {
  check_shape(lambda, nu, mu);
  std::vector<Cell> order;
  for (int c = 0; c < mu[0]; ++c)
    for (int r = mu.length() - 1; r >= 0; --r)
      if (in_skew(mu, lambda, r, c)) order.push_back({r, c});
  return enumerate(mu, lambda, nu, order, [&](const auto& grid, Cell cell, int v) {
    if (in_skew(mu, lambda, cell.r, cell.c - 1) && v <= grid[static_cast<std::size_t>(cell.r)][static_cast<std::size_t>(cell.c - 1)]) return false;
    if (in_skew(mu, lambda, cell.r + 1, cell.c) && v > grid[static_cast<std::size_t>(cell.r + 1)][static_cast<std::size_t>(cell.c)]) return false;
    return true;
  });
}

long hook_translation_coefficient(int i, const Partition& lambda, const Partition& mu, int p) {
  require_prime(p);
  if (i < 0 || i > p - 1) throw std::invalid_argument("hook index out of range");
  if (mu.weight() != lambda.weight() + p) throw std::invalid_argument("|mu| must equal |lambda| + p");
  std::vector<int> content(static_cast<std::size_t>(i + 1), 1);
  content[0] = p - i;
  return static_cast<long>(column_lr_tableaux(lambda, Partition(content), mu).size());
}

std::map<Partition, long> theta_multiplicities(const Partition& core, const Partition& nu, int p) {
  require_prime(p);
  if (!is_p_core(core, p)) throw std::invalid_argument(core.to_string() + " is not a p-core");
  std::map<Partition, long> out;
  for (const Partition& mu : enumerate_partitions(core.weight() + nu.weight())) {
    if (!mu.contains(core) || !mu.contains(nu)) continue;
    if (p_core_and_weight(mu, p).core != core) continue;
    long c = lr_coefficient(core, nu, mu);
    if (c) out.emplace(mu, c);
  }
  return out;
}

}  // namespace hookblock
