#pragma once

#include <string>
#include <vector>

#include "hookblock/partitions.hpp"

namespace hookblock {

// beta[l] = lambda_{l+1} - (l+1); strictly decreasing, length = number of beads.
struct BetaSeq {
  std::vector<int> betas;
  int beads() const { return static_cast<int>(betas.size()); }
  auto operator<=>(const BetaSeq&) const = default;
};

struct RimHookDescriptor {
  int hand_row = 1;  // 1-based row holding the north-east-most cell
  int arm = 0;       // the hook (arm+1, 1^{size-arm-1}) it corresponds to
  int size = 0;
  auto operator<=>(const RimHookDescriptor&) const = default;
};

struct CoreWeight {
  Partition core;
  int weight = 0;
};

BetaSeq beta_sequence(const Partition& lambda, int beads);
Partition partition_of(const BetaSeq& beta);

// Smallest multiple of p that is at least length(lambda) + p.
int standard_bead_count(const Partition& lambda, int p);

CoreWeight p_core_and_weight(const Partition& lambda, int p);
bool is_p_core(const Partition& lambda, int p);

std::vector<RimHookDescriptor> removable_rim_hooks(const Partition& lambda, int p);
Partition remove_rim_hook(const Partition& lambda, const RimHookDescriptor& d);

// The weight-1 partition with the given p-core whose rim hook has arm i.
Partition mu_index(const Partition& core, int p, int i);

// Exhaustive enumeration of partitions of |core|+p with p-core equal to core.
std::vector<Partition> weight1_diagrams(const Partition& core, int p);

// Runner diagram: one line per level, 'o' bead, '.' gap.
std::string abacus_diagram(const Partition& lambda, int p);

}  // namespace hookblock
