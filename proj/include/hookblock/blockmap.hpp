#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookblock/closed_forms.hpp"
#include "hookblock/partitions.hpp"

namespace hookblock {

struct BlockLabel {
  int e = 0;
  int p = 2;
  Partition core;
  int weight = 0;
};

struct Block {
  BlockLabel label;
  std::vector<Partition> members;
};

// Partitions of e grouped by p-core, in order of first appearance in reverse-lex order.
std::vector<Block> blocks(int e, int p);

// mu_0, ..., mu_{p-1} for a p-core.
std::vector<Partition> weight1_labels(const Partition& core, int p);

// Hook-block answers re-indexed through i -> mu_i: labels, decomposition matrix,
// all Ext tables and both Yoneda models. Throws if core is not a p-core.
nlohmann::json weight1_block_tables(const Partition& core, int p);

// Labels ordered by reversed dominance exactly as the hooks are, in both directions.
CheckReport label_order_check(const Partition& core, int p);

struct WeightBoundReport {
  int e = 0;
  int p = 2;
  std::size_t partitions = 0;
  int max_weight = 0;
  bool ok = false;
};
// Every partition of e has p-weight <= 1; requires p < e < 2p.
WeightBoundReport weight_bound_check(int e, int p);

struct ThetaCounterexample {
  std::map<Partition, long> factors;
  bool shared_core = false;
  bool not_schur = false;  // more than one Schur factor
};
ThetaCounterexample theta_counterexample();

}  // namespace hookblock
