#include "hookblock/blockmap.hpp"

#include <stdexcept>

#include "hookblock/abacus.hpp"
#include "hookblock/lr_tableaux.hpp"

namespace hookblock {

std::vector<Block> blocks(int e, int p) {
  require_prime(p);
  std::vector<Block> out;
  std::map<Partition, std::size_t> where;
  for (const Partition& lambda : enumerate_partitions(e)) {
    const CoreWeight cw = p_core_and_weight(lambda, p);
    auto it = where.find(cw.core);
    if (it == where.end()) {
      it = where.emplace(cw.core, out.size()).first;
      out.push_back(Block{BlockLabel{e, p, cw.core, cw.weight}, {}});
    }
    out[it->second].members.push_back(lambda);
  }
  return out;
}

std::vector<Partition> weight1_labels(const Partition& core, int p) {
  require_prime(p);
  if (!is_p_core(core, p)) throw std::invalid_argument("not a p-core: " + core.to_string());
  std::vector<Partition> out;
  for (int i = 0; i < p; ++i) out.push_back(mu_index(core, p, i));
  return out;
}

namespace {

std::string object_label(Kind k, const Partition& mu) { return std::string(1, kind_letter(k)) + "(" + mu.to_string() + ")"; }

}  // namespace

nlohmann::json weight1_block_tables(const Partition& core, int p) {
  const std::vector<Partition> labels = weight1_labels(core, p);
  nlohmann::json j;
  j["p"] = p;
  j["core"] = core.to_string();
  nlohmann::json names = nlohmann::json::array();
  for (const Partition& mu : labels) names.push_back(mu.to_string());
  j["labels"] = names;
  j["decomposition"] = decomposition_matrix(p);
  nlohmann::json ext = nlohmann::json::array();
  const Kind kinds[] = {Kind::Simple, Kind::Schur, Kind::Weyl};
  for (Kind a : kinds)
    for (Kind b : kinds)
      for (int m = 0; m < p; ++m)
        for (int n = 0; n < p; ++n) {
          ExtTable t = ext_table({a, m}, {b, n}, p);
          t.source = object_label(a, labels[static_cast<std::size_t>(m)]);
          t.target = object_label(b, labels[static_cast<std::size_t>(n)]);
          ext.push_back(t.to_json());
        }
  j["ext"] = ext;
  j["yoneda"] = {{"schur", model_schur_yoneda(p).to_json()}, {"simple", model_simple_yoneda(p).to_json()}};
  return j;
}

CheckReport label_order_check(const Partition& core, int p) {
  CheckReport rep;
  const std::vector<Partition> labels = weight1_labels(core, p);
  for (int i = 0; i < p; ++i)
    for (int k = 0; k < p; ++k) {
      const bool hooks = dominates_reversed(hook_partition({p, i}), hook_partition({p, k}));
      const bool mus = dominates_reversed(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(k)]);
      if (hooks && !mus) rep.fail("order not preserved at (" + std::to_string(i) + "," + std::to_string(k) + ")");
      if (mus && !hooks) rep.fail("order not reflected at (" + std::to_string(i) + "," + std::to_string(k) + ")");
    }
  return rep;
}

WeightBoundReport weight_bound_check(int e, int p) {
  require_prime(p);
  if (!(p < e && e < 2 * p)) throw std::out_of_range("weight bound check needs p < e < 2p");
  WeightBoundReport rep{e, p, 0, 0, true};
  for (const Partition& lambda : enumerate_partitions(e)) {
    ++rep.partitions;
    rep.max_weight = std::max(rep.max_weight, p_core_and_weight(lambda, p).weight);
  }
  rep.ok = rep.max_weight <= 1;
  return rep;
}

ThetaCounterexample theta_counterexample() {
  ThetaCounterexample out;
  const Partition core{1};
  out.factors = theta_multiplicities(core, Partition{2, 2}, 2);
  out.shared_core = !out.factors.empty();
  for (const auto& [mu, c] : out.factors)
    if (p_core_and_weight(mu, 2).core != core) out.shared_core = false;
  long total = 0;
  for (const auto& [mu, c] : out.factors) total += c;
  out.not_schur = total > 1;
  return out;
}

}  // namespace hookblock
