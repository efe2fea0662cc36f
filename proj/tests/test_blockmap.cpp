#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <set>

#include "hookblock/abacus.hpp"
#include "hookblock/blockmap.hpp"
#include "hookblock/verify.hpp"
#include "oracles.hpp"

using namespace hookblock;

TEST_SUITE("blockmap") {
  TEST_CASE("blocks of degree p: the hooks plus singletons") {
    for (int p : {2, 3, 5, 7}) {
      std::size_t total = 0;
      for (const Block& b : blocks(p, p)) {
        total += b.members.size();
        if (b.label.core.empty()) {
          CHECK(b.members.size() == static_cast<std::size_t>(p));
          CHECK(b.label.weight == 1);
          for (const Partition& mu : b.members) CHECK(hook_index(mu, p).has_value());
        } else {
          CHECK(b.members.size() == 1);
          CHECK(b.members[0] == b.label.core);
        }
      }
      CHECK(static_cast<long long>(total) == oracle::partition_count(p));
    }
    const auto b3 = blocks(3, 3);
    REQUIRE(b3.size() == 1);
    CHECK(b3[0].members == std::vector<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
  }

  TEST_CASE("blocks of degree 4 at p = 2 group by 2-core") {
    const auto bs = blocks(4, 2);
    REQUIRE(bs.size() == 1);
    CHECK(bs[0].label.core.empty());
    CHECK(bs[0].label.weight == 2);
    CHECK(bs[0].members.size() == 5);
    for (int e = 1; e <= 9; ++e)
      for (const Block& b : blocks(e, 3))
        for (const Partition& mu : b.members) {
          const auto [core, w] = oracle::core_and_weight(mu.parts(), 3);
          CHECK(Partition(core) == b.label.core);
          CHECK(w == b.label.weight);
        }
  }

  TEST_CASE("weight-one labels for sampled cores") {
    for (int p : {2, 3, 5, 7, 11}) {
      const auto cores = sample_cores(p, 40, 20, 3);
      CHECK(std::find(cores.begin(), cores.end(), Partition{}) != cores.end());
      for (const Partition& core : cores) {
        REQUIRE(is_p_core(core, p));
        const auto labels = weight1_labels(core, p);
        const auto all = weight1_diagrams(core, p);
        CHECK(std::set<Partition>(labels.begin(), labels.end()) == std::set<Partition>(all.begin(), all.end()));
        CHECK(label_order_check(core, p).ok);
        // Labels are strictly increasing in reversed dominance, like the hooks.
        for (int i = 0; i + 1 < p; ++i)
          CHECK(dominates_reversed(labels[static_cast<std::size_t>(i)], labels[static_cast<std::size_t>(i + 1)]));
      }
    }
    CHECK(weight1_labels(Partition{1}, 2) == std::vector<Partition>{Partition{1, 1, 1}, Partition{3}});
    CHECK_THROWS(weight1_labels(Partition{3}, 2));
  }

  TEST_CASE("block tables are the hook-block tables re-labelled") {
    const nlohmann::json hook = weight1_block_tables(Partition{}, 3);
    const nlohmann::json other = weight1_block_tables(Partition{2, 1, 1}, 3);
    CHECK(hook["labels"] == nlohmann::json{"1,1,1", "2,1", "3"});
    CHECK(hook["decomposition"] == other["decomposition"]);
    CHECK(hook["yoneda"] == other["yoneda"]);
    REQUIRE(hook["ext"].size() == 81);
    REQUIRE(other["ext"].size() == 81);
    for (std::size_t k = 0; k < 81; ++k) CHECK(hook["ext"][k]["dims"] == other["ext"][k]["dims"]);
    const nlohmann::json small = weight1_block_tables(Partition{1}, 2);
    CHECK(small["labels"] == nlohmann::json{"1,1,1", "3"});
    CHECK(small["decomposition"] == nlohmann::json{{1, 1}, {0, 1}});
    CHECK(small["ext"][0]["from"] == "F(1,1,1)");
  }

  TEST_CASE("weight bound") {
    for (int p : {2, 3, 5, 7})
      for (int e = p + 1; e < 2 * p; ++e) {
        const WeightBoundReport r = weight_bound_check(e, p);
        CHECK(r.ok);
        CHECK(static_cast<long long>(r.partitions) == oracle::partition_count(e));
      }
    CHECK(weight_bound_check(4, 3).partitions == 5);
    CHECK_THROWS_AS(weight_bound_check(6, 3), std::out_of_range);
    CHECK_THROWS_AS(weight_bound_check(3, 3), std::out_of_range);
    // At e = 2p the bound fails: (p, p) style shapes reach weight 2.
    int max_w = 0;
    for (const Partition& l : enumerate_partitions(6)) max_w = std::max(max_w, p_core_and_weight(l, 3).weight);
    CHECK(max_w == 2);
  }

  TEST_CASE("theta counterexample") {
    const ThetaCounterexample t = theta_counterexample();
    CHECK(t.factors == std::map<Partition, long>{{Partition{3, 2}, 1}, {Partition{2, 2, 1}, 1}});
    CHECK(t.shared_core);
    CHECK(t.not_schur);
  }
}
