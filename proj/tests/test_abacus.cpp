#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <set>

#include "hookblock/abacus.hpp"
#include "oracles.hpp"

using namespace hookblock;

namespace {
Partition from_shape(const oracle::Shape& s) { return Partition(s); }
}  // namespace

TEST_SUITE("abacus") {
  TEST_CASE("core and weight agree with brute-force rim hook removal") {
    for (int p : {2, 3, 5})
      for (int e = 0; e <= 12; ++e)
        for (const Partition& lambda : enumerate_partitions(e)) {
          const auto [core, weight] = oracle::core_and_weight(lambda.parts(), p);
          const CoreWeight cw = p_core_and_weight(lambda, p);
          CHECK(cw.core == from_shape(core));
          CHECK(cw.weight == weight);
          CHECK(is_p_core(lambda, p) == (weight == 0));
        }
  }

  TEST_CASE("removable rim hooks agree with brute-force border strips") {
    for (int p : {2, 3, 5, 7})
      for (int e = 0; e <= 11; ++e)
        for (const Partition& lambda : enumerate_partitions(e)) {
          std::set<Partition> want;
          for (const auto& nu : oracle::rim_hook_removals(lambda.parts(), p)) want.insert(from_shape(nu));
          std::set<Partition> got;
          for (const RimHookDescriptor& d : removable_rim_hooks(lambda, p)) {
            CHECK(d.size == p);
            got.insert(remove_rim_hook(lambda, d));
          }
          CHECK(got == want);
          CHECK(removable_rim_hooks(lambda, p).size() == want.size());
        }
  }

  TEST_CASE("removing a rim hook lowers the weight by one") {
    for (int p : {2, 3, 5})
      for (int e = p; e <= 12; ++e)
        for (const Partition& lambda : enumerate_partitions(e)) {
          const CoreWeight cw = p_core_and_weight(lambda, p);
          for (const RimHookDescriptor& d : removable_rim_hooks(lambda, p)) {
            const CoreWeight after = p_core_and_weight(remove_rim_hook(lambda, d), p);
            CHECK(after.weight == cw.weight - 1);
            CHECK(after.core == cw.core);
          }
        }
  }

  TEST_CASE("the arm of a rim hook is its column count minus one") {
    for (int p : {3, 5})
      for (const Partition& lambda : enumerate_partitions(2 * p))
        for (const RimHookDescriptor& d : removable_rim_hooks(lambda, p)) {
          const Partition nu = remove_rim_hook(lambda, d);
          std::set<int> cols, rows;
          for (auto [r, c] : oracle::skew_cells(lambda.parts(), nu.parts())) {
            cols.insert(c);
            rows.insert(r);
          }
          CHECK(d.arm == static_cast<int>(cols.size()) - 1);
          CHECK(d.hand_row == *rows.begin() + 1);
        }
  }

  TEST_CASE("beta sequences round trip for any admissible bead count") {
    for (int e = 0; e <= 9; ++e)
      for (const Partition& lambda : enumerate_partitions(e))
        for (int extra = 0; extra < 4; ++extra) {
          const BetaSeq b = beta_sequence(lambda, lambda.length() + extra);
          CHECK(b.beads() == lambda.length() + extra);
          CHECK(std::is_sorted(b.betas.rbegin(), b.betas.rend()));
          CHECK(partition_of(b) == lambda);
        }
    CHECK_THROWS(beta_sequence(Partition{2, 1}, 1));
  }

  TEST_CASE("standard bead count") {
    CHECK(standard_bead_count(Partition{2, 1}, 2) == 4);
    CHECK(standard_bead_count(Partition{}, 3) == 3);
    CHECK(standard_bead_count(Partition{1, 1, 1, 1}, 3) == 9);
  }

  TEST_CASE("worked examples") {
    CHECK(p_core_and_weight(Partition{2, 1}, 2).core == Partition{2, 1});
    CHECK(p_core_and_weight(Partition{2, 1}, 2).weight == 0);
    CHECK(p_core_and_weight(Partition{3}, 2).core == Partition{1});
    CHECK(p_core_and_weight(Partition{3}, 2).weight == 1);
    for (int p : {2, 3, 5, 7, 11})
      for (int i = 0; i < p; ++i) {
        const CoreWeight cw = p_core_and_weight(hook_partition(HookIdx{p, i}), p);
        CHECK(cw.core.empty());
        CHECK(cw.weight == 1);
      }
    const auto dominoes = removable_rim_hooks(Partition{3}, 2);
    REQUIRE(dominoes.size() == 1);
    CHECK(remove_rim_hook(Partition{3}, dominoes[0]) == Partition{1});
    CHECK(removable_rim_hooks(Partition{2, 1}, 2).empty());
    bool found = false;
    for (const RimHookDescriptor& d : removable_rim_hooks(Partition{4, 3, 3, 1}, 7))
      found = found || remove_rim_hook(Partition{4, 3, 3, 1}, d) == Partition{2, 2};
    CHECK(found);
  }

  TEST_CASE("mu_index examples and brute force") {
    CHECK(mu_index(Partition{1}, 2, 0) == Partition{1, 1, 1});
    CHECK(mu_index(Partition{1}, 2, 1) == Partition{3});
    for (int p : {2, 3, 5}) {
      for (int i = 0; i < p; ++i) CHECK(mu_index(Partition{}, p, i) == hook_partition(HookIdx{p, i}));
      for (int c = 0; c <= 8; ++c)
        for (const Partition& core : enumerate_partitions(c)) {
          if (!is_p_core(core, p)) continue;
          for (int i = 0; i < p; ++i) {
            // Brute force: the unique weight-1 partition with this core whose rim hook spans i+1 columns.
            std::vector<Partition> hits;
            for (const Partition& mu : enumerate_partitions(c + p))
              for (const auto& nu : oracle::rim_hook_removals(mu.parts(), p)) {
                if (Partition(nu) != core) continue;
                std::set<int> cols;
                for (auto cell : oracle::skew_cells(mu.parts(), nu)) cols.insert(cell.second);
                if (static_cast<int>(cols.size()) == i + 1) hits.push_back(mu);
              }
            REQUIRE(hits.size() == 1);
            CHECK(mu_index(core, p, i) == hits[0]);
          }
        }
    }
    CHECK_THROWS(mu_index(Partition{1}, 2, 2));
    CHECK_THROWS(mu_index(Partition{3}, 2, 0));
  }

  TEST_CASE("weight-one diagrams") {
    const auto hooks3 = weight1_diagrams(Partition{}, 3);
    CHECK(std::set<Partition>(hooks3.begin(), hooks3.end()) ==
          std::set<Partition>{Partition{3}, Partition{2, 1}, Partition{1, 1, 1}});
    const auto d = weight1_diagrams(Partition{1}, 2);
    CHECK(std::set<Partition>(d.begin(), d.end()) == std::set<Partition>{Partition{3}, Partition{1, 1, 1}});
    for (int p : {2, 3, 5, 7})
      for (int c = 0; c <= 9; ++c)
        for (const Partition& core : enumerate_partitions(c))
          if (is_p_core(core, p)) CHECK(weight1_diagrams(core, p).size() == static_cast<std::size_t>(p));
  }

  TEST_CASE("abacus diagram shape") {
    const std::string text = abacus_diagram(Partition{2, 1}, 2);
    CHECK(std::count(text.begin(), text.end(), 'o') == 4);
    CHECK(text.find('.') != std::string::npos);
  }
}
