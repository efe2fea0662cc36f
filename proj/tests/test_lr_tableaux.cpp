#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hookblock/abacus.hpp"
#include "hookblock/lr_tableaux.hpp"
#include "oracles.hpp"

using namespace hookblock;

TEST_SUITE("lr_tableaux") {
  TEST_CASE("dimension identity: sum of c f^mu equals binomial times f^lambda f^nu") {
    for (int a = 0; a <= 5; ++a)
      for (int b = 0; b <= 5; ++b)
        for (const Partition& lambda : enumerate_partitions(a))
          for (const Partition& nu : enumerate_partitions(b)) {
            long long lhs = 0;
            for (const Partition& mu : enumerate_partitions(a + b))
              lhs += lr_coefficient(lambda, nu, mu) * oracle::standard_tableaux(mu.parts());
            CHECK(lhs == oracle::binom(a + b, a) * oracle::standard_tableaux(lambda.parts()) *
                             oracle::standard_tableaux(nu.parts()));
          }
  }

  TEST_CASE("symmetry and conjugation") {
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        for (const Partition& lambda : enumerate_partitions(a))
          for (const Partition& nu : enumerate_partitions(b))
            for (const Partition& mu : enumerate_partitions(a + b)) {
              const long c = lr_coefficient(lambda, nu, mu);
              CHECK(c == lr_coefficient(nu, lambda, mu));
              CHECK(c == lr_coefficient(lambda.conjugate(), nu.conjugate(), mu.conjugate()));
              CHECK(column_lr_tableaux(lambda, nu, mu).size() ==
                    static_cast<std::size_t>(lr_coefficient(lambda.conjugate(), nu, mu.conjugate())));
            }
  }

  TEST_CASE("Pieri rule for one-row content") {
    for (int a = 0; a <= 6; ++a)
      for (int k = 1; k <= 4; ++k)
        for (const Partition& lambda : enumerate_partitions(a))
          for (const Partition& mu : enumerate_partitions(a + k))
            CHECK(lr_coefficient(lambda, Partition{k}, mu) ==
                  (oracle::is_horizontal_strip(mu.parts(), lambda.parts()) ? 1 : 0));
  }

  TEST_CASE("enumerated tableaux are semistandard with the right content and Yamanouchi words") {
    const Partition lambda{2, 1}, nu{2, 1}, mu{3, 2, 1};
    const auto ts = lr_tableaux(lambda, nu, mu);
    CHECK(ts.size() == 2);
    for (const SkewTableau& t : ts) {
      CHECK(is_semistandard(t));
      CHECK(is_yamanouchi(row_reading_word(t)));
      CHECK(t.content() == std::vector<int>{2, 1});
    }
  }

  TEST_CASE("Yamanouchi words") {
    CHECK(is_yamanouchi({1, 2, 1, 3, 1, 1, 4}));
    CHECK(is_yamanouchi({1, 1, 2, 3, 1, 1, 4}));
    CHECK_FALSE(is_yamanouchi({2, 1}));
    CHECK_FALSE(is_yamanouchi({1, 3, 2}));
    CHECK(is_yamanouchi({}));
  }

  TEST_CASE("worked examples") {
    CHECK(lr_coefficient(Partition{1}, Partition{2, 2}, Partition{3, 2}) == 1);
    CHECK(lr_coefficient(Partition{1}, Partition{2, 2}, Partition{2, 2, 1}) == 1);
    // The rim 7-hook (4,3,3,1)/(2,2) spans four columns: its content is the hook (4,1,1,1).
    CHECK(lr_coefficient(Partition{2, 2}, Partition{4, 1, 1, 1}, Partition{4, 3, 3, 1}) == 1);
    CHECK(lr_coefficient(Partition{2, 2}, Partition{5, 1, 1}, Partition{4, 3, 3, 1}) == 0);
    const auto ts = column_lr_tableaux(Partition{2, 2}, Partition{4, 1, 1, 1}.conjugate(), Partition{4, 3, 3, 1});
    REQUIRE(ts.size() == 1);
    CHECK(column_reading_word(ts[0]) == std::vector<int>{1, 1, 2, 3, 1, 1, 4});
    CHECK(hook_translation_coefficient(3, Partition{2, 2}, Partition{4, 3, 3, 1}, 7) == 1);
  }

  TEST_CASE("hook translation is the indicator of mu_i") {
    for (int p : {2, 3, 5})
      for (int c = 0; c <= 7; ++c)
        for (const Partition& core : enumerate_partitions(c)) {
          if (!is_p_core(core, p)) continue;
          for (const Partition& mu : enumerate_partitions(c + p))
            for (int i = 0; i < p; ++i) {
              const long h = hook_translation_coefficient(i, core, mu, p);
              CHECK(h == lr_coefficient(core, hook_partition(HookIdx{p, i}), mu));
              if (p_core_and_weight(mu, p).core == core) CHECK(h == (mu == mu_index(core, p, i) ? 1 : 0));
            }
        }
  }

  TEST_CASE("theta multiplicities") {
    const auto t = theta_multiplicities(Partition{1}, Partition{2, 2}, 2);
    CHECK(t == std::map<Partition, long>{{Partition{3, 2}, 1}, {Partition{2, 2, 1}, 1}});
    for (const auto& [mu, m] : t) CHECK(p_core_and_weight(mu, 2).core == Partition{1});
    for (int p : {2, 3, 5})
      for (int i = 0; i < p; ++i)
        CHECK(theta_multiplicities(Partition{1}, hook_partition(HookIdx{p, i}), p) ==
              std::map<Partition, long>{{mu_index(Partition{1}, p, i), 1}});
  }
}
