#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hookblock/abacus.hpp"
#include "hookblock/verify.hpp"

using namespace hookblock;

namespace {
VerificationReport run(std::string suite, int p, bool override_tier = false, std::uint64_t seed = 1) {
  VerifyOptions o;
  o.suite = std::move(suite);
  o.p = p;
  o.seed = seed;
  o.tier_override = override_tier;
  return run_verification(o);
}
}  // namespace

TEST_SUITE("verify") {
  TEST_CASE("reports are byte stable") {
    CHECK(run("all", 2).to_json().dump() == run("all", 2).to_json().dump());
    CHECK(run("combinatorics", 5, false, 9).to_json().dump() == run("combinatorics", 5, false, 9).to_json().dump());
  }

  TEST_CASE("small primes pass everything") {
    const VerificationReport r = run("all", 3);
    CHECK_FALSE(r.failed());
    for (const CheckEntry& c : r.checks) CHECK_MESSAGE(c.status == CheckStatus::Pass, c.id);
    CHECK(r.n == 3);
  }

  TEST_CASE("tiers") {
    CHECK_THROWS_AS(run("oracle", 5), std::domain_error);
    CHECK_THROWS_AS(run("oracle", 7, true), std::domain_error);
    CHECK_THROWS_AS(run("nonsense", 3), std::invalid_argument);
    CHECK_THROWS(run("all", 4));
    const VerificationReport c5 = run("complexes", 5);
    CHECK_FALSE(c5.failed());
    bool skipped = false;
    for (const CheckEntry& c : c5.checks) skipped = skipped || c.status == CheckStatus::SkippedTier;
    CHECK(skipped);
    const VerificationReport a7 = run("all", 7);
    CHECK_FALSE(a7.failed());
    for (const CheckEntry& c : a7.checks)
      if (c.id == "ext-oracle" || c.id == "relations") CHECK(c.status == CheckStatus::SkippedTier);
    CHECK(status_name(CheckStatus::SkippedTier) == "skipped-tier");
  }

  TEST_CASE("sampled cores") {
    const auto a = sample_cores(2, kRandomCores, kMaxCoreSize, 1);
    // Every 2-core is a staircase, so all of them fit.
    CHECK(a.size() == 8);
    const auto b = sample_cores(5, kRandomCores, kMaxCoreSize, 1);
    CHECK(b.size() == static_cast<std::size_t>(kRandomCores) + 1);
    CHECK(b.front().empty());
    CHECK(b == sample_cores(5, kRandomCores, kMaxCoreSize, 1));
    CHECK(b != sample_cores(5, kRandomCores, kMaxCoreSize, 2));
    for (const Partition& c : b) {
      CHECK(is_p_core(c, 5));
      CHECK(c.weight() <= kMaxCoreSize);
    }
  }
}
