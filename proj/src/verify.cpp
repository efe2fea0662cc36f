#include "hookblock/verify.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

#include "hookblock/abacus.hpp"
#include "hookblock/audits.hpp"
#include "hookblock/blockmap.hpp"
#include "hookblock/closed_forms.hpp"
#include "hookblock/complex_engine.hpp"
#include "hookblock/lr_tableaux.hpp"
#include "hookblock/yoneda.hpp"

namespace hookblock {

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::SkippedTier: return "skipped-tier";
  }
  return "fail";
}

bool VerificationReport::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.status == CheckStatus::Fail; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["p"] = p;
  j["n"] = n;
  j["seed"] = seed;
  nlohmann::json list = nlohmann::json::array();
  for (const CheckEntry& c : checks)
    list.push_back({{"check", c.id}, {"status", status_name(c.status)}, {"details", c.details}});
  j["checks"] = list;
  j["status"] = failed() ? "fail" : "pass";
  return j;
}

std::vector<Partition> sample_cores(int p, int count, int max_size, std::uint64_t seed) {
  // The empty core (the hook block itself) is always included, followed by `count` others.
  std::vector<Partition> pool;
  for (int e = 1; e <= max_size; ++e)
    for (const Partition& lambda : enumerate_partitions(e))
      if (is_p_core(lambda, p)) pool.push_back(lambda);
  if (static_cast<int>(pool.size()) > count) {
    // Partial Fisher-Yates with raw engine output, so the sample is stable across standard libraries.
    std::mt19937_64 rng(seed * 1000003ULL + static_cast<std::uint64_t>(p));
    for (int k = 0; k < count; ++k) {
      const std::size_t pick = static_cast<std::size_t>(k) + rng() % (pool.size() - static_cast<std::size_t>(k));
      std::swap(pool[static_cast<std::size_t>(k)], pool[pick]);
    }
    pool.resize(static_cast<std::size_t>(count));
  }
  pool.insert(pool.begin(), Partition{});
  return pool;
}

namespace {

using nlohmann::json;

class Recorder {
 public:
  explicit Recorder(VerificationReport& r) : r_(r) {}

  void add(std::string id, bool ok, json details = json::object()) {
    r_.checks.push_back(CheckEntry{std::move(id), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(details)});
  }
  void add(std::string id, const CheckReport& rep, json details = json::object()) {
    if (!rep.ok) details["failures"] = rep.failures;
    add(std::move(id), rep.ok, std::move(details));
  }
  void skip(std::string id, std::string reason) {
    r_.checks.push_back(CheckEntry{std::move(id), CheckStatus::SkippedTier, json{{"reason", std::move(reason)}}});
  }
  // Runs a check, turning exceptions into failures.
  void guarded(const std::string& id, const std::function<void()>& body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(id, false, json{{"error", e.what()}});
    }
  }

 private:
  VerificationReport& r_;
};

void combinatorics_suite(const VerifyOptions& o, Recorder& rec) {
  const int p = o.p;
  const std::vector<Partition> cores = sample_cores(p, kRandomCores, kMaxCoreSize, o.seed);
  rec.guarded("lemma-bijection", [&] {
    CheckReport rep;
    for (const Partition& core : cores) {
      const std::vector<Partition> labels = weight1_labels(core, p);
      std::set<Partition> image(labels.begin(), labels.end());
      const std::vector<Partition> all = weight1_diagrams(core, p);
      if (image.size() != labels.size()) rep.fail("mu_index not injective for core " + core.to_string());
      if (image != std::set<Partition>(all.begin(), all.end())) rep.fail("image differs from enumeration for core " + core.to_string());
      for (int i = 0; i < p; ++i) {
        const Partition& mu = labels[static_cast<std::size_t>(i)];
        const CoreWeight cw = p_core_and_weight(mu, p);
        if (cw.core != core || cw.weight != 1) rep.fail("core/weight of " + mu.to_string());
        bool found = false;
        for (const RimHookDescriptor& d : removable_rim_hooks(mu, p))
          if (d.arm == i && remove_rim_hook(mu, d) == core) found = true;
        if (!found) rep.fail("no rim hook of arm " + std::to_string(i) + " in " + mu.to_string());
      }
    }
    rec.add("lemma-bijection", rep, json{{"cores", cores.size()}, {"max_core_size", kMaxCoreSize}});
  });
  rec.guarded("lemma-order-isomorphism", [&] {
    CheckReport rep;
    for (const Partition& core : cores) {
      const CheckReport r = label_order_check(core, p);
      for (const auto& f : r.failures) rep.fail("core " + core.to_string() + ": " + f);
    }
    rec.add("lemma-order-isomorphism", rep, json{{"cores", cores.size()}, {"directions", "both"}});
  });
  rec.guarded("hook-translation-indicator", [&] {
    CheckReport rep;
    std::size_t evaluated = 0;
    for (const Partition& core : cores) {
      const std::vector<Partition> labels = weight1_labels(core, p);
      for (const Partition& mu : weight1_diagrams(core, p))
        for (int i = 0; i < p; ++i) {
          ++evaluated;
          const long want = mu == labels[static_cast<std::size_t>(i)] ? 1 : 0;
          if (hook_translation_coefficient(i, core, mu, p) != want)
            rep.fail("c(" + std::to_string(i) + "," + core.to_string() + ";" + mu.to_string() + ")");
        }
    }
    rec.add("hook-translation-indicator", rep, json{{"coefficients", evaluated}});
  });
  rec.guarded("theta-counterexample", [&] {
    const ThetaCounterexample t = theta_counterexample();
    const std::map<Partition, long> want{{Partition{3, 2}, 1}, {Partition{2, 2, 1}, 1}};
    json factors = json::object();
    for (const auto& [mu, c] : t.factors) factors[mu.to_string()] = c;
    rec.add("theta-counterexample", t.factors == want && t.shared_core && t.not_schur, json{{"factors", factors}});
  });
  rec.guarded("weight-bound", [&] {
    bool ok = true;
    json per = json::object();
    for (int e = p + 1; e < 2 * p; ++e) {
      const WeightBoundReport r = weight_bound_check(e, p);
      ok = ok && r.ok;
      per[std::to_string(e)] = {{"partitions", r.partitions}, {"max_weight", r.max_weight}};
    }
    rec.add("weight-bound", ok, json{{"e", per}});
  });
  rec.guarded("hook-block-membership", [&] {
    bool ok = true;
    std::size_t hooks = 0;
    for (const Block& b : blocks(p, p)) {
      if (b.label.core.empty()) {
        hooks = b.members.size();
        for (const Partition& mu : b.members) ok = ok && hook_index(mu, p).has_value();
      } else {
        ok = ok && b.members.size() == 1 && b.label.weight == 0;
      }
    }
    rec.add("hook-block-membership", ok && hooks == static_cast<std::size_t>(p), json{{"hooks", hooks}});
  });
  rec.guarded("decomposition-closed-form", [&] {
    const auto d = decomposition_matrix(p);
    bool ok = true;
    for (int l = 0; l < p; ++l)
      for (int m = 0; m < p; ++m)
        ok = ok && d[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] == ((m == l || m == l + 1) ? 1 : 0);
    rec.add("decomposition-closed-form", ok, json{{"matrix", d}});
  });
}

bool module_tier(const VerifyOptions& o) { return o.p <= kModuleTier; }

const char* kModuleReason = "module dimensions beyond the desk-scale tier";

void complexes_suite(const VerifyOptions& o, Recorder& rec) {
  const int p = o.p, n = o.n;
  if (!module_tier(o)) {
    for (const char* id : {"relations", "koszul-acyclic", "cartier-kernel", "derham-cartier", "resolutions",
                           "cokernel-identification", "injectivity-audit", "minimality"})
      rec.skip(id, kModuleReason);
    return;
  }
  rec.guarded("relations", [&] { rec.add("relations", relation_check(p, n)); });
  rec.guarded("koszul-acyclic", [&] {
    const ComplexPtr k = koszul_complex(p, n);
    json dims = json::array();
    bool ok = true;
    for (int m = 0; m <= p; ++m) {
      dims.push_back(homology(*k, m));
      ok = ok && dims.back() == 0;
    }
    rec.add("koszul-acyclic", ok, json{{"homology", dims}});
  });
  rec.guarded("cartier-kernel", [&] {
    const CartierReport c = cartier_kernel_check(p, n);
    rec.add("cartier-kernel", c.ok, json{{"homology", c.dims}});
  });
  rec.guarded("derham-cartier", [&] {
    const ComplexPtr d = derham_complex(p, n);
    json dims = json::array();
    bool ok = true;
    for (int m = 0; m <= p; ++m) {
      const std::size_t h = homology(*d, m);
      dims.push_back(h);
      ok = ok && h == (m <= 1 ? static_cast<std::size_t>(n) : 0);
    }
    rec.add("derham-cartier", ok, json{{"homology", dims}});
  });
  rec.guarded("resolutions", [&] {
    bool ok = true;
    json per = json::array();
    auto hb = HookBlockModules::get(p, n);
    for (int i = 0; i < p; ++i) {
      const std::pair<const char*, Resolution> all[] = {
          {"T", schur_injective_resolution(i, p, n)},      {"P(S)", schur_projective_resolution(i, p, n)},
          {"P(W)", weyl_projective_resolution(i, p, n)},   {"TotR", simple_injective_resolution(i, p, n)},
          {"P(F)", simple_projective_resolution(i, p, n)}};
      for (const auto& [name, r] : all) {
        const ExactnessReport e = check_resolution(r);
        json h = json::object();
        for (auto [m, d] : e.homology) h[std::to_string(m)] = d;
        ok = ok && e.exact && r.complex->squares_to_zero();
        per.push_back({{"resolution", std::string(name) + "_" + std::to_string(i)},
                       {"exact", e.exact},
                       {"homology", h},
                       {"resolved_dim", e.resolved_dim},
                       {"length", r.complex->hi() - r.complex->lo()}});
      }
      const std::size_t fi = hb->simple(i).module->dim();
      ok = ok && homology(*simple_injective_resolution(i, p, n).complex, 0) == fi;
      ok = ok && homology(*schur_injective_resolution(i, p, n).complex, 0) == hb->schur(i).module->dim();
      // rows of R_i, top row first
      const DoubleComplex dc = simple_double_complex(i, p, n);
      std::map<int, int> rows;
      for (const auto& [cell, m] : dc.terms) ++rows[cell.second];
      json lengths = json::array();
      for (auto it = rows.rbegin(); it != rows.rend(); ++it) lengths.push_back(it->second);
      per.push_back({{"double_complex", "R_" + std::to_string(i)}, {"row_lengths", lengths}});
    }
    rec.add("resolutions", ok, json{{"items", per}});
  });
  rec.guarded("cokernel-identification", [&] { rec.add("cokernel-identification", cokernel_identification(p, n)); });
  if (p <= kOracleTier || o.tier_override) {
    rec.guarded("injectivity-audit", [&] { rec.add("injectivity-audit", injectivity_audit(p, n)); });
    rec.guarded("minimality", [&] {
      const IndecomposabilityReport r = indecomposability_audit(p, n);
      json dims = json::object();
      for (auto [i, d] : r.endomorphism_dims) dims[std::to_string(i)] = d;
      rec.add("minimality", r.check, json{{"endomorphism_dims", dims}});
    });
  } else {
    rec.skip("injectivity-audit", "audit runs for p <= 3 only");
    rec.skip("minimality", "minimality taken from the indecomposability argument for p >= 5; not computed");
  }
}

void oracle_suite(const VerifyOptions& o, Recorder& rec) {
  const int p = o.p, n = o.n;
  const Kind kinds[] = {Kind::Simple, Kind::Schur, Kind::Weyl};
  rec.guarded("ext-oracle", [&] {
    CheckReport rep;
    std::size_t tables = 0;
    std::map<std::pair<ObjectKind, ObjectKind>, ExtTable> oracle;
    for (Kind a : kinds)
      for (Kind b : kinds)
        for (int m = 0; m < p; ++m)
          for (int k = 0; k < p; ++k) {
            const ObjectKind x{a, m}, y{b, k};
            const ExtTable got = ext_oracle(x, y, p, n, 2 * p);
            oracle.emplace(std::make_pair(x, y), got);
            ++tables;
            if (!(got == ext_table(x, y, p))) rep.fail(x.to_string() + "->" + y.to_string());
            for (auto [q, d] : got.dims)
              if (q > 2 * p - 2 && d != 0) rep.fail(x.to_string() + "->" + y.to_string() + " nonzero beyond 2p-2");
          }
    rec.add("ext-oracle", rep, json{{"tables", tables}, {"qmax", 2 * p}});
    CheckReport dual_rep;
    for (const auto& [xy, t] : oracle)
      if (!(t == oracle.at({dual(xy.second), dual(xy.first)})))
        dual_rep.fail(xy.first.to_string() + "->" + xy.second.to_string());
    rec.add("ext-kuhn-duality", dual_rep);
  });
  rec.guarded("decomposition-oracle", [&] {
    const DecompositionDerivation d = decomposition_from_characters(p, n);
    rec.add("decomposition-oracle", d.check, json{{"matrix", d.matrix}});
  });
}

void yoneda_suite(const VerifyOptions& o, Recorder& rec) {
  const int p = o.p, n = o.n;
  if (module_tier(o)) {
    rec.guarded("product-tables", [&] { rec.add("product-tables", verify_product_tables(p, n)); });
    rec.guarded("non-null", [&] { rec.add("non-null", certify_non_null(p, n)); });
    for (Family f : {Family::Schur, Family::Simple}) {
      const std::string id = "formality-" + family_name(f);
      rec.guarded(id, [&] {
        const FormalityReport r = formality_certificate(f, p, n);
        json dims = json::object();
        for (auto [t, d] : r.degree_dims) dims[std::to_string(t)] = {d.first, d.second};
        rec.add(id, r.check, json{{"span_vs_ext", dims}});
      });
    }
  } else {
    for (const char* id : {"product-tables", "non-null", "formality-schur", "formality-simple"}) rec.skip(id, kModuleReason);
  }
  for (Family f : {Family::Schur, Family::Simple}) {
    const std::string id = "compare-model-oracle-" + family_name(f);
    if (p <= kOracleTier || (o.tier_override && module_tier(o)))
      rec.guarded(id, [&] { rec.add(id, compare_model_oracle(f, p, n)); });
    else
      rec.skip(id, "model/oracle comparison runs for p <= 3");
  }
  rec.guarded("model-structure", [&] {
    const GradedAlgebraModel a = model_schur_yoneda(p), b = model_simple_yoneda(p);
    CheckReport rep;
    for (const auto& f : a.structure_check().failures) rep.fail("A: " + f);
    for (const auto& f : b.structure_check().failures) rep.fail("B: " + f);
    rec.add("model-structure", rep, json{{"dim_A", a.dim()}, {"dim_B", b.dim()}});
  });
  rec.guarded("square-zero-extension", [&] { rec.add("square-zero-extension", square_zero_check(p)); });
  rec.guarded("truncated-polynomial", [&] {
    CheckReport rep;
    for (int i = 0; i < p; ++i)
      for (const auto& f : truncated_poly_iso(i, p).failures) rep.fail("i=" + std::to_string(i) + ": " + f);
    rec.add("truncated-polynomial", rep);
  });
  rec.guarded("model-graded-dims", [&] { rec.add("model-graded-dims", model_dimension_check(p)); });
  rec.guarded("kl", [&] { rec.add("kl", kl_check(p)); });
}

}  // namespace

VerificationReport run_verification(const VerifyOptions& options) {
  VerifyOptions o = options;
  require_prime(o.p);
  if (o.n == 0) o.n = o.p;
  if (o.n < o.p) throw std::invalid_argument("n must be at least p");
  const std::set<std::string> suites{"combinatorics", "complexes", "oracle", "yoneda", "all"};
  if (!suites.count(o.suite)) throw std::invalid_argument("unknown suite: " + o.suite);
  const bool oracle_allowed = o.p <= kOracleTier || (o.tier_override && module_tier(o));
  if (o.suite == "oracle" && !oracle_allowed)
    throw std::domain_error("oracle suite is limited to p <= 3 (p <= 5 with --tier-override)");
  VerificationReport report{o.suite, o.p, o.n, o.seed, {}};
  Recorder rec(report);
  const bool all = o.suite == "all";
  if (all || o.suite == "combinatorics") combinatorics_suite(o, rec);
  if (all || o.suite == "complexes") complexes_suite(o, rec);
  if (all || o.suite == "oracle") {
    if (oracle_allowed) oracle_suite(o, rec);
    else
      for (const char* id : {"ext-oracle", "ext-kuhn-duality", "decomposition-oracle"})
        rec.skip(id, "oracle suite runs for p <= 3 without --tier-override");
  }
  if (all || o.suite == "yoneda") yoneda_suite(o, rec);
  return report;
}

}  // namespace hookblock
