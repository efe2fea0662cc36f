#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hookblock/functor_lab.hpp"
#include "oracles.hpp"

using namespace hookblock;

namespace {

ModulePtr word(std::vector<Factor> f, int n, int p) { return eval_space(FunctorDescriptor{std::move(f)}, n, p); }

long long omega_dim(int e, int i, int n) { return oracle::binom(n + e - i - 1, e - i) * oracle::binom(n, i); }

// dim S_i from the exact Koszul complex 0 -> S_i -> Omega^i -> ... -> Omega^0.
long long schur_hook_dim(int i, int p, int n) {
  long long d = 0;
  for (int k = 0; k <= i; ++k) d += ((i - k) % 2 ? -1 : 1) * omega_dim(p, k, n);
  return d;
}

// dim F_i from 0 -> F_{i+1} -> W_i -> F_i -> 0 and F_{p-1} = W_{p-1}.
long long simple_hook_dim(int i, int p, int n) {
  long long d = 0;
  for (int k = i; k < p; ++k) d += ((k - i) % 2 ? -1 : 1) * schur_hook_dim(k, p, n);
  return d;
}

}  // namespace

TEST_SUITE("functor_lab") {
  TEST_CASE("evaluation dimensions of tensor words") {
    for (int p : {2, 3, 5})
      for (int n = 1; n <= 4; ++n)
        for (int d = 0; d <= 4; ++d) {
          CHECK(word({{FactorKind::Sym, d}}, n, p)->dim() == static_cast<std::size_t>(oracle::binom(n + d - 1, d)));
          CHECK(word({{FactorKind::Div, d}}, n, p)->dim() == static_cast<std::size_t>(oracle::binom(n + d - 1, d)));
          CHECK(word({{FactorKind::Ext, d}}, n, p)->dim() == static_cast<std::size_t>(oracle::binom(n, d)));
          long long tens = 1;
          for (int k = 0; k < d; ++k) tens *= n;
          CHECK(word({{FactorKind::Tens, d}}, n, p)->dim() == static_cast<std::size_t>(tens));
          CHECK(word({{FactorKind::Sym, d}, {FactorKind::Ext, 2}}, n, p)->dim() ==
                static_cast<std::size_t>(oracle::binom(n + d - 1, d) * oracle::binom(n, 2)));
        }
    CHECK(FunctorDescriptor{{{FactorKind::Sym, 2}, {FactorKind::Ext, 1}}}.degree() == 3);
  }

  TEST_CASE("weight spaces partition the basis") {
    const ModulePtr m = omega_module(3, 3, 1, 3);
    std::size_t total = 0;
    for (const Weight& w : m->weights) {
      total += m->weight_dim(w);
      int s = 0;
      for (int x : w) s += x;
      CHECK(s == 3);
    }
    CHECK(total == m->dim());
  }

  TEST_CASE("Koszul and de Rham relations") {
    for (int p : {2, 3, 5}) {
      const int n = p;
      for (int e : {p - 1, p}) {
        if (e < 1) continue;
        std::vector<ModulePtr> om;
        for (int i = 0; i <= e; ++i) {
          om.push_back(omega_module(p, e, i, n));
          CHECK(om.back()->dim() == static_cast<std::size_t>(omega_dim(e, i, n)));
        }
        for (int i = 0; i <= e; ++i) {
          FpMatrix total(p, om[static_cast<std::size_t>(i)]->dim(), om[static_cast<std::size_t>(i)]->dim());
          if (i >= 1) {
            const LinMap k = koszul_map(om[static_cast<std::size_t>(i)], om[static_cast<std::size_t>(i - 1)]);
            CHECK(k.is_equivariant());
            total = total + compose(derham_map(om[static_cast<std::size_t>(i - 1)], om[static_cast<std::size_t>(i)]), k).matrix;
            if (i >= 2) CHECK(compose(koszul_map(om[static_cast<std::size_t>(i - 1)], om[static_cast<std::size_t>(i - 2)]), k).matrix.is_zero());
          }
          if (i < e) {
            const LinMap d = derham_map(om[static_cast<std::size_t>(i)], om[static_cast<std::size_t>(i + 1)]);
            CHECK(d.is_equivariant());
            total = total + compose(koszul_map(om[static_cast<std::size_t>(i + 1)], om[static_cast<std::size_t>(i)]), d).matrix;
            if (i + 2 <= e) CHECK(compose(derham_map(om[static_cast<std::size_t>(i + 1)], om[static_cast<std::size_t>(i + 2)]), d).matrix.is_zero());
          }
          CHECK(total == FpMatrix::identity(p, om[static_cast<std::size_t>(i)]->dim()).scaled(e));
        }
      }
    }
  }

  TEST_CASE("Schur module dimensions match the hook content formula") {
    for (int p : {2, 3, 5})
      for (int n = 1; n <= 3; ++n)
        for (int e = 1; e <= 4; ++e)
          for (const Partition& lambda : enumerate_partitions(e)) {
            const long long want = oracle::semistandard_count(lambda.conjugate().parts(), n);
            CHECK(schur_dimension(lambda, n, p) == want);
            if (e <= n) CHECK(static_cast<long long>(schur_module(lambda, n, p).module->dim()) == want);
          }
  }

  TEST_CASE("extreme Schur, Weyl and simple functors") {
    for (int p : {2, 3}) {
      const int n = 3;
      for (int e = 1; e <= 3; ++e) {
        const Partition column(std::vector<int>(static_cast<std::size_t>(e), 1)), row{e};
        CHECK(schur_module(column, n, p).module->dim() == word({{FactorKind::Sym, e}}, n, p)->dim());
        CHECK(weyl_module(column, n, p)->dim() == word({{FactorKind::Div, e}}, n, p)->dim());
        CHECK(schur_module(row, n, p).module->dim() == word({{FactorKind::Ext, e}}, n, p)->dim());
        CHECK(weyl_module(row, n, p)->dim() == word({{FactorKind::Ext, e}}, n, p)->dim());
        CHECK(simple_module(row, n, p).module->dim() == word({{FactorKind::Ext, e}}, n, p)->dim());
      }
      const Partition ones(std::vector<int>(static_cast<std::size_t>(p), 1));
      CHECK(simple_module(ones, n, p).module->dim() == static_cast<std::size_t>(n));
    }
  }

  TEST_CASE("hook block modules have the expected dimensions") {
    for (int p : {2, 3, 5}) {
      const int n = p;
      auto hb = HookBlockModules::get(p, n);
      for (int i = 0; i < p; ++i) {
        CHECK(static_cast<long long>(hb->schur(i).module->dim()) == schur_hook_dim(i, p, n));
        CHECK(hb->weyl(i)->dim() == hb->schur(i).module->dim());
        CHECK(static_cast<long long>(hb->simple(i).module->dim()) == simple_hook_dim(i, p, n));
        CHECK(hb->simple_in_omega(i).is_equivariant());
      }
      for (int i = 0; i <= p; ++i) CHECK(hb->omega_dual(i)->dim() == hb->omega(i)->dim());
      CHECK(hb->simple(0).module->dim() == static_cast<std::size_t>(n));
      CHECK(hb->schur(p - 1).module->dim() == 1 * static_cast<std::size_t>(oracle::binom(n, p)));
    }
    auto hb3 = HookBlockModules::get(3, 3);
    CHECK(hb3->schur(1).module->dim() == 18 - rank(hb3->kappa(1).matrix));
  }

  TEST_CASE("Kuhn duality") {
    for (int e = 1; e <= 3; ++e) {
      const ModulePtr sym = word({{FactorKind::Sym, e}}, 3, 3), div = word({{FactorKind::Div, e}}, 3, 3);
      const ModulePtr dual = kuhn_dual(sym);
      CHECK(dual->dim() == div->dim());
      bool iso = false;
      for (const LinMap& f : hom_basis(div, dual)) iso = iso || rank(f.matrix) == div->dim();
      CHECK(iso);
    }
    auto hb = HookBlockModules::get(3, 3);
    for (int i = 0; i < 3; ++i) {
      const ModulePtr w = weyl_module(hook_partition(HookIdx{3, i}), 3, 3);
      CHECK(w->dim() == hb->weyl(i)->dim());
      bool iso = false;
      for (const LinMap& f : hom_basis(w, hb->weyl(i))) iso = iso || rank(f.matrix) == w->dim();
      CHECK(iso);
    }
    const LinMap k = hb->kappa(2);
    const LinMap kd = kuhn_dual(k, hb->omega_dual(2), hb->omega_dual(1));
    CHECK(kd.matrix == k.matrix.transpose());
    CHECK(kd.is_equivariant());
  }

  TEST_CASE("Hom spaces in the hook block") {
    for (int p : {2, 3, 5}) {
      auto hb = HookBlockModules::get(p, p);
      for (int l = 0; l < p; ++l)
        for (int m = 0; m < p; ++m) CHECK(hom_dimension(hb->weyl(l), hb->schur(m).module) == (l == m ? 1u : 0u));
      for (int m = 0; m < p; ++m)
        for (int k = 0; k <= p - 1; ++k)
          CHECK(hom_dimension(hb->schur(m).module, hb->omega(k)) == ((k == m || k == m + 1) ? 1u : 0u));
      CHECK(hom_dimension(hb->simple(0).module, hb->omega(0)) == 1);
    }
    auto hb3 = HookBlockModules::get(3, 3);
    CHECK(hom_dimension(hb3->schur(1).module, hb3->omega(3)) == 1);
  }

  TEST_CASE("Schur filtration multiplicities") {
    const int p = 3, n = 3;
    auto hb = HookBlockModules::get(p, n);
    for (int i = 0; i <= p; ++i)
      for (const Partition& mu : enumerate_partitions(p)) {
        const bool hook_i = i < p && mu == hook_partition(HookIdx{p, i});
        const bool hook_prev = i >= 1 && mu == hook_partition(HookIdx{p, i - 1});
        CHECK(multiplicity(hb->omega(i), mu) == ((hook_i || hook_prev) ? 1u : 0u));
      }
    for (const Partition& mu : enumerate_partitions(p))
      CHECK(multiplicity(word({{FactorKind::Sym, p}}, n, p), mu) == (mu == Partition{1, 1, 1} ? 1u : 0u));
  }

  TEST_CASE("submodules, kernels and images") {
    auto hb = HookBlockModules::get(3, 3);
    const LinMap& k = hb->kappa(2);
    const Embedding ker = kernel_submodule(k, "ker");
    const Embedding img = image_submodule(k, "img");
    CHECK(ker.module->dim() + img.module->dim() == k.source->dim());
    CHECK(compose(k, ker.inclusion).matrix.is_zero());
    CHECK(ker.inclusion.is_equivariant());
    const LinMap co = corestrict(k, img.inclusion);
    CHECK(compose(img.inclusion, co).matrix == k.matrix);
    CHECK(compose(identity_map(k.target), k).matrix == k.matrix);
    CHECK(zero_map(k.source, k.target).matrix.is_zero());
    // A single weight vector of Omega^0 = S^3 does not span a submodule.
    const ModulePtr s3 = hb->omega(0);
    const Weight w = s3->weights.front();
    FpMatrix v(3, s3->weight_dim(w), 1);
    v.set(0, 0, 1);
    CHECK_THROWS_AS(submodule(s3, {{w, v}}, "bad"), std::logic_error);
  }

  TEST_CASE("serialization") {
    auto hb = HookBlockModules::get(2, 2);
    const auto j = to_json(*hb->omega(1));
    CHECK(j.contains("basis"));
    CHECK(to_json(hb->kappa(1)).is_object());
  }
}
