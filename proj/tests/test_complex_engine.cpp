#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hookblock/complex_engine.hpp"
#include "oracles.hpp"

using namespace hookblock;

TEST_SUITE("complex_engine") {
  TEST_CASE("Koszul complex is acyclic and de Rham homology has the Cartier dimensions") {
    for (int p : {2, 3, 5})
      for (int n : {p, p + 1}) {
        if (p == 5 && n != p) continue;
        const ComplexPtr k = koszul_complex(p, n);
        CHECK(k->squares_to_zero());
        for (int m = k->lo(); m <= k->hi(); ++m) CHECK(homology(*k, m) == 0);
        const ComplexPtr d = derham_complex(p, n);
        CHECK(d->squares_to_zero());
        for (int i = 0; i <= p; ++i) CHECK(homology(*d, i) == (i <= 1 ? static_cast<std::size_t>(n) : 0u));
        const CartierReport c = cartier_kernel_check(p, n);
        CHECK(c.ok);
        REQUIRE(!c.dims.empty());
        CHECK(c.dims[0] == static_cast<std::size_t>(n));
        for (std::size_t i = 1; i < c.dims.size(); ++i) CHECK(c.dims[i] == 0);
      }
  }

  TEST_CASE("homology representatives are cycles spanning the homology") {
    const ComplexPtr d = derham_complex(3, 3);
    for (int q : {0, 1}) {
      const auto reps = homology_representatives(*d, q);
      CHECK(reps.size() == homology(*d, q));
      const FpMatrix dq = d->differential(q).to_dense();
      for (const FpVector& v : reps) {
        const FpVector dv = dq * v;
        CHECK(std::all_of(dv.begin(), dv.end(), [](fp_t x) { return x == 0; }));
      }
    }
  }

  TEST_CASE("all resolutions are exact with the right zeroth homology") {
    for (int p : {2, 3, 5}) {
      const int n = p;
      auto hb = HookBlockModules::get(p, n);
      for (int i = 0; i < p; ++i) {
        const Resolution rs[] = {schur_injective_resolution(i, p, n), schur_projective_resolution(i, p, n),
                                 weyl_projective_resolution(i, p, n), simple_injective_resolution(i, p, n),
                                 simple_projective_resolution(i, p, n)};
        for (const Resolution& r : rs) {
          CAPTURE(r.complex->label());
          const ExactnessReport e = check_resolution(r);
          CHECK(e.exact);
          CHECK(e.augmentation_ok);
          CHECK(r.complex->squares_to_zero());
          CHECK(e.resolved_dim == r.resolved->dim());
        }
        CHECK(homology(*rs[0].complex, 0) == hb->schur(i).module->dim());
        CHECK(homology(*rs[3].complex, 0) == hb->simple(i).module->dim());
        for (int m = 1; m <= rs[3].complex->hi(); ++m) CHECK(homology(*rs[3].complex, m) == 0);
        CHECK(rs[0].injective);
        CHECK_FALSE(rs[1].injective);
      }
      // T_i runs Omega^i, ..., Omega^0; for S_0 = S^p it is the module itself.
      for (int i = 0; i < p; ++i) {
        const Resolution r = schur_injective_resolution(i, p, n);
        CHECK(r.complex->lo() == 0);
        CHECK(r.complex->hi() == i);
      }
    }
  }

  TEST_CASE("double complex R_i shape and relations") {
    for (int p : {2, 3, 5})
      for (int i = 0; i < p; ++i) {
        const DoubleComplex dc = simple_double_complex(i, p, p);
        CHECK(dc.horizontal_squares_vanish());
        CHECK(dc.vertical_squares_vanish());
        CHECK(dc.anticommutes());
        std::size_t cells = 0;
        for (int r = 0; r <= p - 1; ++r)
          for (int s = 0; s <= p - i - 1; ++s)
            if (r - s <= i) {
              ++cells;
              REQUIRE(dc.terms.count({r, s}));
              CHECK(dc.terms.at({r, s})->dim() == HookBlockModules::get(p, p)->omega(i + s - r)->dim());
            }
        CHECK(dc.terms.size() == cells);
        CHECK(dc.totalize().squares_to_zero());
      }
    const DoubleComplex r2 = simple_double_complex(2, 5, 5);
    std::map<int, int> rows;
    for (const auto& [cell, m] : r2.terms) ++rows[cell.second];
    CHECK(rows == std::map<int, int>{{0, 3}, {1, 4}, {2, 5}});
  }

  TEST_CASE("chain maps between the injective resolutions") {
    const int p = 3, n = 3;
    for (int i = 0; i < p; ++i) {
      for (int j = i; j < p; ++j) {
        const ChainMap g = chain_map_gamma(j, i, p, n);
        CHECK(g.is_chain_map());
        CHECK(g.shift == j - i);
        CHECK_FALSE(null_homotopy(g).has_value());
        for (int m = j; m < p; ++m) CHECK(compose_chain_maps(chain_map_gamma(m, j, p, n), g) == chain_map_gamma(m, i, p, n));
      }
      for (int j = i + 1; j < p; ++j) {
        const ChainMap gb = chain_map_gamma_bar(j, i, p, n);
        CHECK(gb.is_chain_map());
        CHECK_FALSE(null_homotopy(gb).has_value());
      }
      if (i <= p - 2) CHECK(chain_map_dtilde(i, p, n).is_chain_map());
    }
    CHECK_THROWS(chain_map_dtilde(p - 1, p, n));
    const ChainMap id = identity_chain_map(chain_map_gamma(1, 1, p, n).source);
    CHECK(id == chain_map_gamma(1, 1, p, n));
    const ChainMap z = zero_chain_map(id.source, id.target, 0);
    CHECK(z.is_zero());
    CHECK(z.is_chain_map());
    CHECK(null_homotopy(z).has_value());
  }

  TEST_CASE("alpha maps on the simple resolutions") {
    const int p = 3, n = 3;
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        for (int t = std::abs(i - j); t <= 2 * p - i - j - 2; t += 2) {
          const ChainMap a = chain_map_alpha(j, i, t, p, n);
          CHECK(a.is_chain_map());
          CHECK(a.shift == t);
        }
    CHECK_THROWS(chain_map_alpha(0, 0, 1, p, n));
    CHECK_FALSE(null_homotopy(chain_map_alpha(1, 0, 2 * p - 3, p, n)).has_value());
  }

  TEST_CASE("Hom complex Ext dimensions") {
    const int p = 3, n = 3;
    auto hb = HookBlockModules::get(p, n);
    for (int i = 0; i < p; ++i) {
      HomComplex h(complex_from_module(hb->schur(i).module), schur_injective_resolution(i, p, n).complex);
      CHECK(h.ext_dimension(0) == 1);
      for (int t = 1; t <= 2 * p; ++t) CHECK(h.ext_dimension(t) == 0);
    }
    HomComplex ff(simple_injective_resolution(0, p, n).complex, simple_injective_resolution(0, p, n).complex);
    for (int t = 0; t <= 5; ++t) CHECK(ff.ext_dimension(t) == (t % 2 == 0 ? 1u : 0u));
  }

  TEST_CASE("dual complexes") {
    const ComplexPtr t = schur_injective_resolution(1, 3, 3).complex;
    const ComplexPtr d = dual_complex(*t);
    CHECK(d->squares_to_zero());
    CHECK(d->lo() == -t->hi());
    CHECK(d->hi() == -t->lo());
    for (int m = t->lo(); m <= t->hi(); ++m) CHECK(d->term(-m).dim() == t->term(m).dim());
  }

  TEST_CASE("oracle examples") {
    CHECK(ext_oracle(ObjectKind{Kind::Simple, 0}, ObjectKind{Kind::Simple, 0}, 3, 3, 6).dims ==
          std::map<int, int>{{0, 1}, {2, 1}, {4, 1}});
    for (int m = 0; m < 3; ++m)
      for (int k = 0; k < 3; ++k)
        CHECK(ext_oracle(ObjectKind{Kind::Weyl, m}, ObjectKind{Kind::Schur, k}, 3, 3, 6).dims ==
              (m == k ? std::map<int, int>{{0, 1}} : std::map<int, int>{}));
  }
}
