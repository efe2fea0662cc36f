#include "hookblock/audits.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace hookblock {

namespace {

std::string idx(int i) { return std::to_string(i); }

}  // namespace

CheckReport relation_check(int p, int n) {
  CheckReport rep;
  auto hb = HookBlockModules::get(p, n);
  std::vector<ComplexPtr> complexes{koszul_complex(p, n), derham_complex(p, n), koszul_kernel_complex(p, n)};
  for (int i = 0; i < p; ++i) {
    complexes.push_back(schur_injective_resolution(i, p, n).complex);
    complexes.push_back(schur_projective_resolution(i, p, n).complex);
    complexes.push_back(weyl_projective_resolution(i, p, n).complex);
    complexes.push_back(simple_injective_resolution(i, p, n).complex);
    complexes.push_back(simple_projective_resolution(i, p, n).complex);
    const DoubleComplex dc = simple_double_complex(i, p, n);
    if (!dc.horizontal_squares_vanish() || !dc.vertical_squares_vanish() || !dc.anticommutes())
      rep.fail("double complex R_" + idx(i));
  }
  for (const ComplexPtr& c : complexes)
    if (!c->squares_to_zero()) rep.fail("d∘d != 0 on " + c->label());
  for (int e : {p, p - 1}) {
    std::vector<ModulePtr> om;
    for (int i = 0; i <= e; ++i) om.push_back(omega_module(p, e, i, n));
    for (int i = 0; i <= e; ++i) {
      const auto ui = static_cast<std::size_t>(i);
      FpMatrix acc(p, om[ui]->dim(), om[ui]->dim());
      if (i > 0) acc = acc + compose(derham_map(om[ui - 1], om[ui]), koszul_map(om[ui], om[ui - 1])).matrix;
      if (i < e) acc = acc + compose(koszul_map(om[ui + 1], om[ui]), derham_map(om[ui], om[ui + 1])).matrix;
      if (!(acc == FpMatrix::identity(p, om[ui]->dim()).scaled(e)))
        rep.fail("d kappa + kappa d != " + idx(e) + " id on Omega^" + idx(i) + "_" + idx(e));
    }
  }
  for (int i = 0; i <= p; ++i) {
    if (i > 0 && !hb->kappa(i).is_equivariant()) rep.fail("kappa_" + idx(i) + " not equivariant");
    if (i < p && !hb->derham(i).is_equivariant()) rep.fail("d_" + idx(i) + " not equivariant");
  }
  return rep;
}

namespace {

bool same_span(const LinMap& a, const LinMap& b) {
  return Subspace::span_columns(a.matrix) == Subspace::span_columns(b.matrix);
}

}  // namespace

CheckReport cokernel_identification(int p, int n) {
  CheckReport rep;
  auto hb = HookBlockModules::get(p, n);
  for (int j = 2; j <= p; ++j) {
    const std::size_t coker_dim = hb->omega(j - 1)->dim() - rank(hb->kappa(j).matrix);
    const Embedding image = image_submodule(hb->kappa(j - 1), "coker kappa_" + idx(j));
    if (coker_dim != image.module->dim() || coker_dim != hb->schur(j - 2).module->dim())
      rep.fail("dim coker kappa_" + idx(j));
    if (!same_span(image.inclusion, hb->schur(j - 2).inclusion)) rep.fail("coker kappa_" + idx(j) + " != S_" + idx(j - 2));
    const Embedding kernel = kernel_submodule(hb->kappa_dual(j), "ker kappa_" + idx(j) + "#");
    if (kernel.module->dim() != coker_dim) rep.fail("dim ker kappa_" + idx(j) + "#");
    for (int m = 0; m < p; ++m) {
      const std::size_t want = m == j - 2 ? 1 : 0;
      if (hom_dimension(hb->weyl(m), image.module) != want)
        rep.fail("Hom(W_" + idx(m) + ", coker kappa_" + idx(j) + ")");
      if (hom_dimension(kernel.module, hb->schur(m).module) != want)
        rep.fail("Hom(ker kappa_" + idx(j) + "#, S_" + idx(m) + ")");
    }
  }
  return rep;
}

namespace {

// Sign of the permutation sorting v, or 0 when v has repeated entries.
int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t b = 0; b + 1 < v.size() - a; ++b)
      if (v[b] > v[b + 1]) {
        std::swap(v[b], v[b + 1]);
        sign = -sign;
      } else if (v[b] == v[b + 1]) {
        return 0;
      }
  for (std::size_t b = 0; b + 1 < v.size(); ++b)
    if (v[b] == v[b + 1]) return 0;
  return sign;
}

}  // namespace

CheckReport injectivity_audit(int p, int n) {
  CheckReport rep;
  auto hb = HookBlockModules::get(p, n);
  const auto un = static_cast<std::size_t>(n);
  for (int i = 0; i <= p - 1; ++i) {
    const ModulePtr& om = hb->omega(i);
    std::vector<Factor> factors{{FactorKind::Sym, p - i}};
    for (int k = 0; k < i; ++k) factors.push_back({FactorKind::Sym, 1});
    const ModulePtr big = eval_space(FunctorDescriptor{factors}, n, p);
    FpMatrix iota(p, big->dim(), om->dim());
    FpMatrix pi(p, om->dim(), big->dim());
    long long fact = 1;
    for (int k = 2; k <= i; ++k) fact *= k;
    const long long inv_fact = fp_inverse(fp_reduce(fact, p), p);
    for (std::size_t s = 0; s < om->dim(); ++s) {
      const auto& mono = om->monomials[s];
      std::vector<int> ext;
      for (std::size_t k = 0; k < un; ++k)
        if (mono[un + k]) ext.push_back(static_cast<int>(k));
      std::vector<int> perm(ext.size());
      std::iota(perm.begin(), perm.end(), 0);
      do {
        std::vector<int> key(mono.begin(), mono.begin() + static_cast<long>(un));
        std::vector<int> order;
        for (int q : perm) {
          std::vector<int> unit(un, 0);
          unit[static_cast<std::size_t>(ext[static_cast<std::size_t>(q)])] = 1;
          key.insert(key.end(), unit.begin(), unit.end());
          order.push_back(q);
        }
        const int sign = sort_sign(order);
        iota.add_to(static_cast<std::size_t>(big->monomial_lookup.at(key)), s, sign);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    for (std::size_t s = 0; s < big->dim(); ++s) {
      const auto& mono = big->monomials[s];
      std::vector<int> slots;
      for (int k = 0; k < i; ++k) {
        const auto base = un * static_cast<std::size_t>(k + 1);
        for (std::size_t c = 0; c < un; ++c)
          if (mono[base + c]) slots.push_back(static_cast<int>(c));
      }
      const int sign = sort_sign(slots);
      if (sign == 0) continue;
      std::vector<int> key(mono.begin(), mono.begin() + static_cast<long>(un));
      std::vector<int> ext(un, 0);
      for (int c : slots) ext[static_cast<std::size_t>(c)] = 1;
      key.insert(key.end(), ext.begin(), ext.end());
      pi.add_to(static_cast<std::size_t>(om->monomial_lookup.at(key)), s, sign * inv_fact);
    }
    const LinMap inc{om, big, iota}, proj{big, om, pi};
    if (!inc.is_equivariant() || !proj.is_equivariant()) rep.fail("antisymmetrizer maps for Omega^" + idx(i));
    if (!(pi * iota == FpMatrix::identity(p, om->dim()))) rep.fail("Omega^" + idx(i) + " is not split off");
  }
  for (int k = 0; k <= p - 1; ++k) {
    const ModulePtr& om = hb->omega(k);
    auto h = [&](const ModulePtr& m) { return hom_dimension(m, om); };
    for (int j = 0; j < p; ++j) {
      const std::size_t next = j + 1 < p ? h(hb->simple(j + 1).module) : 0;
      const std::size_t here = h(hb->simple(j).module);
      if (h(hb->weyl(j)) != here + next) rep.fail("Hom(-, Omega^" + idx(k) + ") on the sequence through W_" + idx(j));
      if (h(hb->schur(j).module) != here + next) rep.fail("Hom(-, Omega^" + idx(k) + ") on the sequence through S_" + idx(j));
    }
  }
  return rep;
}

IndecomposabilityReport indecomposability_audit(int p, int n) {
  IndecomposabilityReport rep;
  auto hb = HookBlockModules::get(p, n);
  for (int i = 0; i <= p - 1; ++i) {
    const ModulePtr& om = hb->omega(i);
    const std::vector<LinMap> basis = hom_basis(om, om);
    rep.endomorphism_dims[i] = static_cast<int>(basis.size());
    double count = 1;
    for (std::size_t k = 0; k < basis.size(); ++k) count *= p;
    if (count > 1e5) {
      rep.check.fail("End(Omega^" + idx(i) + ") too large to enumerate");
      continue;
    }
    std::vector<int> coef(basis.size(), 0);
    for (bool more = true; more;) {
      FpMatrix m(p, om->dim(), om->dim());
      for (std::size_t k = 0; k < basis.size(); ++k) m = m + basis[k].matrix.scaled(coef[k]);
      if (rank(m) != om->dim()) {
        FpMatrix pw = m;
        for (std::size_t reach = 1; reach < om->dim(); reach *= 2) pw = pw * pw;
        if (!pw.is_zero()) rep.check.fail("End(Omega^" + idx(i) + ") has a non-nilpotent non-unit");
      }
      more = false;
      for (std::size_t k = 0; k < coef.size(); ++k) {
        if (++coef[k] < p) {
          more = true;
          break;
        }
        coef[k] = 0;
      }
    }
  }
  return rep;
}

namespace {

using Character = std::map<Weight, long long>;

Character character(const PFModule& m) {
  Character c;
  for (std::size_t w = 0; w < m.weights.size(); ++w) c[m.weights[w]] = static_cast<long long>(m.members[w].size());
  return c;
}

}  // namespace

DecompositionDerivation decomposition_from_characters(int p, int n) {
  DecompositionDerivation out;
  auto hb = HookBlockModules::get(p, n);
  const auto P = static_cast<std::size_t>(p);
  std::vector<Character> simple(P);
  std::vector<Weight> top(P);
  for (std::size_t m = 0; m < P; ++m) {
    simple[m] = character(*hb->simple(static_cast<int>(m)).module);
    top[m] = simple[m].rbegin()->first;  // lexicographically largest weight
  }
  out.matrix.assign(P, std::vector<int>(P, 0));
  for (std::size_t l = 0; l < P; ++l) {
    Character rest = character(*hb->weyl(static_cast<int>(l)));
    while (!rest.empty()) {
      const auto [w, mult] = *rest.rbegin();
      auto it = std::find(top.begin(), top.end(), w);
      if (it == top.end() || mult < 0) {
        out.check.fail("character of W_" + idx(static_cast<int>(l)) + " is not a sum of simple characters");
        break;
      }
      const auto m = static_cast<std::size_t>(it - top.begin());
      out.matrix[l][m] += static_cast<int>(mult);
      for (const auto& [v, c] : simple[m]) {
        rest[v] -= mult * c;
        if (rest[v] == 0) rest.erase(v);
      }
    }
    // kernel of the map W_l -> S_l with image F_l
    const std::vector<LinMap> maps = hom_basis(hb->weyl(static_cast<int>(l)), hb->schur(static_cast<int>(l)).module);
    if (maps.size() != 1) {
      out.check.fail("Hom(W_" + idx(static_cast<int>(l)) + ", S_" + idx(static_cast<int>(l)) + ") is not 1-dimensional");
      continue;
    }
    const Embedding kernel = kernel_submodule(maps.front(), "ker");
    const Character expect = l + 1 < P ? simple[l + 1] : Character{};
    if (character(*kernel.module) != expect) out.check.fail("kernel of W_" + idx(static_cast<int>(l)) + " -> S_" + idx(static_cast<int>(l)));
    const std::size_t next = l + 1 < P ? hb->simple(static_cast<int>(l) + 1).module->dim() : 0;
    const std::size_t here = hb->simple(static_cast<int>(l)).module->dim();
    if (hb->weyl(static_cast<int>(l))->dim() != here + next || hb->schur(static_cast<int>(l)).module->dim() != here + next)
      out.check.fail("dim W_" + idx(static_cast<int>(l)) + " != dim F_l + dim F_{l+1}");
  }
  if (out.matrix != decomposition_matrix(p)) out.check.fail("derived decomposition matrix differs from the closed form");
  return out;
}

}  // namespace hookblock
