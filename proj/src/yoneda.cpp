#include "hookblock/yoneda.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookblock {

std::string family_name(Family f) { return f == Family::Schur ? "schur" : "simple"; }

Family parse_family(const std::string& text) {
  if (text == "schur") return Family::Schur;
  if (text == "simple") return Family::Simple;
  throw std::invalid_argument("family must be schur or simple: " + text);
}

std::vector<FamilyMap> yoneda_family(Family f, int p, int n) {
  std::vector<FamilyMap> out;
  if (f == Family::Schur) {
    for (int i = 0; i < p; ++i)
      for (int j = i; j < p; ++j) out.push_back({label_a(j, i), i, j, j - i, chain_map_gamma(j, i, p, n)});
    for (int i = 0; i < p; ++i)
      for (int j = i + 1; j < p; ++j)
        out.push_back({label_abar(j, i), i, j, j - i - 1, chain_map_gamma_bar(j, i, p, n)});
  } else {
    for (int i = 0; i < p; ++i)
      for (int j = 0; j < p; ++j)
        for (int r = 0; r <= p - std::max(i, j) - 1; ++r) {
          const int t = std::abs(i - j) + 2 * r;
          out.push_back({label_b(t, j, i), i, j, t, chain_map_alpha(j, i, t, p, n)});
        }
  }
  return out;
}

namespace {

std::string pair_name(const std::string& a, const std::string& b) { return a + " * " + b; }

}  // namespace

CheckReport verify_product_tables(int p, int n) {
  CheckReport rep;
  auto expect = [&](const ChainMap& got, const ChainMap& want, const std::string& what) {
    if (!(got == want)) rep.fail(what);
  };
  for (int i = 0; i < p; ++i)
    for (int j = i; j < p; ++j)
      for (int m = j; m < p; ++m) {
        const ChainMap g_ml = chain_map_gamma(m, j, p, n), g_ji = chain_map_gamma(j, i, p, n);
        expect(compose_chain_maps(g_ml, g_ji), chain_map_gamma(m, i, p, n),
               pair_name(label_a(m, j), label_a(j, i)));
        if (i < j)
          expect(compose_chain_maps(g_ml, chain_map_gamma_bar(j, i, p, n)), chain_map_gamma_bar(m, i, p, n),
                 pair_name(label_a(m, j), label_abar(j, i)));
        if (j < m)
          expect(compose_chain_maps(chain_map_gamma_bar(m, j, p, n), g_ji), chain_map_gamma_bar(m, i, p, n),
                 pair_name(label_abar(m, j), label_a(j, i)));
        if (i < j && j < m) {
          const ChainMap prod = compose_chain_maps(chain_map_gamma_bar(m, j, p, n), chain_map_gamma_bar(j, i, p, n));
          if (!prod.is_zero()) rep.fail(pair_name(label_abar(m, j), label_abar(j, i)));
        }
      }
  const auto alphas = yoneda_family(Family::Simple, p, n);
  for (const FamilyMap& x : alphas)
    for (const FamilyMap& y : alphas) {
      if (y.target != x.source) continue;
      const ChainMap prod = compose_chain_maps(x.map, y.map);
      const int t = x.degree + y.degree;
      if (t <= 2 * p - y.source - x.target - 2)
        expect(prod, chain_map_alpha(x.target, y.source, t, p, n), pair_name(x.label, y.label));
      else if (!prod.is_zero())
        rep.fail(pair_name(x.label, y.label) + " is not zero");
    }
  return rep;
}

CheckReport certify_non_null(int p, int n) {
  CheckReport rep;
  for (const FamilyMap& f : yoneda_family(Family::Schur, p, n))
    if (null_homotopy(f.map)) rep.fail(f.label + " is null-homotopic");
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      const int t = 2 * p - i - j - 2;
      if (null_homotopy(chain_map_alpha(j, i, t, p, n))) rep.fail(label_b(t, j, i) + " is null-homotopic");
    }
  return rep;
}

namespace {

ComplexPtr family_complex(Family f, int i, int p, int n) {
  return f == Family::Schur ? schur_injective_resolution(i, p, n).complex : simple_injective_resolution(i, p, n).complex;
}

Kind family_kind(Family f) { return f == Family::Schur ? Kind::Schur : Kind::Simple; }

const FamilyMap* find_map(const std::vector<FamilyMap>& fam, const std::string& label) {
  for (const FamilyMap& m : fam)
    if (m.label == label) return &m;
  return nullptr;
}

}  // namespace

FormalityReport formality_certificate(Family f, int p, int n) {
  FormalityReport rep;
  const auto fam = yoneda_family(f, p, n);
  for (const FamilyMap& m : fam)
    if (!m.map.is_chain_map()) rep.check.fail(m.label + " is not a cycle");
  for (const FamilyMap& x : fam)
    for (const FamilyMap& y : fam) {
      if (y.target != x.source) continue;
      const ChainMap prod = compose_chain_maps(x.map, y.map);
      if (prod.is_zero()) continue;
      const bool found = std::any_of(fam.begin(), fam.end(), [&](const FamilyMap& z) { return z.map == prod; });
      if (!found) rep.check.fail(pair_name(x.label, y.label) + " leaves the family");
    }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      HomComplex hc(family_complex(f, i, p, n), family_complex(f, j, p, n));
      const ExtTable closed = ext_table({family_kind(f), i}, {family_kind(f), j}, p);
      for (int t = 0; t <= 2 * p; ++t) {
        std::vector<ChainMap> maps;
        for (const FamilyMap& m : fam)
          if (m.source == i && m.target == j && m.degree == t) maps.push_back(m.map);
        const int span = static_cast<int>(hc.class_rank(maps));
        const int ext = static_cast<int>(hc.ext_dimension(t));
        const std::string where = "(" + std::to_string(i) + "->" + std::to_string(j) + ", t=" + std::to_string(t) + ")";
        if (span != static_cast<int>(maps.size())) rep.check.fail("dependent classes " + where);
        if (span != ext) rep.check.fail("classes do not span Ext " + where);
        if (ext != closed.at(t)) rep.check.fail("Ext dimension differs from the closed form " + where);
        if (span || ext) {
          rep.degree_dims[t].first += span;
          rep.degree_dims[t].second += ext;
        }
      }
    }
  return rep;
}

CheckReport compare_model_oracle(Family f, int p, int n) {
  CheckReport rep;
  const GradedAlgebraModel model = f == Family::Schur ? model_schur_yoneda(p) : model_simple_yoneda(p);
  const auto fam = yoneda_family(f, p, n);
  if (fam.size() != model.dim()) rep.fail("basis sizes differ");
  std::vector<const FamilyMap*> image(model.dim(), nullptr);
  for (std::size_t x = 0; x < model.dim(); ++x) {
    image[x] = find_map(fam, model.label(x));
    if (!image[x]) {
      rep.fail("no chain map for " + model.label(x));
      return rep;
    }
    if (image[x]->degree != model.degree(x) || image[x]->map.shift != model.degree(x))
      rep.fail("degree mismatch at " + model.label(x));
  }
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) {
      // classes of distinct basis elements with the same ends and degree are independent
      std::map<int, std::vector<ChainMap>> by_degree;
      for (std::size_t x = 0; x < model.dim(); ++x)
        if (image[x]->source == i && image[x]->target == j) by_degree[model.degree(x)].push_back(image[x]->map);
      if (by_degree.empty()) continue;
      HomComplex hc(family_complex(f, i, p, n), family_complex(f, j, p, n));
      for (const auto& [t, maps] : by_degree)
        if (hc.class_rank(maps) != maps.size()) rep.fail("classes not independent at degree " + std::to_string(t));
    }
  for (std::size_t x = 0; x < model.dim(); ++x)
    for (std::size_t y = 0; y < model.dim(); ++y) {
      const GradedAlgebraModel::Vec prod = model.product(x, y);
      const FamilyMap& fx = *image[x];
      const FamilyMap& fy = *image[y];
      if (fy.target != fx.source) {
        if (!prod.empty()) rep.fail("model product of non-composable " + pair_name(model.label(x), model.label(y)));
        continue;
      }
      ChainMap want = zero_chain_map(fy.map.source, fx.map.target, fx.degree + fy.degree);
      for (auto [z, c] : prod) {
        const ChainMap& mz = image[z]->map;
        if (mz.source != want.source || mz.target != want.target || mz.shift != want.shift) {
          rep.fail("product lands in the wrong Hom space at " + pair_name(model.label(x), model.label(y)));
          continue;
        }
        for (const auto& [m, comp] : mz.components) want.components[m] = want.component(m) + comp.scaled(c);
      }
      for (auto it = want.components.begin(); it != want.components.end();)
        it = it->second.is_zero() ? want.components.erase(it) : std::next(it);
      if (!(compose_chain_maps(fx.map, fy.map) == want))
        rep.fail("structure constants differ at " + pair_name(model.label(x), model.label(y)));
    }
  return rep;
}

}  // namespace hookblock
