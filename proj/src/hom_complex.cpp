#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "hookblock/complex_engine.hpp"

namespace hookblock {

namespace {

// Basis of Hom(a, b) together with entry positions that determine coordinates.
struct HomData {
  ModulePtr a;
  ModulePtr b;
  std::vector<FpMatrix> basis;
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col) entries
  FpMatrix inv;  // coordinates = inv * (values at pivots)

  std::size_t dim() const { return basis.size(); }
};

using HomDataPtr = std::shared_ptr<const HomData>;

HomDataPtr hom_data(const ModulePtr& a, const ModulePtr& b) {
  static std::mutex mutex;
  static std::map<std::pair<const PFModule*, const PFModule*>, HomDataPtr> cache;
  const auto key = std::make_pair(a.get(), b.get());
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto data = std::make_shared<HomData>();
  data->a = a;
  data->b = b;
  for (LinMap& f : hom_basis(a, b)) data->basis.push_back(std::move(f.matrix));
  const std::size_t k = data->basis.size();
  const int p = a->p;
  if (k > 0) {
    const std::size_t cols = a->dim();
    FpMatrix flat(p, k, b->dim() * cols);
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t r = 0; r < b->dim(); ++r)
        for (std::size_t c = 0; c < cols; ++c) flat.set(l, r * cols + c, data->basis[l](r, c));
    const RrefResult red = rref(flat);
    if (red.rank != k) throw std::logic_error("hom basis is not independent");
    FpMatrix pt(p, k, k);  // pt(q, l) = basis_l at pivot q
    for (std::size_t q = 0; q < k; ++q) {
      const std::size_t pos = red.pivots[q];
      data->pivots.emplace_back(pos / cols, pos % cols);
      for (std::size_t l = 0; l < k; ++l) pt.set(q, l, data->basis[l](pos / cols, pos % cols));
    }
    data->inv = inverse(pt);
  }
  std::lock_guard lock(mutex);
  return cache.emplace(key, data).first->second;
}

}  // namespace

struct HomComplex::Impl {
  struct Block {
    int m;
    std::size_t a;
    std::size_t b;
    HomDataPtr hom;
    std::size_t offset;
  };
  struct Layout {
    std::vector<Block> blocks;
    std::size_t dim = 0;
  };

  ComplexPtr x;
  ComplexPtr y;
  int p;
  std::map<int, Layout> layouts;
  std::map<int, FpMatrix> cycle_maps;     // t -> D_t : L_t -> L_{t+1}
  std::map<int, FpMatrix> boundary_maps;  // t -> H_t : L_t -> L_{t+1}
  std::map<int, SpMatrix> x_transposed;

  const Layout& layout(int t) {
    auto it = layouts.find(t);
    if (it != layouts.end()) return it->second;
    Layout lay;
    for (int m = x->lo(); m <= x->hi(); ++m) {
      const Term& src = x->term(m);
      const Term& tgt = y->term(m + t);
      for (std::size_t a = 0; a < src.summands.size(); ++a)
        for (std::size_t b = 0; b < tgt.summands.size(); ++b) {
          HomDataPtr h = hom_data(src.summands[a], tgt.summands[b]);
          if (h->dim() == 0) continue;
          lay.blocks.push_back(Block{m, a, b, h, lay.dim});
          lay.dim += h->dim();
        }
    }
    return layouts.emplace(t, std::move(lay)).first->second;
  }

  const SpMatrix& x_diff_t(int m) {
    auto it = x_transposed.find(m);
    if (it != x_transposed.end()) return it->second;
    return x_transposed.emplace(m, x->differential(m).transpose()).first->second;
  }

  // Adds coords(values) of a target block into column `col` of out.
  void add_coords(FpMatrix& out, std::size_t col, const Block& blk, const FpVector& values, long long sign) const {
    const FpVector c = blk.hom->inv * values;
    for (std::size_t l = 0; l < c.size(); ++l)
      if (c[l]) out.add_to(blk.offset + l, col, sign * static_cast<long long>(c[l]));
  }

  // Matrix of f |-> d_Y f + pre_sign * f d_X from L_t to L_{t+1}.
  FpMatrix build(int t, long long pre_sign) {
    const Layout& from = layout(t);
    const Layout& to = layout(t + 1);
    FpMatrix out(p, to.dim, from.dim);
    for (const Block& blk : from.blocks) {
      const int m = blk.m;
      const Term& xa = x->term(m);
      const Term& yb = y->term(m + t);
      const std::size_t off_a = xa.offset(blk.a), dim_a = xa.summands[blk.a]->dim();
      const std::size_t off_b = yb.offset(blk.b), dim_b = yb.summands[blk.b]->dim();
      const SpMatrix dy = y->differential(m + t);
      const SpMatrix& dxt = x_diff_t(m - 1);
      for (std::size_t l = 0; l < blk.hom->dim(); ++l) {
        const FpMatrix& beta = blk.hom->basis[l];
        const std::size_t col = blk.offset + l;
        for (const Block& tb : to.blocks) {
          FpVector values(tb.hom->dim(), 0);
          bool any = false;
          if (tb.m == m && tb.a == blk.a) {
            // d_Y beta : X^m(a) -> Y^{m+t+1}(tb.b)
            const std::size_t off_t = y->term(m + t + 1).offset(tb.b);
            for (std::size_t q = 0; q < values.size(); ++q) {
              const auto [r, c] = tb.hom->pivots[q];
              long long acc = 0;
              for (auto [k, v] : dy.row(off_t + r))
                if (k >= off_b && k < off_b + dim_b) acc += static_cast<long long>(v) * beta(k - off_b, c);
              values[q] = fp_reduce(acc, p);
              any = any || values[q];
            }
            if (any) add_coords(out, col, tb, values, 1);
          } else if (tb.m == m - 1 && tb.b == blk.b) {
            // beta d_X : X^{m-1}(tb.a) -> Y^{m+t}(b)
            const std::size_t off_s = x->term(m - 1).offset(tb.a);
            for (std::size_t q = 0; q < values.size(); ++q) {
              const auto [r, c] = tb.hom->pivots[q];
              long long acc = 0;
              for (auto [k, v] : dxt.row(off_s + c))
                if (k >= off_a && k < off_a + dim_a) acc += static_cast<long long>(v) * beta(r, k - off_a);
              values[q] = fp_reduce(acc, p);
              any = any || values[q];
            }
            if (any) add_coords(out, col, tb, values, pre_sign);
          }
        }
      }
    }
    return out;
  }

  const FpMatrix& cycle_map(int t) {
    auto it = cycle_maps.find(t);
    if (it != cycle_maps.end()) return it->second;
    return cycle_maps.emplace(t, build(t, -1)).first->second;
  }

  const FpMatrix& boundary_map(int t) {
    auto it = boundary_maps.find(t);
    if (it != boundary_maps.end()) return it->second;
    return boundary_maps.emplace(t, build(t, 1)).first->second;
  }

  FpVector coordinates(const ChainMap& f) {
    const Layout& lay = layout(f.shift);
    FpVector out(lay.dim, 0);
    for (const Block& blk : lay.blocks) {
      const SpMatrix comp = f.component(blk.m);
      const std::size_t off_a = x->term(blk.m).offset(blk.a);
      const std::size_t off_b = y->term(blk.m + f.shift).offset(blk.b);
      FpVector values(blk.hom->dim());
      for (std::size_t q = 0; q < values.size(); ++q) {
        const auto [r, c] = blk.hom->pivots[q];
        values[q] = comp.at(off_b + r, off_a + c);
      }
      const FpVector c = blk.hom->inv * values;
      for (std::size_t l = 0; l < c.size(); ++l) out[blk.offset + l] = c[l];
    }
    return out;
  }

  ChainMap reconstruct(int t, const FpVector& coords) {
    const Layout& lay = layout(t);
    std::map<int, std::vector<Triplet>> trip;
    for (const Block& blk : lay.blocks) {
      const std::size_t off_a = x->term(blk.m).offset(blk.a);
      const std::size_t off_b = y->term(blk.m + t).offset(blk.b);
      for (std::size_t l = 0; l < blk.hom->dim(); ++l) {
        const fp_t c = coords[blk.offset + l];
        if (!c) continue;
        const FpMatrix& beta = blk.hom->basis[l];
        auto& out = trip[blk.m];
        for (std::size_t r = 0; r < beta.rows(); ++r)
          for (std::size_t k = 0; k < beta.cols(); ++k)
            if (beta(r, k)) out.push_back(Triplet{off_b + r, off_a + k, static_cast<long long>(c) * beta(r, k)});
      }
    }
    ChainMap f{x, y, t, {}};
    for (auto& [m, list] : trip) {
      SpMatrix s(p, y->term(m + t).dim(), x->term(m).dim(), list);
      if (!s.is_zero()) f.components[m] = std::move(s);
    }
    return f;
  }

  // Coordinates of f, checking that f lies in the span of the hom bases.
  FpVector checked_coordinates(const ChainMap& f) {
    if (f.source != x || f.target != y) throw std::invalid_argument("chain map does not belong to this Hom complex");
    FpVector c = coordinates(f);
    ChainMap back = reconstruct(f.shift, c);
    ChainMap g = f;
    for (auto it = g.components.begin(); it != g.components.end();)
      it = it->second.is_zero() ? g.components.erase(it) : std::next(it);
    if (!(back == g)) throw std::invalid_argument("chain map components are not equivariant");
    return c;
  }
};

HomComplex::HomComplex(ComplexPtr x, ComplexPtr y) : impl_(std::make_unique<Impl>()) {
  if (x->p() != y->p() || x->n() != y->n()) throw std::invalid_argument("Hom complex between incompatible complexes");
  impl_->x = std::move(x);
  impl_->y = std::move(y);
  impl_->p = impl_->x->p();
}

HomComplex::~HomComplex() = default;

std::size_t HomComplex::cochain_dim(int t) { return impl_->layout(t).dim; }

std::size_t HomComplex::ext_dimension(int t) {
  const std::size_t dim = impl_->layout(t).dim;
  if (dim == 0) return 0;
  return dim - rank(impl_->cycle_map(t)) - rank(impl_->boundary_map(t - 1));
}

std::optional<ChainMap> HomComplex::null_homotopy(const ChainMap& f) {
  const int t = f.shift;
  const FpVector c = impl_->checked_coordinates(f);
  const FpMatrix& h = impl_->boundary_map(t - 1);
  std::optional<FpVector> x;
  if (h.cols() == 0) {
    if (std::all_of(c.begin(), c.end(), [](fp_t v) { return v == 0; })) x = FpVector{};
  } else {
    x = solve(h, c);
  }
  if (!x) return std::nullopt;
  ChainMap hom = impl_->reconstruct(t - 1, *x);
  const Complex& xs = *impl_->x;
  const Complex& ys = *impl_->y;
  for (int m = xs.lo() - 1; m <= xs.hi() + 1; ++m) {
    const SpMatrix lhs = ys.differential(m + t - 1) * hom.component(m) + hom.component(m + 1) * xs.differential(m);
    if (!(lhs == f.component(m))) throw std::logic_error("homotopy solve did not reproduce the map");
  }
  return hom;
}

std::size_t HomComplex::class_rank(const std::vector<ChainMap>& maps) {
  if (maps.empty()) return 0;
  const int t = maps.front().shift;
  const FpMatrix& h = impl_->boundary_map(t - 1);
  const std::size_t dim = impl_->layout(t).dim;
  FpMatrix coords(impl_->p, dim, maps.size());
  for (std::size_t k = 0; k < maps.size(); ++k) {
    if (maps[k].shift != t) throw std::invalid_argument("class_rank needs maps of one degree");
    const FpVector c = impl_->checked_coordinates(maps[k]);
    for (std::size_t r = 0; r < dim; ++r) coords.set(r, k, c[r]);
  }
  const std::size_t base = h.cols() == 0 ? 0 : rank(h);
  const FpMatrix all = h.cols() == 0 ? coords : FpMatrix::hstack({h, coords}, impl_->p, dim);
  return rank(all) - base;
}

std::optional<ChainMap> null_homotopy(const ChainMap& f) { return HomComplex(f.source, f.target).null_homotopy(f); }

ExtTable ext_oracle(ObjectKind x, ObjectKind y, int p, int n, int qmax) {
  ComplexPtr source;
  ComplexPtr target;
  switch (y.kind) {
    case Kind::Schur:
      source = complex_from_module(hook_object(x, p, n));
      target = schur_injective_resolution(y.index, p, n).complex;
      break;
    case Kind::Simple:
      source = complex_from_module(hook_object(x, p, n));
      target = simple_injective_resolution(y.index, p, n).complex;
      break;
    case Kind::Weyl:
      target = complex_from_module(hook_object(y, p, n));
      switch (x.kind) {
        case Kind::Schur: source = schur_projective_resolution(x.index, p, n).complex; break;
        case Kind::Weyl: source = weyl_projective_resolution(x.index, p, n).complex; break;
        case Kind::Simple: source = simple_projective_resolution(x.index, p, n).complex; break;
      }
      break;
  }
  HomComplex hc(source, target);
  ExtTable table{x.to_string(), y.to_string(), p, {}};
  for (int q = 0; q <= qmax; ++q)
    if (const std::size_t d = hc.ext_dimension(q)) table.dims[q] = static_cast<int>(d);
  return table;
}

}  // namespace hookblock
