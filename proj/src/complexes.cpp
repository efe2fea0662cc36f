#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

#include "hookblock/complex_engine.hpp"

namespace hookblock {

std::size_t Term::dim() const {
  std::size_t d = 0;
  for (const auto& m : summands) d += m->dim();
  return d;
}

std::size_t Term::offset(std::size_t k) const {
  std::size_t d = 0;
  for (std::size_t j = 0; j < k; ++j) d += summands[j]->dim();
  return d;
}

Complex::Complex(std::string label, int p, int n, int degree)
    : label_(std::move(label)), p_(p), n_(n), degree_(degree) {}

void Complex::set_term(int m, Term t) { terms_[m] = std::move(t); }

void Complex::set_differential(int m, SpMatrix d) {
  if (d.rows() != term(m + 1).dim() || d.cols() != term(m).dim())
    throw std::invalid_argument("differential does not match the terms of " + label_);
  diffs_[m] = std::move(d);
}

const Term& Complex::term(int m) const {
  static const Term empty;
  auto it = terms_.find(m);
  return it == terms_.end() ? empty : it->second;
}

SpMatrix Complex::differential(int m) const {
  auto it = diffs_.find(m);
  if (it != diffs_.end()) return it->second;
  return SpMatrix(p_, term(m + 1).dim(), term(m).dim());
}

int Complex::lo() const {
  for (const auto& [m, t] : terms_)
    if (t.dim() > 0) return m;
  return 0;
}

int Complex::hi() const {
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    if (it->second.dim() > 0) return it->first;
  return -1;
}

bool Complex::squares_to_zero() const {
  for (int m = lo(); m < hi(); ++m)
    if (!(differential(m + 1) * differential(m)).is_zero()) return false;
  return true;
}

std::vector<int> Complex::weight_indices(int m, const Weight& w) const {
  std::vector<int> out;
  const Term& t = term(m);
  std::size_t off = 0;
  for (const auto& s : t.summands) {
    const int id = s->weight_id(w);
    if (id >= 0)
      for (int k : s->members[static_cast<std::size_t>(id)]) out.push_back(static_cast<int>(off) + k);
    off += s->dim();
  }
  return out;
}

std::vector<Weight> Complex::weights(int m) const {
  std::set<Weight> ws;
  for (const auto& s : term(m).summands) ws.insert(s->weights.begin(), s->weights.end());
  return {ws.begin(), ws.end()};
}

ComplexPtr complex_from_module(const ModulePtr& m) {
  auto c = std::make_shared<Complex>(m->label, m->p, m->n, m->degree);
  c->set_term(0, Term{{m}, {m->label}});
  return c;
}

ComplexPtr dual_complex(const Complex& x) {
  auto c = std::make_shared<Complex>(x.label() + "#", x.p(), x.n(), x.degree());
  for (int m = x.lo(); m <= x.hi(); ++m) {
    Term t;
    for (std::size_t k = 0; k < x.term(m).summands.size(); ++k) {
      t.summands.push_back(canonical_dual(x.term(m).summands[k]));
      t.tags.push_back(x.term(m).tags.empty() ? std::string() : x.term(m).tags[k] + "#");
    }
    c->set_term(-m, std::move(t));
  }
  for (int m = x.lo(); m < x.hi(); ++m) c->set_differential(-m - 1, x.differential(m).transpose());
  return c;
}

namespace {

// Restriction of a weight-preserving matrix between degrees to weight w.
FpMatrix weight_block(const Complex& c, const SpMatrix& d, int from, const Weight& w) {
  return d.block(c.weight_indices(from + 1, w), c.weight_indices(from, w));
}

}  // namespace

std::size_t homology(const Complex& c, int q) {
  std::size_t total = 0;
  for (const Weight& w : c.weights(q)) {
    const std::size_t dw = c.weight_indices(q, w).size();
    const std::size_t out_rank = rank(weight_block(c, c.differential(q), q, w));
    const std::size_t in_rank = rank(weight_block(c, c.differential(q - 1), q - 1, w));
    total += dw - out_rank - in_rank;
  }
  return total;
}

std::vector<FpVector> homology_representatives(const Complex& c, int q) {
  std::vector<FpVector> reps;
  const std::size_t dim = c.term(q).dim();
  for (const Weight& w : c.weights(q)) {
    const std::vector<int> idx = c.weight_indices(q, w);
    const Subspace cycles = kernel_basis(weight_block(c, c.differential(q), q, w));
    Subspace span = image_basis(weight_block(c, c.differential(q - 1), q - 1, w));
    for (std::size_t k = 0; k < cycles.dim(); ++k) {
      const FpVector v = cycles.basis().row(k);
      if (span.contains(v)) continue;
      span = sum(span, Subspace::span_rows(FpMatrix::from_rows(c.p(), {std::vector<long long>(v.begin(), v.end())})));
      FpVector full(dim, 0);
      for (std::size_t j = 0; j < idx.size(); ++j) full[static_cast<std::size_t>(idx[j])] = v[j];
      reps.push_back(std::move(full));
    }
  }
  return reps;
}

namespace {

using Cell = std::pair<int, int>;

bool present(const DoubleComplex& dc, Cell c) { return dc.terms.count(c) > 0; }

SpMatrix map_or_zero(const DoubleComplex& dc, const std::map<Cell, SpMatrix>& maps, Cell from, Cell to) {
  auto it = maps.find(from);
  if (it != maps.end()) return it->second;
  return SpMatrix(dc.p, dc.terms.at(to)->dim(), dc.terms.at(from)->dim());
}

}  // namespace

bool DoubleComplex::horizontal_squares_vanish() const {
  for (const auto& [c, m] : terms) {
    const Cell c1{c.first + 1, c.second}, c2{c.first + 2, c.second};
    if (!present(*this, c1) || !present(*this, c2)) continue;
    if (!(map_or_zero(*this, horizontal, c1, c2) * map_or_zero(*this, horizontal, c, c1)).is_zero()) return false;
  }
  return true;
}

bool DoubleComplex::vertical_squares_vanish() const {
  for (const auto& [c, m] : terms) {
    const Cell c1{c.first, c.second + 1}, c2{c.first, c.second + 2};
    if (!present(*this, c1) || !present(*this, c2)) continue;
    if (!(map_or_zero(*this, vertical, c1, c2) * map_or_zero(*this, vertical, c, c1)).is_zero()) return false;
  }
  return true;
}

bool DoubleComplex::anticommutes() const {
  for (const auto& [c, m] : terms) {
    const Cell h{c.first + 1, c.second}, v{c.first, c.second + 1}, hv{c.first + 1, c.second + 1};
    if (!present(*this, hv)) continue;
    SpMatrix acc(p, terms.at(hv)->dim(), m->dim());
    if (present(*this, h)) acc = acc + map_or_zero(*this, vertical, h, hv) * map_or_zero(*this, horizontal, c, h);
    if (present(*this, v)) acc = acc + map_or_zero(*this, horizontal, v, hv) * map_or_zero(*this, vertical, c, v);
    if (!acc.is_zero()) return false;
  }
  return true;
}

Complex DoubleComplex::totalize(bool vertical_sign_twist) const {
  Complex tot("Tot(" + label + ")", p, n, degree);
  std::map<int, std::vector<Cell>> cells;
  for (const auto& [c, m] : terms) cells[c.first + c.second].push_back(c);  // map order: r ascending
  for (const auto& [t, list] : cells) {
    Term term;
    for (const Cell& c : list) {
      term.summands.push_back(terms.at(c));
      term.tags.push_back("(" + std::to_string(c.first) + "," + std::to_string(c.second) + ")");
    }
    tot.set_term(t, std::move(term));
  }
  for (const auto& [t, list] : cells) {
    auto next = cells.find(t + 1);
    if (next == cells.end()) continue;
    auto position = [&](Cell c) -> std::optional<std::size_t> {
      const auto& l = next->second;
      auto it = std::find(l.begin(), l.end(), c);
      if (it == l.end()) return std::nullopt;
      return tot.term(t + 1).offset(static_cast<std::size_t>(it - l.begin()));
    };
    std::vector<Triplet> trip;
    for (std::size_t k = 0; k < list.size(); ++k) {
      const Cell c = list[k];
      const std::size_t col0 = tot.term(t).offset(k);
      const Cell h{c.first + 1, c.second}, v{c.first, c.second + 1};
      if (auto row0 = position(h); row0 && horizontal.count(c)) horizontal.at(c).emit(trip, *row0, col0);
      if (auto row0 = position(v); row0 && vertical.count(c)) {
        const bool flip = vertical_sign_twist && (c.first % 2 != 0);
        (flip ? vertical.at(c).scaled(-1) : vertical.at(c)).emit(trip, *row0, col0);
      }
    }
    tot.set_differential(t, SpMatrix(p, tot.term(t + 1).dim(), tot.term(t).dim(), trip));
  }
  return tot;
}

SpMatrix ChainMap::component(int m) const {
  auto it = components.find(m);
  if (it != components.end()) return it->second;
  return SpMatrix(source->p(), target->term(m + shift).dim(), source->term(m).dim());
}

bool ChainMap::is_chain_map() const {
  for (int m = source->lo() - 1; m <= source->hi(); ++m) {
    const SpMatrix lhs = target->differential(m + shift) * component(m);
    const SpMatrix rhs = component(m + 1) * source->differential(m);
    if (!(lhs == rhs)) return false;
  }
  return true;
}

bool ChainMap::is_zero() const {
  for (const auto& [m, c] : components)
    if (!c.is_zero()) return false;
  return true;
}

bool ChainMap::operator==(const ChainMap& other) const {
  if (source != other.source || target != other.target || shift != other.shift) return false;
  std::set<int> degrees;
  for (const auto& [m, c] : components) degrees.insert(m);
  for (const auto& [m, c] : other.components) degrees.insert(m);
  for (int m : degrees)
    if (!(component(m) == other.component(m))) return false;
  return true;
}

ChainMap compose_chain_maps(const ChainMap& g, const ChainMap& f) {
  if (f.target != g.source) throw std::invalid_argument("chain maps are not composable");
  ChainMap out{f.source, g.target, f.shift + g.shift, {}};
  for (const auto& [m, c] : f.components) {
    SpMatrix prod = g.component(m + f.shift) * c;
    if (!prod.is_zero()) out.components[m] = std::move(prod);
  }
  return out;
}

ChainMap zero_chain_map(const ComplexPtr& source, const ComplexPtr& target, int shift) {
  return ChainMap{source, target, shift, {}};
}

ChainMap identity_chain_map(const ComplexPtr& c) {
  ChainMap out{c, c, 0, {}};
  for (int m = c->lo(); m <= c->hi(); ++m) out.components[m] = SpMatrix::identity(c->p(), c->term(m).dim());
  return out;
}

ExactnessReport check_resolution(const Resolution& r) {
  ExactnessReport rep;
  const Complex& c = *r.complex;
  bool only_zero = true;
  for (int m = c.lo(); m <= c.hi(); ++m) {
    const std::size_t h = homology(c, m);
    if (h == 0) continue;
    rep.homology[m] = h;
    if (m != 0) only_zero = false;
  }
  rep.resolved_dim = r.resolved->dim();
  const LinMap& aug = r.augmentation;
  const std::size_t aug_rank = rank(aug.matrix);
  bool ok = aug.is_equivariant();
  if (r.injective) {
    // resolved -> X^0 injective with image ker d^0
    const FpMatrix d0 = c.differential(0).to_dense();
    ok = ok && aug_rank == r.resolved->dim() && (d0 * aug.matrix).is_zero();
  } else {
    // X^0 -> resolved onto, killing the image of d^{-1}
    const FpMatrix dm = c.differential(-1).to_dense();
    ok = ok && aug_rank == r.resolved->dim() && (aug.matrix * dm).is_zero();
  }
  rep.augmentation_ok = ok;
  const std::size_t h0 = rep.homology.count(0) ? rep.homology.at(0) : 0;
  rep.exact = only_zero && h0 == rep.resolved_dim && ok;
  return rep;
}

namespace {

// Process-wide cache of constructed complexes and resolutions, so that chain maps and
// Hom complexes built at different call sites share objects.
template <class T>
std::shared_ptr<const T> cached(const std::string& key, const std::function<T()>& build) {
  static std::mutex mutex;
  static std::map<std::string, std::shared_ptr<const void>> cache;
  {
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end()) return std::static_pointer_cast<const T>(it->second);
  }
  auto made = std::make_shared<const T>(build());
  std::lock_guard lock(mutex);
  auto [it, fresh] = cache.emplace(key, made);
  return std::static_pointer_cast<const T>(it->second);
}

std::string key_of(const std::string& what, int i, int p, int n) {
  return what + ":" + std::to_string(i) + ":" + std::to_string(p) + ":" + std::to_string(n);
}

void check_hook_index(int i, int p) {
  if (i < 0 || i > p - 1) throw std::out_of_range("hook index out of range");
}

SpMatrix sparse(const LinMap& f) { return SpMatrix::from_dense(f.matrix); }

std::string omega_tag(int k) { return "Omega^" + std::to_string(k); }

}  // namespace

ComplexPtr koszul_complex(int p, int n) {
  return cached<Complex>(key_of("koszul", 0, p, n), [&] {
    auto hb = HookBlockModules::get(p, n);
    Complex c("Koszul", p, n, p);
    for (int m = 0; m <= p; ++m) c.set_term(m, Term{{hb->omega(p - m)}, {omega_tag(p - m)}});
    for (int m = 0; m < p; ++m) c.set_differential(m, sparse(hb->kappa(p - m)));
    return c;
  });
}

ComplexPtr derham_complex(int p, int n) {
  return cached<Complex>(key_of("derham", 0, p, n), [&] {
    auto hb = HookBlockModules::get(p, n);
    Complex c("deRham", p, n, p);
    for (int m = 0; m <= p; ++m) c.set_term(m, Term{{hb->omega(m)}, {omega_tag(m)}});
    for (int m = 0; m < p; ++m) c.set_differential(m, sparse(hb->derham(m)));
    return c;
  });
}

ComplexPtr koszul_kernel_complex(int p, int n) {
  return cached<Complex>(key_of("koszul_kernel", 0, p, n), [&] {
    auto hb = HookBlockModules::get(p, n);
    Complex c("K", p, n, p);
    for (int m = 0; m < p; ++m) c.set_term(m, Term{{hb->schur(m).module}, {"S_" + std::to_string(m)}});
    for (int m = 0; m + 1 < p; ++m) {
      const LinMap d_on_s = compose(hb->derham(m), hb->schur(m).inclusion);
      c.set_differential(m, sparse(corestrict(d_on_s, hb->schur(m + 1).inclusion)));
    }
    return c;
  });
}

CartierReport cartier_kernel_check(int p, int n) {
  CartierReport rep;
  auto k = koszul_kernel_complex(p, n);
  for (int i = 0; i <= p; ++i) rep.dims.push_back(homology(*k, i));
  rep.ok = rep.dims[0] == static_cast<std::size_t>(n) &&
           std::all_of(rep.dims.begin() + 1, rep.dims.end(), [](std::size_t d) { return d == 0; });
  return rep;
}

Resolution schur_injective_resolution(int i, int p, int n) {
  check_hook_index(i, p);
  auto hb = HookBlockModules::get(p, n);
  auto c = cached<Complex>(key_of("T", i, p, n), [&] {
    Complex t("T_" + std::to_string(i), p, n, p);
    for (int m = 0; m <= i; ++m) t.set_term(m, Term{{hb->omega(i - m)}, {omega_tag(i - m)}});
    for (int m = 0; m < i; ++m) t.set_differential(m, sparse(hb->kappa(i - m)));
    return t;
  });
  return Resolution{c, hb->schur(i).module, hb->schur(i).inclusion, true};
}

namespace {

LinMap glue_map(const HookBlockModules& hb) {
  const int p = hb.p();
  return compose(hb.kappa(p), compose(hb.top_identification(), hb.kappa_dual(p)));
}

}  // namespace

Resolution schur_projective_resolution(int i, int p, int n) {
  check_hook_index(i, p);
  auto hb = HookBlockModules::get(p, n);
  auto c = cached<Complex>(key_of("P_S", i, p, n), [&] {
    // modules[k] sits in degree -k; maps[k] : modules[k+1] -> modules[k]
    std::vector<ModulePtr> modules;
    std::vector<std::string> tags;
    std::vector<LinMap> maps;
    for (int j = i + 1; j <= p - 1; ++j) {
      modules.push_back(hb->omega(j));
      tags.push_back(omega_tag(j));
    }
    for (int j = p - 1; j >= 0; --j) {
      modules.push_back(hb->omega_dual(j));
      tags.push_back(omega_tag(j) + "#");
    }
    const std::size_t plain = static_cast<std::size_t>(p - 1 - i);
    for (std::size_t k = 0; k + 1 < modules.size(); ++k) {
      if (k + 1 < plain) {
        maps.push_back(hb->kappa(i + 2 + static_cast<int>(k)));
      } else if (k + 1 == plain) {
        maps.push_back(glue_map(*hb));
      } else {
        const int a = p - 1 - static_cast<int>(k - plain);  // modules[k] = (Omega^a)^#
        maps.push_back(hb->kappa_dual(a));
      }
    }
    Complex r("P(S_" + std::to_string(i) + ")", p, n, p);
    for (std::size_t k = 0; k < modules.size(); ++k) r.set_term(-static_cast<int>(k), Term{{modules[k]}, {tags[k]}});
    for (std::size_t k = 0; k < maps.size(); ++k) r.set_differential(-static_cast<int>(k) - 1, sparse(maps[k]));
    return r;
  });
  const LinMap aug = i < p - 1 ? corestrict(hb->kappa(i + 1), hb->schur(i).inclusion)
                               : corestrict(glue_map(*hb), hb->schur(i).inclusion);
  return Resolution{c, hb->schur(i).module, aug, false};
}

Resolution weyl_projective_resolution(int i, int p, int n) {
  check_hook_index(i, p);
  auto hb = HookBlockModules::get(p, n);
  const Resolution t = schur_injective_resolution(i, p, n);
  auto c = cached<Complex>(key_of("P_W", i, p, n), [&] { return Complex(*dual_complex(*t.complex)); });
  const LinMap aug = kuhn_dual(hb->schur(i).inclusion, hb->weyl(i), hb->omega_dual(i));
  return Resolution{c, hb->weyl(i), aug, false};
}

DoubleComplex simple_double_complex(int i, int p, int n) {
  check_hook_index(i, p);
  auto hb = HookBlockModules::get(p, n);
  DoubleComplex dc;
  dc.label = "R_" + std::to_string(i);
  dc.p = p;
  dc.n = n;
  dc.degree = p;
  auto inside = [&](int r, int s) { return r >= 0 && r <= p - 1 && s >= 0 && s <= p - i - 1 && r - s <= i; };
  for (int r = 0; r <= p - 1; ++r)
    for (int s = 0; s <= p - i - 1; ++s)
      if (inside(r, s)) dc.terms[{r, s}] = hb->omega(i + s - r);
  for (const auto& [c, m] : dc.terms) {
    const auto [r, s] = c;
    const int k = i + s - r;
    if (inside(r + 1, s)) dc.horizontal[c] = sparse(hb->kappa(k));
    if (inside(r, s + 1)) dc.vertical[c] = sparse(hb->derham(k));
  }
  return dc;
}

Resolution simple_injective_resolution(int i, int p, int n) {
  check_hook_index(i, p);
  auto hb = HookBlockModules::get(p, n);
  auto c = cached<Complex>(key_of("TotR", i, p, n), [&] { return simple_double_complex(i, p, n).totalize(false); });
  return Resolution{c, hb->simple(i).module, hb->simple_in_omega(i), true};
}

Resolution simple_projective_resolution(int i, int p, int n) {
  check_hook_index(i, p);
  auto hb = HookBlockModules::get(p, n);
  const Resolution r = simple_injective_resolution(i, p, n);
  auto c = cached<Complex>(key_of("P_F", i, p, n), [&] { return Complex(*dual_complex(*r.complex)); });
  const ModulePtr fd = canonical_dual(hb->simple(i).module);
  const LinMap aug = kuhn_dual(hb->simple_in_omega(i), fd, hb->omega_dual(i));
  return Resolution{c, fd, aug, false};
}

ModulePtr hook_object(ObjectKind x, int p, int n) {
  check_hook_index(x.index, p);
  auto hb = HookBlockModules::get(p, n);
  switch (x.kind) {
    case Kind::Simple: return hb->simple(x.index).module;
    case Kind::Schur: return hb->schur(x.index).module;
    case Kind::Weyl: return hb->weyl(x.index);
  }
  throw std::logic_error("unknown object kind");
}

ChainMap chain_map_gamma(int j, int i, int p, int n) {
  if (i < 0 || i > j || j > p - 1) throw std::out_of_range("gamma needs 0 <= i <= j <= p-1");
  const ComplexPtr src = schur_injective_resolution(i, p, n).complex;
  const ComplexPtr tgt = schur_injective_resolution(j, p, n).complex;
  ChainMap f{src, tgt, j - i, {}};
  for (int m = 0; m <= i; ++m) f.components[m] = SpMatrix::identity(p, src->term(m).dim());
  return f;
}

ChainMap chain_map_dtilde(int i, int p, int n) {
  if (i < 0 || i > p - 2) throw std::out_of_range("d~ needs 0 <= i <= p-2");
  auto hb = HookBlockModules::get(p, n);
  const ComplexPtr src = schur_injective_resolution(i, p, n).complex;
  const ComplexPtr tgt = schur_injective_resolution(i + 1, p, n).complex;
  ChainMap f{src, tgt, 0, {}};
  for (int m = 0; m <= i; ++m) f.components[m] = sparse(hb->derham(i - m)).scaled((i - m) % 2 == 0 ? 1 : -1);
  return f;
}

ChainMap chain_map_gamma_bar(int j, int i, int p, int n) {
  if (i < 0 || i >= j || j > p - 1) throw std::out_of_range("gamma-bar needs 0 <= i < j <= p-1");
  return compose_chain_maps(chain_map_gamma(j, i + 1, p, n), chain_map_dtilde(i, p, n));
}

ChainMap chain_map_alpha(int j, int i, int t, int p, int n) {
  check_hook_index(i, p);
  check_hook_index(j, p);
  if (t < std::abs(i - j) || t > 2 * p - i - j - 2) throw std::out_of_range("alpha degree outside the Ext range");
  if ((t + i + j) % 2 != 0) throw std::invalid_argument("alpha needs t + i + j even");
  const int a = (t - i + j) / 2;
  const int b = (t + i - j) / 2;
  const DoubleComplex ri = simple_double_complex(i, p, n);
  const DoubleComplex rj = simple_double_complex(j, p, n);
  const ComplexPtr src = simple_injective_resolution(i, p, n).complex;
  const ComplexPtr tgt = simple_injective_resolution(j, p, n).complex;
  // Summand positions inside the totalizations (cells of one degree are ordered by r).
  auto offsets = [](const DoubleComplex& dc) {
    std::map<Cell, std::size_t> off;
    std::map<int, std::size_t> fill;
    for (const auto& [c, m] : dc.terms) {
      const int deg = c.first + c.second;
      off[c] = fill[deg];
      fill[deg] += m->dim();
    }
    return off;
  };
  const auto off_i = offsets(ri);
  const auto off_j = offsets(rj);
  std::map<int, std::vector<Triplet>> trip;
  for (const auto& [c, m] : ri.terms) {
    const Cell to{c.first + a, c.second + b};
    if (!rj.terms.count(to)) continue;
    const std::size_t r0 = off_j.at(to), c0 = off_i.at(c);
    auto& out = trip[c.first + c.second];
    for (std::size_t k = 0; k < m->dim(); ++k) out.push_back(Triplet{r0 + k, c0 + k, 1});
  }
  ChainMap f{src, tgt, t, {}};
  for (auto& [deg, list] : trip)
    f.components[deg] = SpMatrix(p, tgt->term(deg + t).dim(), src->term(deg).dim(), list);
  return f;
}

}  // namespace hookblock
