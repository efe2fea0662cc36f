#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

#include "hookblock/functor_lab.hpp"
#include "module_internal.hpp"

namespace hookblock {

int FunctorDescriptor::degree() const {
  int d = 0;
  for (const auto& f : factors) d += f.degree;
  return d;
}

std::string FunctorDescriptor::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) out += "⊗";
    switch (factors[k].kind) {
      case FactorKind::Sym: out += "Sym"; break;
      case FactorKind::Ext: out += "Ext"; break;
      case FactorKind::Div: out += "Div"; break;
      case FactorKind::Tens: out += "Tens"; break;
    }
    out += "(" + std::to_string(factors[k].degree) + ")";
  }
  return out.empty() ? "k" : out;
}

std::vector<Generator> generator_family(int n, int degree) {
  std::vector<Generator> gens;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      for (int r = 1; r <= degree; ++r) gens.push_back({a, b, r});
    }
  return gens;
}

namespace detail {

std::size_t generator_index(int n, int degree, int a, int b, int r) {
  const int col = b < a ? b : b - 1;
  return static_cast<std::size_t>((a * (n - 1) + col) * degree + (r - 1));
}

long long binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  static const auto table = [] {
    std::vector<std::vector<long long>> t(63, std::vector<long long>(63, 0));
    for (int i = 0; i < 63; ++i) {
      t[static_cast<std::size_t>(i)][0] = 1;
      for (int j = 1; j <= i; ++j)
        t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)] +
            (j < i ? t[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j)] : 0);
    }
    return t;
  }();
  if (n >= 63) throw std::out_of_range("binomial argument too large");
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void finalize_weights(PFModule& m, const std::vector<Weight>& basis_weights) {
  std::vector<Weight> distinct = basis_weights;
  std::sort(distinct.begin(), distinct.end(), std::greater<>());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  m.weights = distinct;
  m.weight_lookup.clear();
  for (std::size_t k = 0; k < distinct.size(); ++k) m.weight_lookup.emplace(distinct[k], static_cast<int>(k));
  m.members.assign(distinct.size(), {});
  m.weight_of.resize(basis_weights.size());
  m.local_index.resize(basis_weights.size());
  for (std::size_t s = 0; s < basis_weights.size(); ++s) {
    const int wid = m.weight_lookup.at(basis_weights[s]);
    m.weight_of[s] = wid;
    m.local_index[s] = static_cast<int>(m.members[static_cast<std::size_t>(wid)].size());
    m.members[static_cast<std::size_t>(wid)].push_back(static_cast<int>(s));
  }
}

void allocate_blocks(PFModule& m) {
  m.generators = generator_family(m.n, m.degree);
  const std::size_t nw = m.weights.size();
  m.raise.assign(m.generators.size(), std::vector<ActionBlock>(nw));
  for (std::size_t g = 0; g < m.generators.size(); ++g) {
    const Generator& gen = m.generators[g];
    for (std::size_t w = 0; w < nw; ++w) {
      const Weight& src = m.weights[w];
      const std::size_t cols = m.members[w].size();
      ActionBlock& blk = m.raise[g][w];
      blk.target = -1;
      if (src[static_cast<std::size_t>(gen.b)] >= gen.r) {
        Weight tgt = src;
        tgt[static_cast<std::size_t>(gen.a)] += gen.r;
        tgt[static_cast<std::size_t>(gen.b)] -= gen.r;
        blk.target = m.weight_id(tgt);
      }
      const std::size_t rows = blk.target < 0 ? 0 : m.members[static_cast<std::size_t>(blk.target)].size();
      blk.matrix = FpMatrix(m.p, rows, cols);
    }
  }
  const std::size_t nswap = m.n > 1 ? static_cast<std::size_t>(m.n - 1) : 0;
  m.swap.assign(nswap, std::vector<ActionBlock>(nw));
  for (std::size_t j = 0; j < nswap; ++j)
    for (std::size_t w = 0; w < nw; ++w) {
      Weight tgt = m.weights[w];
      std::swap(tgt[j], tgt[j + 1]);
      const int t = m.weight_id(tgt);
      if (t < 0) throw std::logic_error("weights of a module must be closed under permutation");
      m.swap[j][w] = ActionBlock{t, FpMatrix(m.p, m.members[static_cast<std::size_t>(t)].size(), m.members[w].size())};
    }
}

}  // namespace detail

int PFModule::weight_id(const Weight& w) const {
  auto it = weight_lookup.find(w);
  return it == weight_lookup.end() ? -1 : it->second;
}

std::size_t PFModule::weight_dim(const Weight& w) const {
  const int id = weight_id(w);
  return id < 0 ? 0 : members[static_cast<std::size_t>(id)].size();
}

FpMatrix PFModule::action_matrix(std::size_t g) const {
  FpMatrix out(p, dim(), dim());
  for (std::size_t w = 0; w < weights.size(); ++w) {
    const ActionBlock& blk = raise[g][w];
    if (blk.target < 0) continue;
    out.set_block(members[static_cast<std::size_t>(blk.target)], members[w], blk.matrix);
  }
  return out;
}

FpMatrix PFModule::swap_matrix(std::size_t j) const {
  FpMatrix out(p, dim(), dim());
  for (std::size_t w = 0; w < weights.size(); ++w) {
    const ActionBlock& blk = swap[j][w];
    out.set_block(members[static_cast<std::size_t>(blk.target)], members[w], blk.matrix);
  }
  return out;
}

namespace {

using detail::binomial;

// Exponent vectors of length n summing to degree (entries <= cap), lexicographically descending.
void enumerate_vectors(int n, int degree, int cap, std::vector<std::vector<int>>& out) {
  std::vector<int> v(static_cast<std::size_t>(n), 0);
  std::function<void(int, int)> rec = [&](int pos, int left) {
    if (pos == n - 1) {
      if (left <= cap) {
        v[static_cast<std::size_t>(pos)] = left;
        out.push_back(v);
      }
      return;
    }
    for (int k = std::min(left, cap); k >= 0; --k) {
      v[static_cast<std::size_t>(pos)] = k;
      rec(pos + 1, left - k);
    }
  };
  if (n == 0) return;
  rec(0, degree);
}

long long factor_raise(FactorKind kind, int* v, int a, int b, int r) {
  if (r == 0) return 1;
  switch (kind) {
    case FactorKind::Sym: {
      if (v[b] < r) return 0;
      long long c = binomial(v[b], r);
      v[b] -= r;
      v[a] += r;
      return c;
    }
    case FactorKind::Div: {
      if (v[b] < r) return 0;
      long long c = binomial(v[a] + r, r);
      v[b] -= r;
      v[a] += r;
      return c;
    }
    case FactorKind::Ext: {
      if (r > 1 || v[b] != 1 || v[a] != 0) return 0;
      int between = 0;
      for (int k = std::min(a, b) + 1; k < std::max(a, b); ++k) between += v[k];
      v[b] = 0;
      v[a] = 1;
      return between % 2 ? -1 : 1;
    }
    case FactorKind::Tens: break;
  }
  throw std::logic_error("tensor factors must be expanded");
}

int factor_cap(FactorKind kind, int degree) { return kind == FactorKind::Ext ? 1 : degree; }

std::string factor_label(FactorKind kind, const int* v, int n) {
  std::string out;
  for (int k = 0; k < n; ++k) {
    if (!v[k]) continue;
    const std::string var = (kind == FactorKind::Ext ? "e" : kind == FactorKind::Div ? "y" : "x") + std::to_string(k + 1);
    out += var;
    if (v[k] > 1) out += kind == FactorKind::Div ? "^[" + std::to_string(v[k]) + "]" : "^" + std::to_string(v[k]);
  }
  return out.empty() ? "1" : out;
}

}  // namespace

ModulePtr eval_space(const FunctorDescriptor& desc, int n, int p) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("evaluation dimension must be positive");
  if (desc.degree() > 24) throw std::out_of_range("degree exceeds configured bound");
  std::vector<Factor> factors;
  for (const Factor& f : desc.factors) {
    if (f.degree < 0) throw std::invalid_argument("negative factor degree");
    if (f.kind == FactorKind::Tens)
      for (int k = 0; k < f.degree; ++k) factors.push_back({FactorKind::Sym, 1});
    else
      factors.push_back(f);
  }
  const std::size_t nf = factors.size();
  const auto un = static_cast<std::size_t>(n);

  auto m = std::make_shared<PFModule>();
  m->p = p;
  m->n = n;
  m->degree = desc.degree();
  m->label = desc.to_string() + "@k^" + std::to_string(n);

  std::vector<std::vector<std::vector<int>>> fbasis(nf);
  for (std::size_t t = 0; t < nf; ++t)
    enumerate_vectors(n, factors[t].degree, factor_cap(factors[t].kind, factors[t].degree), fbasis[t]);

  // Cartesian product, first factor most significant.
  std::vector<Weight> basis_weights;
  std::vector<std::size_t> choice(nf, 0);
  bool any = std::all_of(fbasis.begin(), fbasis.end(), [](const auto& b) { return !b.empty(); });
  while (any) {
    std::vector<int> key;
    key.reserve(nf * un);
    Weight w(un, 0);
    std::string label;
    for (std::size_t t = 0; t < nf; ++t) {
      const auto& v = fbasis[t][choice[t]];
      key.insert(key.end(), v.begin(), v.end());
      for (std::size_t k = 0; k < un; ++k) w[k] += v[k];
      if (t) label += "|";
      label += factor_label(factors[t].kind, v.data(), n);
    }
    if (nf == 0) label = "1";
    m->monomial_lookup.emplace(key, static_cast<int>(m->monomials.size()));
    m->monomials.push_back(std::move(key));
    m->basis.push_back(std::move(label));
    basis_weights.push_back(std::move(w));
    std::size_t t = nf;
    while (t > 0) {
      --t;
      if (++choice[t] < fbasis[t].size()) break;
      choice[t] = 0;
      if (t == 0) any = false;
    }
    if (nf == 0) any = false;
  }
  detail::finalize_weights(*m, basis_weights);
  detail::allocate_blocks(*m);

  // Generator actions via the divided-power Leibniz rule.
  std::vector<int> work;
  for (std::size_t s = 0; s < m->dim(); ++s) {
    const auto w = static_cast<std::size_t>(m->weight_of[s]);
    const auto col = static_cast<std::size_t>(m->local_index[s]);
    for (std::size_t g = 0; g < m->generators.size(); ++g) {
      ActionBlock& blk = m->raise[g][w];
      if (blk.target < 0) continue;
      const Generator gen = m->generators[g];
      std::function<void(std::size_t, int, long long)> rec = [&](std::size_t t, int left, long long coef) {
        if (t == nf) {
          if (left) return;
          const int idx = m->monomial_lookup.at(work);
          blk.matrix.add_to(static_cast<std::size_t>(m->local_index[static_cast<std::size_t>(idx)]), col, coef);
          return;
        }
        int* v = work.data() + t * un;
        const int cap = std::min(left, v[gen.b]);
        for (int rt = 0; rt <= cap; ++rt) {
          std::vector<int> saved(v, v + n);
          long long c = factor_raise(factors[t].kind, v, gen.a, gen.b, rt);
          if (c % p != 0) rec(t + 1, left - rt, (coef * (c % p)) % p);
          std::copy(saved.begin(), saved.end(), v);
        }
      };
      work = m->monomials[s];
      rec(0, gen.r, 1);
    }
    for (std::size_t j = 0; j + 1 < un; ++j) {
      work = m->monomials[s];
      int sign = 1;
      for (std::size_t t = 0; t < nf; ++t) {
        int* v = work.data() + t * un;
        if (factors[t].kind == FactorKind::Ext && v[j] && v[j + 1]) sign = -sign;
        std::swap(v[j], v[j + 1]);
      }
      const int idx = m->monomial_lookup.at(work);
      m->swap[j][w].matrix.set(static_cast<std::size_t>(m->local_index[static_cast<std::size_t>(idx)]), col, sign);
    }
  }
  return m;
}

ModulePtr zero_module(int p, int n, int degree) {
  auto m = std::make_shared<PFModule>();
  m->p = p;
  m->n = n;
  m->degree = degree;
  m->label = "0";
  detail::finalize_weights(*m, {});
  detail::allocate_blocks(*m);
  return m;
}

ModulePtr omega_module(int p, int e, int i, int n) {
  if (i < 0 || i > e) return zero_module(p, n, e);
  auto m = eval_space(FunctorDescriptor{{{FactorKind::Sym, e - i}, {FactorKind::Ext, i}}}, n, p);
  auto copy = std::make_shared<PFModule>(*m);
  copy->label = "Omega^" + std::to_string(i) + "_" + std::to_string(e) + "@k^" + std::to_string(n);
  return copy;
}

ModulePtr kuhn_dual(const ModulePtr& src) {
  const PFModule& m = *src;
  auto d = std::make_shared<PFModule>();
  d->p = m.p;
  d->n = m.n;
  d->degree = m.degree;
  d->label = "(" + m.label + ")#";
  d->basis.reserve(m.dim());
  for (const auto& b : m.basis) d->basis.push_back(b + "*");
  d->weights = m.weights;
  d->weight_lookup = m.weight_lookup;
  d->weight_of = m.weight_of;
  d->local_index = m.local_index;
  d->members = m.members;
  d->generators = m.generators;
  d->raise.assign(m.generators.size(), std::vector<ActionBlock>(m.weights.size()));
  for (std::size_t g = 0; g < m.generators.size(); ++g) {
    const Generator gen = m.generators[g];
    const std::size_t opposite = detail::generator_index(m.n, m.degree, gen.b, gen.a, gen.r);
    for (std::size_t u = 0; u < m.weights.size(); ++u) {
      Weight tgt = m.weights[u];
      tgt[static_cast<std::size_t>(gen.a)] += gen.r;
      tgt[static_cast<std::size_t>(gen.b)] -= gen.r;
      const int t = tgt[static_cast<std::size_t>(gen.b)] >= 0 ? m.weight_id(tgt) : -1;
      ActionBlock& blk = d->raise[g][u];
      blk.target = t;
      if (t < 0) {
        blk.matrix = FpMatrix(m.p, 0, m.members[u].size());
      } else {
        const ActionBlock& back = m.raise[opposite][static_cast<std::size_t>(t)];
        blk.matrix = back.matrix.transpose();
      }
    }
  }
  d->swap.assign(m.swap.size(), std::vector<ActionBlock>(m.weights.size()));
  for (std::size_t j = 0; j < m.swap.size(); ++j)
    for (std::size_t u = 0; u < m.weights.size(); ++u) {
      const int t = m.swap[j][u].target;
      d->swap[j][u] = ActionBlock{t, m.swap[j][static_cast<std::size_t>(t)].matrix.transpose()};
    }
  return d;
}

namespace {

struct DualRegistry {
  std::mutex mutex;
  std::map<const PFModule*, std::pair<ModulePtr, ModulePtr>> pairs;  // module -> (itself, dual)
};

DualRegistry& dual_registry() {
  static DualRegistry r;
  return r;
}

}  // namespace

void register_dual_pair(const ModulePtr& m, const ModulePtr& dual) {
  DualRegistry& r = dual_registry();
  std::lock_guard lock(r.mutex);
  r.pairs[m.get()] = {m, dual};
  r.pairs[dual.get()] = {dual, m};
}

ModulePtr canonical_dual(const ModulePtr& m) {
  DualRegistry& r = dual_registry();
  {
    std::lock_guard lock(r.mutex);
    auto it = r.pairs.find(m.get());
    if (it != r.pairs.end()) return it->second.second;
  }
  ModulePtr d = kuhn_dual(m);
  std::lock_guard lock(r.mutex);
  auto it = r.pairs.find(m.get());
  if (it != r.pairs.end()) return it->second.second;
  r.pairs[m.get()] = {m, d};
  r.pairs[d.get()] = {d, m};
  return d;
}

LinMap kuhn_dual(const LinMap& f, const ModulePtr& source_dual, const ModulePtr& target_dual) {
  if (source_dual->dim() != f.source->dim() || target_dual->dim() != f.target->dim())
    throw std::invalid_argument("dual modules do not match the map");
  return LinMap{target_dual, source_dual, f.matrix.transpose()};
}

}  // namespace hookblock
