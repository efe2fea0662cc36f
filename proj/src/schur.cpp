#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "hookblock/functor_lab.hpp"

namespace hookblock {

namespace {

// Images under Lambda^lambda -> I^{⊗e} -> S^{lambda~}: rows feed the exterior factors,
// columns feed the symmetric factors, one tensor position per box.
class AbwMap {
 public:
  AbwMap(const Partition& lambda, int n) : lambda_(lambda), cols_(lambda.conjugate()), n_(n) {}

  // Calls sink(target key, sign) for every term of the image of (I_1, ..., I_l).
  void image(const std::vector<std::vector<int>>& rows, const std::function<void(const std::vector<int>&, int)>& sink) const {
    const auto nrows = rows.size();
    const auto un = static_cast<std::size_t>(n_);
    std::vector<std::vector<int>> perm(nrows);
    for (std::size_t r = 0; r < nrows; ++r) {
      perm[r].resize(rows[r].size());
      for (std::size_t k = 0; k < perm[r].size(); ++k) perm[r][k] = static_cast<int>(k);
    }
    std::vector<int> key(static_cast<std::size_t>(cols_.length()) * un, 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t r, int sign) {
      if (r == nrows) {
        sink(key, sign);
        return;
      }
      auto& pr = perm[r];
      std::sort(pr.begin(), pr.end());
      do {
        for (std::size_t c = 0; c < pr.size(); ++c) ++key[c * un + static_cast<std::size_t>(rows[r][static_cast<std::size_t>(pr[c])])];
        rec(r + 1, sign * permutation_sign(pr));
        for (std::size_t c = 0; c < pr.size(); ++c) --key[c * un + static_cast<std::size_t>(rows[r][static_cast<std::size_t>(pr[c])])];
      } while (std::next_permutation(pr.begin(), pr.end()));
    };
    rec(0, 1);
  }

  // Source basis tuples with the given content (or all tuples when content is empty).
  void sources(const Weight* content, const std::function<void(const std::vector<std::vector<int>>&)>& sink) const {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(lambda_.length()));
    Weight left = content ? *content : Weight{};
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
      if (r == rows.size()) {
        sink(rows);
        return;
      }
      const int size = lambda_[r];
      std::vector<int>& row = rows[r];
      row.clear();
      std::function<void(int)> pick = [&](int start) {
        if (static_cast<int>(row.size()) == size) {
          rec(r + 1);
          return;
        }
        for (int x = start; x < n_; ++x) {
          if (content && left[static_cast<std::size_t>(x)] == 0) continue;
          if (content) --left[static_cast<std::size_t>(x)];
          row.push_back(x);
          pick(x + 1);
          row.pop_back();
          if (content) ++left[static_cast<std::size_t>(x)];
        }
      };
      pick(0);
    };
    rec(0);
  }

  const Partition& columns() const { return cols_; }

 private:
  static int permutation_sign(const std::vector<int>& perm) {
    int inv = 0;
    for (std::size_t a = 0; a < perm.size(); ++a)
      for (std::size_t b = a + 1; b < perm.size(); ++b)
        if (perm[a] > perm[b]) ++inv;
    return inv % 2 ? -1 : 1;
  }

  Partition lambda_;
  Partition cols_;
  int n_;
};

template <typename Value>
class KeyedCache {
 public:
  template <typename Make>
  Value get(const std::tuple<Partition, int, int>& key, Make make) {
    {
      std::lock_guard lock(mutex_);
      auto it = map_.find(key);
      if (it != map_.end()) return it->second;
    }
    Value v = make();
    std::lock_guard lock(mutex_);
    return map_.emplace(key, std::move(v)).first->second;
  }

 private:
  std::mutex mutex_;
  std::map<std::tuple<Partition, int, int>, Value> map_;
};

void check_size(const Partition& lambda, int n, int p) {
  require_prime(p);
  if (lambda.empty()) throw std::invalid_argument("Schur modules need a nonempty partition");
  if (n < lambda.weight()) throw std::invalid_argument("evaluation dimension must be at least the degree");
}

std::string plabel(const Partition& lambda) { return "(" + lambda.to_string() + ")"; }

}  // namespace

Embedding schur_module(const Partition& lambda, int n, int p) {
  static KeyedCache<Embedding> cache;
  return cache.get({lambda, n, p}, [&] {
    check_size(lambda, n, p);
    AbwMap abw(lambda, n);
    FunctorDescriptor desc;
    for (int c : abw.columns().parts()) desc.factors.push_back({FactorKind::Sym, c});
    ModulePtr target = eval_space(desc, n, p);
    std::map<Weight, std::vector<FpVector>> vectors;
    abw.sources(nullptr, [&](const std::vector<std::vector<int>>& rows) {
      Weight w(static_cast<std::size_t>(n), 0);
      for (const auto& row : rows)
        for (int x : row) ++w[static_cast<std::size_t>(x)];
      const int wid = target->weight_id(w);
      FpVector vec(target->members[static_cast<std::size_t>(wid)].size(), 0);
      abw.image(rows, [&](const std::vector<int>& key, int sign) {
        const int idx = target->monomial_lookup.at(key);
        auto& x = vec[static_cast<std::size_t>(target->local_index[static_cast<std::size_t>(idx)])];
        x = fp_reduce(static_cast<long long>(x) + sign, p);
      });
      vectors[w].push_back(std::move(vec));
    });
    std::map<Weight, FpMatrix> spans;
    for (auto& [w, vecs] : vectors) {
      FpMatrix cols(p, vecs.front().size(), vecs.size());
      for (std::size_t c = 0; c < vecs.size(); ++c)
        for (std::size_t r = 0; r < vecs[c].size(); ++r) cols.set(r, c, vecs[c][r]);
      spans.emplace(w, std::move(cols));
    }
    return submodule(target, spans, "S_" + plabel(lambda) + "@k^" + std::to_string(n));
  });
}

ModulePtr weyl_module(const Partition& lambda, int n, int p) {
  static KeyedCache<ModulePtr> cache;
  return cache.get({lambda, n, p}, [&] {
    auto d = std::make_shared<PFModule>(*kuhn_dual(schur_module(lambda, n, p).module));
    d->label = "W_" + plabel(lambda) + "@k^" + std::to_string(n);
    return ModulePtr(d);
  });
}

Embedding simple_module(const Partition& lambda, int n, int p) {
  static KeyedCache<Embedding> cache;
  return cache.get({lambda, n, p}, [&] {
    ModulePtr s = schur_module(lambda, n, p).module;
    ModulePtr w = weyl_module(lambda, n, p);
    auto maps = hom_basis(w, s);
    if (maps.size() != 1) throw std::logic_error("Hom(W_lambda, S_lambda) is not one-dimensional");
    return image_submodule(maps.front(), "F_" + plabel(lambda) + "@k^" + std::to_string(n));
  });
}

long long schur_dimension(const Partition& lambda, int n, int p) {
  require_prime(p);
  if (lambda.empty()) return 1;
  if (n < 1) throw std::invalid_argument("evaluation dimension must be positive");
  AbwMap abw(lambda, n);
  long long total = 0;
  // Dominant weights are partitions of |lambda| with at most n parts.
  for (const Partition& u : enumerate_partitions(lambda.weight())) {
    if (u.length() > n) continue;
    Weight w(static_cast<std::size_t>(n), 0);
    for (int k = 0; k < u.length(); ++k) w[static_cast<std::size_t>(k)] = u[static_cast<std::size_t>(k)];
    std::map<std::vector<int>, std::size_t> columns;
    std::vector<std::vector<std::pair<std::size_t, int>>> rows;
    abw.sources(&w, [&](const std::vector<std::vector<int>>& src) {
      std::map<std::size_t, int> acc;
      abw.image(src, [&](const std::vector<int>& key, int sign) {
        auto it = columns.emplace(key, columns.size()).first;
        acc[it->second] += sign;
      });
      std::vector<std::pair<std::size_t, int>> row(acc.begin(), acc.end());
      rows.push_back(std::move(row));
    });
    if (rows.empty()) continue;
    FpMatrix m(p, rows.size(), columns.size());
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (auto [c, v] : rows[r]) m.set(r, c, v);
    const auto rk = static_cast<long long>(rank(m));
    // Orbit size of the weight under coordinate permutations.
    long long orbit = 1;
    std::map<int, int> mult;
    for (int x : w) ++mult[x];
    long long num = 1;
    for (int k = 2; k <= n; ++k) num *= k;
    long long den = 1;
    for (auto [value, count] : mult)
      for (int k = 2; k <= count; ++k) den *= k;
    orbit = num / den;
    total += orbit * rk;
  }
  return total;
}

std::size_t multiplicity(const ModulePtr& h, const Partition& mu) {
  return hom_dimension(weyl_module(mu, h->n, h->p), h);
}

}  // namespace hookblock
