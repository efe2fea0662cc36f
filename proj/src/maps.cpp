#include <algorithm>
#include <stdexcept>

#include "hookblock/functor_lab.hpp"
#include "module_internal.hpp"

namespace hookblock {

namespace {

void require_compatible(const PFModule& a, const PFModule& b) {
  if (a.p != b.p || a.n != b.n || a.degree != b.degree)
    throw std::invalid_argument("modules differ in p, n or degree");
}

const std::vector<int>& members_or_empty(const PFModule& m, const Weight& w) {
  static const std::vector<int> none;
  const int id = m.weight_id(w);
  return id < 0 ? none : m.members[static_cast<std::size_t>(id)];
}

// Action block of generator g from weight w, as a dim(w') x dim(w) matrix (zero if absent).
FpMatrix raise_or_zero(const PFModule& m, std::size_t g, const Weight& w, const Weight& target) {
  const int id = m.weight_id(w);
  const std::size_t rows = m.weight_dim(target);
  if (id < 0) return FpMatrix(m.p, rows, 0);
  const ActionBlock& blk = m.raise[g][static_cast<std::size_t>(id)];
  if (blk.target < 0) return FpMatrix(m.p, rows, m.members[static_cast<std::size_t>(id)].size());
  return blk.matrix;
}

}  // namespace

FpMatrix LinMap::weight_block(const Weight& w) const {
  return matrix.block(members_or_empty(*target, w), members_or_empty(*source, w));
}

bool LinMap::is_weight_preserving() const {
  for (std::size_t r = 0; r < target->dim(); ++r)
    for (std::size_t c = 0; c < source->dim(); ++c)
      if (matrix(r, c) && target->weights[static_cast<std::size_t>(target->weight_of[r])] !=
                              source->weights[static_cast<std::size_t>(source->weight_of[c])])
        return false;
  return true;
}

bool LinMap::is_equivariant() const {
  require_compatible(*source, *target);
  if (matrix.rows() != target->dim() || matrix.cols() != source->dim()) return false;
  if (!is_weight_preserving()) return false;
  std::vector<Weight> all = source->weights;
  all.insert(all.end(), target->weights.begin(), target->weights.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  for (const Weight& w : all) {
    const FpMatrix fw = weight_block(w);
    for (std::size_t g = 0; g < source->generators.size(); ++g) {
      const Generator gen = source->generators[g];
      if (w[static_cast<std::size_t>(gen.b)] < gen.r) continue;
      Weight t = w;
      t[static_cast<std::size_t>(gen.a)] += gen.r;
      t[static_cast<std::size_t>(gen.b)] -= gen.r;
      FpMatrix lhs = raise_or_zero(*target, g, w, t) * fw;
      FpMatrix rhs = weight_block(t) * raise_or_zero(*source, g, w, t);
      if (!(lhs == rhs)) return false;
    }
    for (std::size_t j = 0; j + 1 < static_cast<std::size_t>(source->n); ++j) {
      Weight t = w;
      std::swap(t[j], t[j + 1]);
      const int sid = source->weight_id(w), tid = target->weight_id(w);
      FpMatrix ms = sid < 0 ? FpMatrix(source->p, source->weight_dim(t), 0) : source->swap[j][static_cast<std::size_t>(sid)].matrix;
      FpMatrix ns = tid < 0 ? FpMatrix(target->p, target->weight_dim(t), 0) : target->swap[j][static_cast<std::size_t>(tid)].matrix;
      if (!(ns * fw == weight_block(t) * ms)) return false;
    }
  }
  return true;
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (g.source->dim() != f.target->dim()) throw std::invalid_argument("composition dimension mismatch");
  return LinMap{f.source, g.target, g.matrix * f.matrix};
}

LinMap identity_map(const ModulePtr& m) { return LinMap{m, m, FpMatrix::identity(m->p, m->dim())}; }

LinMap zero_map(const ModulePtr& source, const ModulePtr& target) {
  return LinMap{source, target, FpMatrix(source->p, target->dim(), source->dim())};
}

namespace {

// Left inverse of an injective column matrix J: L with L J = I.
FpMatrix left_inverse(const FpMatrix& j) {
  RrefResult rr = rref(j.transpose());
  if (rr.rank != j.cols()) throw std::logic_error("spanning vectors are not independent");
  std::vector<int> rows(rr.pivots.begin(), rr.pivots.end());
  std::vector<int> all(j.cols());
  for (std::size_t c = 0; c < all.size(); ++c) all[c] = static_cast<int>(c);
  FpMatrix square = j.block(rows, all);
  FpMatrix inv = inverse(square);
  FpMatrix l(j.p(), j.cols(), j.rows());
  for (std::size_t r = 0; r < j.cols(); ++r)
    for (std::size_t k = 0; k < rows.size(); ++k) l.set(r, static_cast<std::size_t>(rows[k]), inv(r, k));
  return l;
}

}  // namespace

Embedding submodule(const ModulePtr& ambient_ptr, const std::map<Weight, FpMatrix>& spans, std::string label) {
  const PFModule& amb = *ambient_ptr;
  auto m = std::make_shared<PFModule>();
  m->p = amb.p;
  m->n = amb.n;
  m->degree = amb.degree;
  m->label = std::move(label);
  // Canonical column bases per weight, in ambient weight order.
  std::vector<FpMatrix> bases(amb.weights.size());
  std::vector<Weight> basis_weights;
  for (std::size_t w = 0; w < amb.weights.size(); ++w) {
    auto it = spans.find(amb.weights[w]);
    const std::size_t dw = amb.members[w].size();
    if (it == spans.end()) {
      bases[w] = FpMatrix(amb.p, dw, 0);
    } else {
      if (it->second.rows() != dw) throw std::invalid_argument("span has wrong weight dimension");
      Subspace s = Subspace::span_columns(it->second);
      bases[w] = s.basis().transpose();
    }
    for (std::size_t k = 0; k < bases[w].cols(); ++k) basis_weights.push_back(amb.weights[w]);
  }
  for (const auto& [w, mat] : spans)
    if (amb.weight_id(w) < 0 && mat.cols() > 0 && !mat.is_zero()) throw std::invalid_argument("span at absent weight");
  detail::finalize_weights(*m, basis_weights);
  detail::allocate_blocks(*m);

  FpMatrix incl(amb.p, amb.dim(), basis_weights.size());
  std::vector<FpMatrix> lefts(amb.weights.size());
  std::vector<int> sub_of_amb(amb.weights.size(), -1);
  for (std::size_t w = 0; w < amb.weights.size(); ++w) {
    const int id = m->weight_id(amb.weights[w]);
    sub_of_amb[w] = id;
    if (id < 0) continue;
    incl.set_block(amb.members[w], m->members[static_cast<std::size_t>(id)], bases[w]);
    lefts[w] = left_inverse(bases[w]);
  }
  for (std::size_t k = 0; k < basis_weights.size(); ++k) {
    std::string lbl = "v" + std::to_string(k + 1);
    m->basis.push_back(std::move(lbl));
  }
  auto restrict_block = [&](const ActionBlock& amb_blk, std::size_t w) {
    const FpMatrix moved = amb_blk.matrix * bases[w];
    const auto t = static_cast<std::size_t>(amb_blk.target);
    if (sub_of_amb[t] < 0) {
      if (!moved.is_zero()) throw std::logic_error("span is not invariant under the action");
      return ActionBlock{-1, FpMatrix(amb.p, 0, bases[w].cols())};
    }
    FpMatrix coords = lefts[t] * moved;
    if (!(bases[t] * coords == moved)) throw std::logic_error("span is not invariant under the action");
    return ActionBlock{sub_of_amb[t], std::move(coords)};
  };
  for (std::size_t w = 0; w < amb.weights.size(); ++w) {
    const int id = sub_of_amb[w];
    if (id < 0) continue;
    const auto uid = static_cast<std::size_t>(id);
    for (std::size_t g = 0; g < amb.generators.size(); ++g) {
      const ActionBlock& ab = amb.raise[g][w];
      if (ab.target < 0) continue;
      ActionBlock blk = restrict_block(ab, w);
      if (blk.target >= 0) m->raise[g][uid] = std::move(blk);
    }
    for (std::size_t j = 0; j < amb.swap.size(); ++j) {
      ActionBlock blk = restrict_block(amb.swap[j][w], w);
      if (blk.target < 0) throw std::logic_error("span is not closed under permutations");
      m->swap[j][uid] = std::move(blk);
    }
  }
  ModulePtr mod = m;
  return Embedding{mod, LinMap{mod, ambient_ptr, std::move(incl)}};
}

Embedding kernel_submodule(const LinMap& f, std::string label) {
  std::map<Weight, FpMatrix> spans;
  for (const Weight& w : f.source->weights) {
    Subspace k = kernel_basis(f.weight_block(w));
    spans.emplace(w, k.basis().transpose());
  }
  return submodule(f.source, spans, std::move(label));
}

Embedding image_submodule(const LinMap& f, std::string label) {
  std::map<Weight, FpMatrix> spans;
  for (const Weight& w : f.target->weights) {
    Subspace im = image_basis(f.weight_block(w));
    spans.emplace(w, im.basis().transpose());
  }
  return submodule(f.target, spans, std::move(label));
}

LinMap corestrict(const LinMap& f, const LinMap& inclusion) {
  if (inclusion.target->dim() != f.target->dim()) throw std::invalid_argument("corestriction target mismatch");
  FpMatrix out(f.source->p, inclusion.source->dim(), f.source->dim());
  const PFModule& sub = *inclusion.source;
  for (std::size_t w = 0; w < f.source->weights.size(); ++w) {
    const Weight& wt = f.source->weights[w];
    const FpMatrix fw = f.weight_block(wt);
    if (sub.weight_id(wt) < 0) {
      if (!fw.is_zero()) throw std::logic_error("image not contained in the submodule");
      continue;
    }
    const FpMatrix j = inclusion.weight_block(wt);
    const FpMatrix coords = left_inverse(j) * fw;
    if (!(j * coords == fw)) throw std::logic_error("image not contained in the submodule");
    out.set_block(sub.members[static_cast<std::size_t>(sub.weight_id(wt))], f.source->members[w], coords);
  }
  return LinMap{f.source, inclusion.source, std::move(out)};
}

namespace {

struct OmegaShape {
  int sym_degree;
  int ext_degree;
};

OmegaShape omega_shape(const PFModule& m) {
  if (m.dim() == 0) return {-1, -1};
  if (m.monomials.empty()) throw std::invalid_argument("Koszul and de Rham maps need tensor-word modules");
  const auto n = static_cast<std::size_t>(m.n);
  if (m.monomials.front().size() != 2 * n) throw std::invalid_argument("expected a Sym⊗Ext module");
  int s = 0, e = 0;
  for (std::size_t k = 0; k < n; ++k) {
    s += m.monomials.front()[k];
    e += m.monomials.front()[n + k];
  }
  return {s, e};
}

}  // namespace

LinMap koszul_map(const ModulePtr& source, const ModulePtr& target) {
  LinMap f = zero_map(source, target);
  if (source->dim() == 0 || target->dim() == 0) return f;
  const auto n = static_cast<std::size_t>(source->n);
  const OmegaShape s = omega_shape(*source), t = omega_shape(*target);
  if (t.sym_degree != s.sym_degree + 1 || t.ext_degree != s.ext_degree - 1)
    throw std::invalid_argument("Koszul map needs Omega^i -> Omega^{i-1}");
  for (std::size_t c = 0; c < source->dim(); ++c) {
    const auto& mono = source->monomials[c];
    int k = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!mono[n + j]) continue;
      std::vector<int> img = mono;
      img[j] += 1;
      img[n + j] = 0;
      const int r = target->monomial_lookup.at(img);
      f.matrix.add_to(static_cast<std::size_t>(r), c, k % 2 ? -1 : 1);
      ++k;
    }
  }
  return f;
}

LinMap derham_map(const ModulePtr& source, const ModulePtr& target) {
  LinMap f = zero_map(source, target);
  if (source->dim() == 0 || target->dim() == 0) return f;
  const auto n = static_cast<std::size_t>(source->n);
  const OmegaShape s = omega_shape(*source), t = omega_shape(*target);
  if (t.sym_degree != s.sym_degree - 1 || t.ext_degree != s.ext_degree + 1)
    throw std::invalid_argument("de Rham map needs Omega^i -> Omega^{i+1}");
  for (std::size_t c = 0; c < source->dim(); ++c) {
    const auto& mono = source->monomials[c];
    int below = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (mono[j] && !mono[n + j]) {
        std::vector<int> img = mono;
        img[j] -= 1;
        img[n + j] = 1;
        const int r = target->monomial_lookup.at(img);
        f.matrix.add_to(static_cast<std::size_t>(r), c, (below % 2 ? -1 : 1) * mono[j]);
      }
      below += mono[n + j];
    }
  }
  return f;
}

nlohmann::json to_json(const PFModule& m) {
  nlohmann::json j;
  j["label"] = m.label;
  j["p"] = m.p;
  j["n"] = m.n;
  j["degree"] = m.degree;
  j["basis"] = m.basis;
  nlohmann::json weights = nlohmann::json::array();
  for (std::size_t s = 0; s < m.dim(); ++s) weights.push_back(m.weights[static_cast<std::size_t>(m.weight_of[s])]);
  j["weights"] = weights;
  return j;
}

nlohmann::json to_json(const LinMap& f) {
  nlohmann::json j;
  j["source"] = f.source->label;
  j["target"] = f.target->label;
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < f.matrix.rows(); ++r) rows.push_back(f.matrix.row(r));
  j["matrix"] = rows;
  return j;
}

}  // namespace hookblock
