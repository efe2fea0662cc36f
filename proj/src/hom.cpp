#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

#include "hookblock/functor_lab.hpp"

namespace hookblock {

namespace {

Weight sorted_desc(Weight w) {
  std::sort(w.begin(), w.end(), std::greater<>());
  return w;
}

bool is_dominant(const Weight& w) { return std::is_sorted(w.begin(), w.end(), std::greater<>()); }

struct Transport {
  FpMatrix to;    // M_u -> M_w with u the dominant rearrangement of w
  FpMatrix from;  // M_w -> M_u
};

// Transports along adjacent transpositions, cached per weight.
class TransportTable {
 public:
  explicit TransportTable(const PFModule& m) : m_(m) {}

  const Transport& at(const Weight& w) {
    auto it = cache_.find(w);
    if (it != cache_.end()) return it->second;
    std::vector<std::size_t> path;
    Weight cur = w;
    const std::size_t dw = m_.weight_dim(w);
    FpMatrix from = FpMatrix::identity(m_.p, dw);
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t j = 0; j + 1 < cur.size(); ++j) {
        if (cur[j] < cur[j + 1]) {
          const ActionBlock& blk = m_.swap[j][static_cast<std::size_t>(m_.weight_id(cur))];
          from = blk.matrix * from;
          std::swap(cur[j], cur[j + 1]);
          path.push_back(j);
          changed = true;
        }
      }
    }
    FpMatrix to = FpMatrix::identity(m_.p, dw);
    for (auto k = path.rbegin(); k != path.rend(); ++k) {
      const ActionBlock& blk = m_.swap[*k][static_cast<std::size_t>(m_.weight_id(cur))];
      to = blk.matrix * to;
      std::swap(cur[*k], cur[*k + 1]);
    }
    return cache_.emplace(w, Transport{std::move(to), std::move(from)}).first->second;
  }

 private:
  const PFModule& m_;
  std::map<Weight, Transport> cache_;
};

// Accumulates linear equations and keeps them row reduced.
class EquationSystem {
 public:
  EquationSystem(int p, std::size_t unknowns)
      : p_(p), unknowns_(unknowns), capacity_(std::max<std::size_t>(2 * unknowns, 64)),
        buffer_(p, capacity_, unknowns) {}

  fp_t* next_row() {
    if (used_ == capacity_) compact();
    fp_t* row = buffer_.row_data(used_);
    std::fill(row, row + unknowns_, 0);
    return row;
  }
  void commit() {
    fp_t* row = buffer_.row_data(used_);
    if (std::any_of(row, row + unknowns_, [](fp_t x) { return x != 0; })) ++used_;
  }

  Subspace solutions() {
    compact();
    return kernel_basis(buffer_.sub(0, 0, used_, unknowns_));
  }

 private:
  void compact() {
    RrefResult rr = rref(buffer_.sub(0, 0, used_, unknowns_));
    buffer_ = FpMatrix(p_, capacity_, unknowns_);
    buffer_.set_block(0, 0, rr.reduced.sub(0, 0, rr.rank, unknowns_));
    used_ = rr.rank;
  }

  int p_;
  std::size_t unknowns_;
  std::size_t capacity_;
  FpMatrix buffer_;
  std::size_t used_ = 0;
};

struct UnknownBlock {
  std::size_t offset = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
};

struct HomSolution {
  std::vector<Weight> dominant;
  std::map<Weight, UnknownBlock> blocks;
  Subspace space;
};

HomSolution solve_hom(const PFModule& M, const PFModule& N) {
  if (M.p != N.p || M.n != N.n || M.degree != N.degree)
    throw std::invalid_argument("hom_basis requires equal p, n and degree");
  const int p = M.p;
  HomSolution sol{{}, {}, Subspace(p, 0)};
  std::size_t unknowns = 0;
  for (const Weight& w : M.weights) {
    if (!is_dominant(w)) continue;
    sol.dominant.push_back(w);
    const std::size_t rows = N.weight_dim(w);
    if (rows == 0) continue;
    const std::size_t cols = M.weight_dim(w);
    sol.blocks.emplace(w, UnknownBlock{unknowns, rows, cols});
    unknowns += rows * cols;
  }
  if (unknowns == 0) return sol;
  TransportTable tm(M), tn(N);
  EquationSystem eqs(p, unknowns);
  const auto pp = static_cast<fp_t>(p);

  for (const Weight& u : sol.dominant) {
    const std::size_t uid = static_cast<std::size_t>(M.weight_id(u));
    auto xu_it = sol.blocks.find(u);
    const UnknownBlock* xu = xu_it == sol.blocks.end() ? nullptr : &xu_it->second;
    const int nid = N.weight_id(u);
    for (std::size_t g = 0; g < M.generators.size(); ++g) {
      const Generator gen = M.generators[g];
      if (u[static_cast<std::size_t>(gen.b)] < gen.r) continue;
      Weight t = u;
      t[static_cast<std::size_t>(gen.a)] += gen.r;
      t[static_cast<std::size_t>(gen.b)] -= gen.r;
      const std::size_t rows = N.weight_dim(t);
      if (rows == 0) continue;
      const std::size_t cols = M.members[uid].size();
      // N_g X_u
      FpMatrix ng;
      if (xu) ng = N.raise[g][static_cast<std::size_t>(nid)].matrix;
      // T^N_t X_v Tinv^M_t M_g
      const Weight v = sorted_desc(t);
      auto xv_it = sol.blocks.find(v);
      const UnknownBlock* xv = nullptr;
      FpMatrix tn_to, q;
      const ActionBlock& mg = M.raise[g][uid];
      if (xv_it != sol.blocks.end() && mg.target >= 0) {
        xv = &xv_it->second;
        tn_to = tn.at(t).to;
        q = tm.at(t).from * mg.matrix;
      }
      if (!xu && !xv) continue;
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
          fp_t* row = eqs.next_row();
          if (xu)
            for (std::size_t k = 0; k < xu->rows; ++k) {
              const fp_t a = ng(r, k);
              if (a) row[xu->offset + k * xu->cols + c] = static_cast<fp_t>((row[xu->offset + k * xu->cols + c] + a) % pp);
            }
          if (xv)
            for (std::size_t k = 0; k < xv->rows; ++k) {
              const fp_t a = tn_to(r, k);
              if (!a) continue;
              for (std::size_t l = 0; l < xv->cols; ++l) {
                const fp_t b = q(l, c);
                if (!b) continue;
                fp_t& x = row[xv->offset + k * xv->cols + l];
                x = static_cast<fp_t>((x + pp - (a * b) % pp) % pp);
              }
            }
          eqs.commit();
        }
    }
    if (!xu) continue;
    for (std::size_t j = 0; j + 1 < u.size(); ++j) {
      if (u[j] != u[j + 1]) continue;
      const FpMatrix& ns = N.swap[j][static_cast<std::size_t>(nid)].matrix;
      const FpMatrix& ms = M.swap[j][uid].matrix;
      for (std::size_t r = 0; r < xu->rows; ++r)
        for (std::size_t c = 0; c < xu->cols; ++c) {
          fp_t* row = eqs.next_row();
          for (std::size_t k = 0; k < xu->rows; ++k) {
            const fp_t a = ns(r, k);
            if (a) row[xu->offset + k * xu->cols + c] = static_cast<fp_t>((row[xu->offset + k * xu->cols + c] + a) % pp);
          }
          for (std::size_t l = 0; l < xu->cols; ++l) {
            const fp_t b = ms(l, c);
            if (b) {
              fp_t& x = row[xu->offset + r * xu->cols + l];
              x = static_cast<fp_t>((x + pp - b) % pp);
            }
          }
          eqs.commit();
        }
    }
  }
  sol.space = eqs.solutions();
  return sol;
}

}  // namespace

std::vector<LinMap> hom_basis(const ModulePtr& m, const ModulePtr& n) {
  HomSolution sol = solve_hom(*m, *n);
  std::vector<LinMap> out;
  if (sol.space.dim() == 0) return out;
  TransportTable tm(*m), tn(*n);
  for (std::size_t k = 0; k < sol.space.dim(); ++k) {
    const FpVector x = sol.space.basis().row(k);
    LinMap f = zero_map(m, n);
    for (std::size_t w = 0; w < m->weights.size(); ++w) {
      const Weight& wt = m->weights[w];
      const int nid = n->weight_id(wt);
      if (nid < 0) continue;
      const UnknownBlock& blk = sol.blocks.at(sorted_desc(wt));
      FpMatrix xu(m->p, blk.rows, blk.cols);
      for (std::size_t r = 0; r < blk.rows; ++r)
        for (std::size_t c = 0; c < blk.cols; ++c) xu.set(r, c, x[blk.offset + r * blk.cols + c]);
      FpMatrix xw = tn.at(wt).to * xu * tm.at(wt).from;
      f.matrix.set_block(n->members[static_cast<std::size_t>(nid)], m->members[w], xw);
    }
    out.push_back(std::move(f));
  }
  return out;
}

std::size_t hom_dimension(const ModulePtr& m, const ModulePtr& n) { return solve_hom(*m, *n).space.dim(); }

}  // namespace hookblock
