#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "hookblock/gfp.hpp"
#include "hookblock/partitions.hpp"

namespace hookblock {

enum class FactorKind { Sym, Ext, Div, Tens };

struct Factor {
  FactorKind kind = FactorKind::Sym;
  int degree = 0;
};

// Formal tensor word such as Sym(2)⊗Ext(1).
struct FunctorDescriptor {
  std::vector<Factor> factors;
  int degree() const;
  std::string to_string() const;
};

using Weight = std::vector<int>;

// Divided-power generator E_{ab}^{(r)}: adds r to coordinate a and removes r from b (0-based).
struct Generator {
  int a = 0;
  int b = 0;
  int r = 1;
};

std::vector<Generator> generator_family(int n, int degree);

struct ActionBlock {
  int target = -1;  // weight id of the image, -1 when the image weight is absent
  FpMatrix matrix;  // dim(target weight) x dim(source weight)
};

// A strict polynomial functor evaluated at k^n, as a weight-graded module with
// explicit actions of the generators E_{ab}^{(r)} and of the adjacent transpositions.
struct PFModule {
  int p = 2;
  int n = 1;
  int degree = 0;
  std::string label;
  std::vector<std::string> basis;
  std::vector<Weight> weights;
  std::map<Weight, int> weight_lookup;
  std::vector<int> weight_of;
  std::vector<int> local_index;
  std::vector<std::vector<int>> members;
  std::vector<Generator> generators;
  std::vector<std::vector<ActionBlock>> raise;  // [generator][source weight]
  std::vector<std::vector<ActionBlock>> swap;   // [j][source weight], s_j exchanges j and j+1
  // Tensor-word modules only: concatenated per-factor exponent vectors of each basis element.
  std::vector<std::vector<int>> monomials;
  std::map<std::vector<int>, int> monomial_lookup;

  std::size_t dim() const { return basis.size(); }
  int weight_id(const Weight& w) const;
  std::size_t weight_dim(const Weight& w) const;
  FpMatrix action_matrix(std::size_t g) const;
  FpMatrix swap_matrix(std::size_t j) const;
};

using ModulePtr = std::shared_ptr<const PFModule>;

struct LinMap {
  ModulePtr source;
  ModulePtr target;
  FpMatrix matrix;  // target.dim x source.dim

  // Restriction to the weight space w on both sides.
  FpMatrix weight_block(const Weight& w) const;
  bool is_weight_preserving() const;
  bool is_equivariant() const;
};

LinMap compose(const LinMap& g, const LinMap& f);  // g after f
LinMap identity_map(const ModulePtr& m);
LinMap zero_map(const ModulePtr& source, const ModulePtr& target);

// A submodule together with its inclusion into the ambient module.
struct Embedding {
  ModulePtr module;
  LinMap inclusion;
};

ModulePtr eval_space(const FunctorDescriptor& desc, int n, int p);
ModulePtr zero_module(int p, int n, int degree);
// Omega^i_e = Sym(e-i) ⊗ Ext(i)
ModulePtr omega_module(int p, int e, int i, int n);

ModulePtr kuhn_dual(const ModulePtr& m);
// Shared dual objects, so that M^# is the same module wherever it appears; registered
// pairs are dual to each other in both directions.
ModulePtr canonical_dual(const ModulePtr& m);
void register_dual_pair(const ModulePtr& m, const ModulePtr& dual);
// (f: M -> N) |-> (f^#: N^# -> M^#), given the dual modules.
LinMap kuhn_dual(const LinMap& f, const ModulePtr& source_dual, const ModulePtr& target_dual);

// Submodule spanned per weight by the given column vectors (in ambient weight coordinates).
// Throws std::logic_error if the span is not invariant.
Embedding submodule(const ModulePtr& ambient, const std::map<Weight, FpMatrix>& spans, std::string label);
Embedding kernel_submodule(const LinMap& f, std::string label);
Embedding image_submodule(const LinMap& f, std::string label);
// f: A -> B with image inside B' (given by its inclusion) becomes A -> B'.
LinMap corestrict(const LinMap& f, const LinMap& inclusion);

// Koszul kappa: Omega^i -> Omega^{i-1}, de Rham d: Omega^i -> Omega^{i+1} between given modules.
LinMap koszul_map(const ModulePtr& source, const ModulePtr& target);
LinMap derham_map(const ModulePtr& source, const ModulePtr& target);

// Basis of all generator-equivariant linear maps M -> N.
std::vector<LinMap> hom_basis(const ModulePtr& m, const ModulePtr& n);
std::size_t hom_dimension(const ModulePtr& m, const ModulePtr& n);

// S_lambda = image of Lambda^lambda -> I^{⊗e} -> S^{lambda~}.
Embedding schur_module(const Partition& lambda, int n, int p);
ModulePtr weyl_module(const Partition& lambda, int n, int p);
// F_lambda = image of the (unique up to scalar) map W_lambda -> S_lambda.
Embedding simple_module(const Partition& lambda, int n, int p);
// dim S_lambda(k^n) from dominant weight-space ranks of the defining map.
long long schur_dimension(const Partition& lambda, int n, int p);

std::size_t multiplicity(const ModulePtr& h, const Partition& mu);

// Realization of the hook block at e = p: Omega^i, kappa, d, S_i, W_i, F_i.
class HookBlockModules {
 public:
  static std::shared_ptr<const HookBlockModules> get(int p, int n);
  HookBlockModules(int p, int n);

  int p() const { return p_; }
  int n() const { return n_; }
  const ModulePtr& omega(int i) const;       // 0 <= i <= p
  const ModulePtr& omega_dual(int i) const;  // 0 <= i <= p
  const LinMap& kappa(int i) const;          // Omega^i -> Omega^{i-1}, 1 <= i <= p
  const LinMap& derham(int i) const;         // Omega^i -> Omega^{i+1}, 0 <= i <= p-1
  const LinMap& kappa_dual(int i) const;     // (Omega^{i-1})^# -> (Omega^i)^#, 1 <= i <= p
  // Canonical identification (Omega^p)^# -> Omega^p.
  const LinMap& top_identification() const { return top_id_; }

  const Embedding& schur(int i) const;   // S_i = ker kappa_i inside Omega^i
  const ModulePtr& weyl(int i) const;    // W_i = S_i^#
  const Embedding& simple(int i) const;  // F_i = ker(d_i|S_i) inside S_i
  const LinMap& simple_in_omega(int i) const;

 private:
  int p_;
  int n_;
  std::vector<ModulePtr> omega_, omega_dual_;
  std::vector<LinMap> kappa_, derham_, kappa_dual_;
  LinMap top_id_;
  std::vector<Embedding> schur_, simple_;
  std::vector<ModulePtr> weyl_;
  std::vector<LinMap> simple_in_omega_;
};

nlohmann::json to_json(const PFModule& m);
nlohmann::json to_json(const LinMap& f);

}  // namespace hookblock
