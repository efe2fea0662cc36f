#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hookblock/functor_lab.hpp"
#include "hookblock/objects.hpp"
#include "hookblock/sparse.hpp"

namespace hookblock {

// Direct sum of modules sitting in one degree of a complex.
struct Term {
  std::vector<ModulePtr> summands;
  std::vector<std::string> tags;

  std::size_t dim() const;
  std::size_t offset(std::size_t k) const;
  bool empty() const { return dim() == 0; }
};

// Cochain complex of evaluated functors; d^m : X^m -> X^{m+1}.
class Complex {
 public:
  Complex(std::string label, int p, int n, int degree);

  const std::string& label() const { return label_; }
  int p() const { return p_; }
  int n() const { return n_; }
  int degree() const { return degree_; }

  void set_term(int m, Term t);
  void set_differential(int m, SpMatrix d);
  const Term& term(int m) const;
  SpMatrix differential(int m) const;
  int lo() const;  // lowest degree with a nonzero term
  int hi() const;  // highest degree with a nonzero term

  bool squares_to_zero() const;
  // Global indices of the basis vectors of weight w in degree m.
  std::vector<int> weight_indices(int m, const Weight& w) const;
  std::vector<Weight> weights(int m) const;

 private:
  std::string label_;
  int p_;
  int n_;
  int degree_;
  std::map<int, Term> terms_;
  std::map<int, SpMatrix> diffs_;
};

using ComplexPtr = std::shared_ptr<const Complex>;

ComplexPtr complex_from_module(const ModulePtr& m);
// (X^#)^k = (X^{-k})^#, with transposed differentials and canonical dual summands.
ComplexPtr dual_complex(const Complex& x);

std::size_t homology(const Complex& c, int q);
// Cycles whose classes form a basis of H^q (global coordinates of degree q).
std::vector<FpVector> homology_representatives(const Complex& c, int q);

// Bigraded terms with horizontal (r+1) and vertical (s+1) differentials.
struct DoubleComplex {
  std::string label;
  int p = 2;
  int n = 2;
  int degree = 2;
  std::map<std::pair<int, int>, ModulePtr> terms;
  std::map<std::pair<int, int>, SpMatrix> horizontal;
  std::map<std::pair<int, int>, SpMatrix> vertical;

  bool horizontal_squares_vanish() const;
  bool vertical_squares_vanish() const;
  bool anticommutes() const;
  // Total complex with summands of degree t ordered by r; D = horizontal + vertical,
  // optionally with the vertical part twisted by (-1)^r.
  Complex totalize(bool vertical_sign_twist = false) const;
};

// Chain map of degree shift t: components f^m : X^m -> Y^{m+t} with d f = f d.
struct ChainMap {
  ComplexPtr source;
  ComplexPtr target;
  int shift = 0;
  std::map<int, SpMatrix> components;

  SpMatrix component(int m) const;
  bool is_chain_map() const;
  bool is_zero() const;
  bool operator==(const ChainMap& other) const;
};

ChainMap compose_chain_maps(const ChainMap& g, const ChainMap& f);  // g after f
ChainMap zero_chain_map(const ComplexPtr& source, const ComplexPtr& target, int shift);
ChainMap identity_chain_map(const ComplexPtr& c);

// A resolution of `resolved` with augmentation X^0 -> resolved (projective) or
// resolved -> X^0 (injective).
struct Resolution {
  ComplexPtr complex;
  ModulePtr resolved;
  LinMap augmentation;
  bool injective = true;
};

struct ExactnessReport {
  bool exact = false;
  std::map<int, std::size_t> homology;  // nonzero homology of the bare complex
  std::size_t resolved_dim = 0;
  bool augmentation_ok = false;
};

ExactnessReport check_resolution(const Resolution& r);

// Complexes of the hook block at e = p.
ComplexPtr koszul_complex(int p, int n);     // degree m holds Omega^{p-m}, differential kappa
ComplexPtr derham_complex(int p, int n);     // degree i holds Omega^i, differential d
ComplexPtr koszul_kernel_complex(int p, int n);

struct CartierReport {
  std::vector<std::size_t> dims;  // dim H^i for i = 0..p
  bool ok = false;
};
CartierReport cartier_kernel_check(int p, int n);

Resolution schur_injective_resolution(int i, int p, int n);   // T_i
Resolution schur_projective_resolution(int i, int p, int n);  // glued dual Koszul complex
Resolution weyl_projective_resolution(int i, int p, int n);   // T_i^#
DoubleComplex simple_double_complex(int i, int p, int n);     // R_i
Resolution simple_injective_resolution(int i, int p, int n);  // Tot R_i
Resolution simple_projective_resolution(int i, int p, int n); // (Tot R_i)^#

ModulePtr hook_object(ObjectKind x, int p, int n);

// gamma_{ji}: T_i -> T_j (i <= j), degree j - i.
ChainMap chain_map_gamma(int j, int i, int p, int n);
// d~_i: T_i -> T_{i+1}, degree 0, components (-1)^{i-m} d_{i-m}.
ChainMap chain_map_dtilde(int i, int p, int n);
// gamma_{j,i+1} d~_i: T_i -> T_j (i < j), degree j - i - 1.
ChainMap chain_map_gamma_bar(int j, int i, int p, int n);
// alpha^t_{ji}: Tot R_i -> Tot R_j shifting (r,s) to (r + (t-i+j)/2, s + (t+i-j)/2).
ChainMap chain_map_alpha(int j, int i, int t, int p, int n);

// Hom complex Hom^t(X,Y) = prod_m Hom(X^m, Y^{m+t}) in hom-basis coordinates, with
// cycles d f = f d and boundaries d h + h d.
class HomComplex {
 public:
  HomComplex(ComplexPtr x, ComplexPtr y);
  ~HomComplex();

  std::size_t cochain_dim(int t);
  std::size_t ext_dimension(int t);
  // h of degree t-1 with f = d h + h d, or nothing when the class of f is nonzero.
  std::optional<ChainMap> null_homotopy(const ChainMap& f);
  // Dimension of the span of the classes of the given degree-t cycles.
  std::size_t class_rank(const std::vector<ChainMap>& maps);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

std::optional<ChainMap> null_homotopy(const ChainMap& f);

// Ext^q(X,Y) for q <= qmax via Hom into an injective resolution of Y (Y = S, F)
// or from a projective resolution of X (Y = W).
ExtTable ext_oracle(ObjectKind x, ObjectKind y, int p, int n, int qmax);

}  // namespace hookblock
