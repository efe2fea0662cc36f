#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "hookblock/gfp.hpp"
#include "hookblock/objects.hpp"

namespace hookblock {

// Closed-form Ext^q(X, Y) in the hook block; each satisfied case contributes k.
ExtTable ext_table(ObjectKind x, ObjectKind y, int p);

// d_{lm} = [W_{l-1} : F_{m-1}], 1-based, p x p.
std::vector<std::vector<int>> decomposition_matrix(int p);

// Length function on the hook block: l(hook i) = i.
int hook_length_function(int i);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string what) {
    ok = false;
    failures.push_back(std::move(what));
  }
};

// Parity of (F,S) and (W,F) tables against the length function, and the sum identity
// rebuilding the (F,F) table from the (F,S) table.
CheckReport kl_check(int p);

// Finite graded algebra over F_p given by a basis and sparse structure constants.
class GradedAlgebraModel {
 public:
  using Vec = std::map<std::size_t, fp_t>;  // sparse vector, nonzero entries

  GradedAlgebraModel(std::string name, int p);

  std::size_t add_basis(std::string label, int degree);
  // basis[x] * basis[y] += c * basis[z]
  void set_product(std::size_t x, std::size_t y, std::size_t z, long long c = 1);
  void add_idempotent(std::size_t e) { idempotents_.push_back(e); }

  const std::string& name() const { return name_; }
  int p() const { return p_; }
  std::size_t dim() const { return labels_.size(); }
  const std::string& label(std::size_t x) const { return labels_[x]; }
  int degree(std::size_t x) const { return degrees_[x]; }
  std::size_t index(const std::string& label) const;
  bool has(const std::string& label) const { return lookup_.count(label) > 0; }
  const std::vector<std::size_t>& idempotents() const { return idempotents_; }

  Vec product(std::size_t x, std::size_t y) const;
  Vec multiply(const Vec& u, const Vec& v) const;
  Vec basis_vector(std::size_t x) const { return Vec{{x, 1}}; }
  Vec unit() const;
  std::map<int, int> graded_dims() const;

  // Exhaustive associativity, unit laws and degree additivity.
  CheckReport structure_check() const;
  nlohmann::json to_json() const;

 private:
  std::string name_;
  int p_;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::map<std::string, std::size_t> lookup_;
  std::map<std::pair<std::size_t, std::size_t>, Vec> table_;
  std::vector<std::size_t> idempotents_;
};

std::string label_a(int j, int i);             // "a[j,i]"
std::string label_abar(int j, int i);          // "abar[j,i]"
std::string label_b(int t, int j, int i);      // "b^t[j,i]"

// A: a_{ji} (i <= j, degree j-i) and abar_{ji} (i < j, degree j-i-1).
GradedAlgebraModel model_schur_yoneda(int p);
// B: b^t_{ji} with t = |i-j| + 2r, 0 <= r <= p - max(i,j) - 1.
GradedAlgebraModel model_simple_yoneda(int p);

// A as a square-zero extension of upper triangular matrices by strictly upper ones:
// the abar span is an ideal squaring to zero, the quotient multiplies like matrix units,
// and a_{ji} -> (e_{p-j,p-i}, 0), abar_{ji} -> (0, ebar_{p-j,p-i}) is multiplicative.
CheckReport square_zero_check(int p);

// e_i B e_i is K[x]/(x^{p-i}) with x = b^2_{ii} in degree 2.
CheckReport truncated_poly_iso(int i, int p);

// Graded dimensions of A and B against summed closed-form Ext tables.
CheckReport model_dimension_check(int p);

}  // namespace hookblock
