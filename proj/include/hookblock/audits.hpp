#pragma once

#include <map>
#include <vector>

#include "hookblock/closed_forms.hpp"
#include "hookblock/complex_engine.hpp"

namespace hookblock {

// d∘d = 0 on every complex of the block, d kappa + kappa d = 0 at e = p and
// d kappa + kappa d = e id at e = p - 1.
CheckReport relation_check(int p, int n);

// coker kappa_j is S_{j-2} and ker kappa_j^# is W_{j-2} (2 <= j <= p), by dimension and Hom.
CheckReport cokernel_identification(int p, int n);

// Omega^i is a summand of S^{p-i} ⊗ I^{⊗i} via the antisymmetrizer, and Hom(-, Omega^k)
// is exact on 0 -> F_{j+1} -> W_j -> F_j -> 0 and 0 -> F_j -> S_j -> F_{j+1} -> 0.
CheckReport injectivity_audit(int p, int n);

// End(Omega^i) is local: every element is invertible or nilpotent (exhaustive over F_p).
struct IndecomposabilityReport {
  CheckReport check;
  std::map<int, int> endomorphism_dims;
};
IndecomposabilityReport indecomposability_audit(int p, int n);

// [W_l : F_m] from formal characters, with the kernel of W_l -> S_l identified as F_{l+1}.
struct DecompositionDerivation {
  std::vector<std::vector<int>> matrix;
  CheckReport check;
};
DecompositionDerivation decomposition_from_characters(int p, int n);

}  // namespace hookblock
