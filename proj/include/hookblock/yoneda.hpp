#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hookblock/closed_forms.hpp"
#include "hookblock/complex_engine.hpp"

namespace hookblock {

enum class Family { Schur, Simple };

std::string family_name(Family f);
Family parse_family(const std::string& text);

// An explicit cocycle representing a basis element of the Yoneda algebra, labelled as
// the matching basis element of the model algebra.
struct FamilyMap {
  std::string label;
  int source = 0;  // index i of S_i / F_i
  int target = 0;  // index j
  int degree = 0;
  ChainMap map;
};

// gamma_{ji} and gamma-bar_{ji} on the complexes T_i, or alpha^t_{ji} on Tot R_i.
std::vector<FamilyMap> yoneda_family(Family f, int p, int n);

// The four gamma/gamma-bar rules and the alpha rule as exact equalities of chain maps.
// Rules between maps that do not compose (j != l) hold vacuously.
CheckReport verify_product_tables(int p, int n);

// No gamma_{ji}, gamma-bar_{ji} or alpha^{2p-i-j-2}_{ji} is null-homotopic.
CheckReport certify_non_null(int p, int n);

struct FormalityReport {
  CheckReport check;
  std::map<int, std::pair<int, int>> degree_dims;  // t -> (dim span of classes, dim Ext^t)
};

// (a) every family map is a cycle, (b) composites of family maps are family maps or zero,
// (c) per degree and index pair the classes are independent and span Ext.
FormalityReport formality_certificate(Family f, int p, int n);

// Basis bijection model <-> family maps preserving degrees, with equal structure constants.
CheckReport compare_model_oracle(Family f, int p, int n);

}  // namespace hookblock
