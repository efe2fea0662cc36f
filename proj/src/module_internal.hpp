#pragma once

#include <cstddef>
#include <vector>

#include "hookblock/functor_lab.hpp"

namespace hookblock::detail {

std::size_t generator_index(int n, int degree, int a, int b, int r);
long long binomial(int n, int k);
void finalize_weights(PFModule& m, const std::vector<Weight>& basis_weights);
void allocate_blocks(PFModule& m);

}  // namespace hookblock::detail
