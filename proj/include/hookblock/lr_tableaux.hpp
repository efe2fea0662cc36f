#pragma once

#include <map>
#include <vector>

#include "hookblock/partitions.hpp"

namespace hookblock {

// Filling of the skew shape outer/inner; entries[r] lists row r's skew cells left to right.
struct SkewTableau {
  Partition outer;
  Partition inner;
  std::vector<std::vector<int>> entries;

  int at(int row, int col) const;  // col is absolute (0-based)
  std::vector<int> content() const;
};

bool is_yamanouchi(const std::vector<int>& word);

// Rows weakly increasing, columns strictly increasing.
bool is_semistandard(const SkewTableau& t);

// Rows top to bottom, each read right to left.
std::vector<int> row_reading_word(const SkewTableau& t);
// Columns left to right, each read bottom to top.
std::vector<int> column_reading_word(const SkewTableau& t);

// Semistandard tableaux of shape mu/lambda and content nu whose row reading word is
// Yamanouchi; their number is the Littlewood-Richardson coefficient c^mu_{lambda nu}.
std::vector<SkewTableau> lr_tableaux(const Partition& lambda, const Partition& nu, const Partition& mu);
long lr_coefficient(const Partition& lambda, const Partition& nu, const Partition& mu);

// Transposed convention: rows strictly increase, columns weakly increase, and the
// column reading word (bottom to top, left to right) is Yamanouchi. The count equals
// c^{mu~}_{lambda~ nu}.
std::vector<SkewTableau> column_lr_tableaux(const Partition& lambda, const Partition& nu,
                                            const Partition& mu);

// Column-convention count with content (p-i, 1^i); equals c^mu_{lambda, hook(i)}.
long hook_translation_coefficient(int i, const Partition& lambda, const Partition& mu, int p);

// Multiplicities c^mu_{core nu} over mu whose p-core is core.
std::map<Partition, long> theta_multiplicities(const Partition& core, const Partition& nu, int p);

}  // namespace hookblock
