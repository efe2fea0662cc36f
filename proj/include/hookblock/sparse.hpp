#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hookblock/gfp.hpp"

namespace hookblock {

struct Triplet {
  std::size_t row;
  std::size_t col;
  long long value;
};

// Row-compressed matrix over F_p with sorted, nonzero entries.
class SpMatrix {
 public:
  using Entry = std::pair<std::uint32_t, fp_t>;

  SpMatrix() = default;
  SpMatrix(int p, std::size_t rows, std::size_t cols);
  SpMatrix(int p, std::size_t rows, std::size_t cols, const std::vector<Triplet>& triplets);
  static SpMatrix from_dense(const FpMatrix& m);
  static SpMatrix identity(int p, std::size_t n);

  int p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nonzeros() const;
  const std::vector<Entry>& row(std::size_t r) const { return data_[r]; }
  fp_t at(std::size_t r, std::size_t c) const;

  FpMatrix to_dense() const;
  // Dense submatrix on index lists.
  FpMatrix block(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
  FpMatrix block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  SpMatrix operator*(const SpMatrix& other) const;
  SpMatrix operator+(const SpMatrix& other) const;
  SpMatrix operator-(const SpMatrix& other) const;
  SpMatrix scaled(long long k) const;
  SpMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const SpMatrix& other) const;

  // Appends triplets of this matrix shifted by the given offsets.
  void emit(std::vector<Triplet>& out, std::size_t row0, std::size_t col0) const;

 private:
  int p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Entry>> data_;
};

}  // namespace hookblock
