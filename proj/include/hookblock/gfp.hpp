#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace hookblock {

using fp_t = std::uint32_t;
using FpVector = std::vector<fp_t>;

// Residue helpers for a prime modulus p < 2^15.
fp_t fp_reduce(long long v, int p);
fp_t fp_inverse(fp_t a, int p);

// Dense row-major matrix over F_p.
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(int p, std::size_t rows, std::size_t cols);

  static FpMatrix identity(int p, std::size_t n);
  static FpMatrix from_rows(int p, const std::vector<std::vector<long long>>& rows);

  int p() const { return p_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  fp_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, long long v) { data_[r * cols_ + c] = fp_reduce(v, p_); }
  void add_to(std::size_t r, std::size_t c, long long v);
  fp_t* row_data(std::size_t r) { return data_.data() + r * cols_; }
  const fp_t* row_data(std::size_t r) const { return data_.data() + r * cols_; }
  FpVector row(std::size_t r) const;
  FpVector column(std::size_t c) const;

  FpMatrix operator*(const FpMatrix& other) const;
  FpVector operator*(const FpVector& v) const;
  FpMatrix operator+(const FpMatrix& other) const;
  FpMatrix operator-(const FpMatrix& other) const;
  FpMatrix scaled(long long k) const;
  FpMatrix transpose() const;
  bool is_zero() const;
  bool operator==(const FpMatrix& other) const;

  // Submatrix on the given row and column index lists.
  FpMatrix block(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const;
  void set_block(const std::vector<int>& row_idx, const std::vector<int>& col_idx, const FpMatrix& b);
  void set_block(std::size_t row0, std::size_t col0, const FpMatrix& b);
  FpMatrix sub(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const;

  static FpMatrix hstack(const std::vector<FpMatrix>& parts, int p, std::size_t rows);
  static FpMatrix vstack(const std::vector<FpMatrix>& parts, int p, std::size_t cols);

 private:
  int p_ = 2;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<fp_t> data_;
};

struct RrefResult {
  FpMatrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form, pivoting on the first nonzero entry.
RrefResult rref(FpMatrix m);
std::size_t rank(const FpMatrix& m);

// Row space of a matrix, stored as its reduced echelon basis (canonical).
class Subspace {
 public:
  Subspace(int p, std::size_t ambient);
  static Subspace span_rows(const FpMatrix& rows);
  static Subspace span_columns(const FpMatrix& cols);
  static Subspace whole(int p, std::size_t ambient);

  int p() const { return p_; }
  std::size_t ambient() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  // Rows are the canonical basis vectors.
  const FpMatrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  bool contains(const FpVector& v) const;
  bool contains(const Subspace& other) const;
  // Coordinates of v (assumed contained) in the canonical basis.
  FpVector coordinates(const FpVector& v) const;
  bool operator==(const Subspace& other) const;

 private:
  int p_;
  std::size_t ambient_;
  FpMatrix basis_;
  std::vector<std::size_t> pivots_;
};

// Null space {x : M x = 0}.
Subspace kernel_basis(const FpMatrix& m);
// Column space of M.
Subspace image_basis(const FpMatrix& m);
// Some x with M x = b, or nothing when inconsistent.
std::optional<FpVector> solve(const FpMatrix& m, const FpVector& b);
// Inverse of a square invertible matrix; throws std::domain_error when singular.
FpMatrix inverse(const FpMatrix& m);

Subspace intersect(const Subspace& u, const Subspace& v);
Subspace sum(const Subspace& u, const Subspace& v);
// For U ⊆ W: a (dim W - dim U) x ambient matrix whose restriction to W is onto with kernel U.
FpMatrix quotient_map(const Subspace& u, const Subspace& w);

}  // namespace hookblock
