#include "hookblock/gfp.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookblock {

fp_t fp_reduce(long long v, int p) {
  long long r = v % p;
  return static_cast<fp_t>(r < 0 ? r + p : r);
}

fp_t fp_inverse(fp_t a, int p) {
  if (a % static_cast<fp_t>(p) == 0) throw std::domain_error("inverse of zero in F_p");
  long long t = 0, new_t = 1, r = p, new_r = a % static_cast<fp_t>(p);
  while (new_r != 0) {
    long long q = r / new_r;
    t = std::exchange(new_t, t - q * new_t);
    r = std::exchange(new_r, r - q * new_r);
  }
  return fp_reduce(t, p);
}

FpMatrix::FpMatrix(int p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), data_(rows * cols, 0) {
  if (p < 2 || p >= (1 << 15)) throw std::invalid_argument("unsupported modulus");
}

FpMatrix FpMatrix::identity(int p, std::size_t n) {
  FpMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i * n + i] = 1;
  return m;
}

FpMatrix FpMatrix::from_rows(int p, const std::vector<std::vector<long long>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  FpMatrix m(p, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, rows[r][c]);
  }
  return m;
}

void FpMatrix::add_to(std::size_t r, std::size_t c, long long v) {
  fp_t& x = data_[r * cols_ + c];
  x = fp_reduce(static_cast<long long>(x) + v, p_);
}

FpVector FpMatrix::row(std::size_t r) const {
  return FpVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

FpVector FpMatrix::column(std::size_t c) const {
  FpVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = data_[r * cols_ + c];
  return v;
}

FpMatrix FpMatrix::operator*(const FpMatrix& other) const {
  if (cols_ != other.rows_ || p_ != other.p_) throw std::invalid_argument("matrix product dimension mismatch");
  FpMatrix out(p_, rows_, other.cols_);
  std::vector<std::uint64_t> acc(other.cols_);
  // Entries are < 2^15, so 2^34 products fit before overflow; reduce periodically anyway.
  const std::size_t flush = 1u << 16;
  for (std::size_t i = 0; i < rows_; ++i) {
    std::fill(acc.begin(), acc.end(), 0);
    const fp_t* a = row_data(i);
    std::size_t pending = 0;
    for (std::size_t k = 0; k < cols_; ++k) {
      const fp_t aik = a[k];
      if (!aik) continue;
      const fp_t* b = other.row_data(k);
      for (std::size_t j = 0; j < other.cols_; ++j) acc[j] += static_cast<std::uint64_t>(aik) * b[j];
      if (++pending == flush) {
        for (auto& x : acc) x %= static_cast<std::uint64_t>(p_);
        pending = 0;
      }
    }
    fp_t* o = out.row_data(i);
    for (std::size_t j = 0; j < other.cols_; ++j) o[j] = static_cast<fp_t>(acc[j] % static_cast<std::uint64_t>(p_));
  }
  return out;
}

FpVector FpMatrix::operator*(const FpVector& v) const {
  if (v.size() != cols_) throw std::invalid_argument("matrix-vector dimension mismatch");
  FpVector out(rows_);
  for (std::size_t i = 0; i < rows_; ++i) {
    std::uint64_t acc = 0;
    const fp_t* a = row_data(i);
    for (std::size_t k = 0; k < cols_; ++k) acc += static_cast<std::uint64_t>(a[k]) * v[k];
    out[i] = static_cast<fp_t>(acc % static_cast<std::uint64_t>(p_));
  }
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix sum dimension mismatch");
  FpMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    fp_t s = out.data_[k] + other.data_[k];
    out.data_[k] = s >= static_cast<fp_t>(p_) ? s - static_cast<fp_t>(p_) : s;
  }
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix difference dimension mismatch");
  FpMatrix out(*this);
  for (std::size_t k = 0; k < data_.size(); ++k) {
    fp_t s = out.data_[k] + static_cast<fp_t>(p_) - other.data_[k];
    out.data_[k] = s >= static_cast<fp_t>(p_) ? s - static_cast<fp_t>(p_) : s;
  }
  return out;
}

FpMatrix FpMatrix::scaled(long long k) const {
  FpMatrix out(*this);
  const fp_t f = fp_reduce(k, p_);
  for (auto& x : out.data_) x = static_cast<fp_t>((static_cast<std::uint64_t>(x) * f) % static_cast<std::uint64_t>(p_));
  return out;
}

FpMatrix FpMatrix::transpose() const {
  FpMatrix out(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out.data_[c * rows_ + r] = data_[r * cols_ + c];
  return out;
}

bool FpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](fp_t x) { return x == 0; });
}

bool FpMatrix::operator==(const FpMatrix& other) const {
  return p_ == other.p_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

FpMatrix FpMatrix::block(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  FpMatrix out(p_, row_idx.size(), col_idx.size());
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    const fp_t* src = row_data(static_cast<std::size_t>(row_idx[r]));
    fp_t* dst = out.row_data(r);
    for (std::size_t c = 0; c < col_idx.size(); ++c) dst[c] = src[col_idx[c]];
  }
  return out;
}

void FpMatrix::set_block(const std::vector<int>& row_idx, const std::vector<int>& col_idx, const FpMatrix& b) {
  if (b.rows() != row_idx.size() || b.cols() != col_idx.size()) throw std::invalid_argument("block shape mismatch");
  for (std::size_t r = 0; r < row_idx.size(); ++r) {
    fp_t* dst = row_data(static_cast<std::size_t>(row_idx[r]));
    const fp_t* src = b.row_data(r);
    for (std::size_t c = 0; c < col_idx.size(); ++c) dst[col_idx[c]] = src[c];
  }
}

void FpMatrix::set_block(std::size_t row0, std::size_t col0, const FpMatrix& b) {
  if (row0 + b.rows() > rows_ || col0 + b.cols() > cols_) throw std::invalid_argument("block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    std::copy(b.row_data(r), b.row_data(r) + b.cols(), row_data(row0 + r) + col0);
}

FpMatrix FpMatrix::sub(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  if (row0 + nrows > rows_ || col0 + ncols > cols_) throw std::invalid_argument("submatrix out of range");
  FpMatrix out(p_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    std::copy(row_data(row0 + r) + col0, row_data(row0 + r) + col0 + ncols, out.row_data(r));
  return out;
}

FpMatrix FpMatrix::hstack(const std::vector<FpMatrix>& parts, int p, std::size_t rows) {
  std::size_t cols = 0;
  for (const auto& m : parts) {
    if (m.rows() != rows) throw std::invalid_argument("hstack row mismatch");
    cols += m.cols();
  }
  FpMatrix out(p, rows, cols);
  std::size_t c0 = 0;
  for (const auto& m : parts) {
    out.set_block(0, c0, m);
    c0 += m.cols();
  }
  return out;
}

FpMatrix FpMatrix::vstack(const std::vector<FpMatrix>& parts, int p, std::size_t cols) {
  std::size_t rows = 0;
  for (const auto& m : parts) {
    if (m.cols() != cols) throw std::invalid_argument("vstack column mismatch");
    rows += m.rows();
  }
  FpMatrix out(p, rows, cols);
  std::size_t r0 = 0;
  for (const auto& m : parts) {
    out.set_block(r0, 0, m);
    r0 += m.rows();
  }
  return out;
}

RrefResult rref(FpMatrix m) {
  const int p = m.p();
  const auto pp = static_cast<fp_t>(p);
  const std::size_t rows = m.rows(), cols = m.cols();
  RrefResult out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) std::swap_ranges(m.row_data(piv), m.row_data(piv) + cols, m.row_data(r));
    fp_t* prow = m.row_data(r);
    const fp_t inv = fp_inverse(prow[c], p);
    if (inv != 1)
      for (std::size_t k = c; k < cols; ++k) prow[k] = static_cast<fp_t>((prow[k] * inv) % pp);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      fp_t* row = m.row_data(i);
      const fp_t f = row[c];
      if (!f) continue;
      const fp_t g = pp - f;
      for (std::size_t k = c; k < cols; ++k)
        if (prow[k]) row[k] = static_cast<fp_t>((row[k] + g * prow[k]) % pp);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.rank = r;
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const FpMatrix& m) {
  // Eliminate on the shorter side.
  if (m.rows() > m.cols()) return rref(m.transpose()).rank;
  return rref(m).rank;
}

Subspace::Subspace(int p, std::size_t ambient) : p_(p), ambient_(ambient), basis_(p, 0, ambient) {}

Subspace Subspace::span_rows(const FpMatrix& rows) {
  Subspace s(rows.p(), rows.cols());
  RrefResult rr = rref(rows);
  s.basis_ = rr.reduced.sub(0, 0, rr.rank, rows.cols());
  s.pivots_ = std::move(rr.pivots);
  return s;
}

Subspace Subspace::span_columns(const FpMatrix& cols) { return span_rows(cols.transpose()); }

Subspace Subspace::whole(int p, std::size_t ambient) { return span_rows(FpMatrix::identity(p, ambient)); }

FpVector Subspace::coordinates(const FpVector& v) const {
  FpVector c(dim());
  for (std::size_t k = 0; k < pivots_.size(); ++k) c[k] = v[pivots_[k]];
  return c;
}

bool Subspace::contains(const FpVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector dimension mismatch");
  FpVector residual = v;
  const auto pp = static_cast<fp_t>(p_);
  for (std::size_t k = 0; k < pivots_.size(); ++k) {
    const fp_t f = residual[pivots_[k]];
    if (!f) continue;
    const fp_t* b = basis_.row_data(k);
    for (std::size_t j = 0; j < ambient_; ++j) residual[j] = static_cast<fp_t>((residual[j] + (pp - f) * b[j]) % pp);
  }
  return std::all_of(residual.begin(), residual.end(), [](fp_t x) { return x == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t k = 0; k < other.dim(); ++k)
    if (!contains(other.basis().row(k))) return false;
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && basis_ == other.basis_;
}

Subspace kernel_basis(const FpMatrix& m) {
  RrefResult rr = rref(m);
  const std::size_t n = m.cols();
  std::vector<char> is_pivot(n, 0);
  for (auto c : rr.pivots) is_pivot[c] = 1;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  FpMatrix vecs(m.p(), free.size(), n);
  for (std::size_t f = 0; f < free.size(); ++f) {
    vecs.set(f, free[f], 1);
    for (std::size_t k = 0; k < rr.pivots.size(); ++k) vecs.set(f, rr.pivots[k], -static_cast<long long>(rr.reduced(k, free[f])));
  }
  return Subspace::span_rows(vecs);
}

Subspace image_basis(const FpMatrix& m) { return Subspace::span_columns(m); }

std::optional<FpVector> solve(const FpMatrix& m, const FpVector& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side dimension mismatch");
  FpMatrix aug(m.p(), m.rows(), m.cols() + 1);
  aug.set_block(0, 0, m);
  for (std::size_t r = 0; r < m.rows(); ++r) aug.set(r, m.cols(), b[r]);
  RrefResult rr = rref(aug);
  if (!rr.pivots.empty() && rr.pivots.back() == m.cols()) return std::nullopt;
  FpVector x(m.cols(), 0);
  for (std::size_t k = 0; k < rr.pivots.size(); ++k) x[rr.pivots[k]] = rr.reduced(k, m.cols());
  return x;
}

FpMatrix inverse(const FpMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = m.rows();
  FpMatrix aug(m.p(), n, 2 * n);
  aug.set_block(0, 0, m);
  aug.set_block(0, n, FpMatrix::identity(m.p(), n));
  RrefResult rr = rref(aug);
  if (rr.rank < n || (n > 0 && rr.pivots[n - 1] != n - 1)) throw std::domain_error("singular matrix");
  return rr.reduced.sub(0, n, n, n);
}

Subspace sum(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("ambient mismatch");
  return Subspace::span_rows(FpMatrix::vstack({u.basis(), v.basis()}, u.p(), u.ambient()));
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient() != v.ambient()) throw std::invalid_argument("ambient mismatch");
  // a U = b V  <=>  (a, b) in ker [U; -V]^T
  FpMatrix stacked = FpMatrix::vstack({u.basis(), v.basis().scaled(-1)}, u.p(), u.ambient());
  Subspace rel = kernel_basis(stacked.transpose());
  FpMatrix coeffs = rel.basis().sub(0, 0, rel.dim(), u.dim());
  return Subspace::span_rows(coeffs * u.basis());
}

FpMatrix quotient_map(const Subspace& u, const Subspace& w) {
  if (u.ambient() != w.ambient()) throw std::invalid_argument("ambient mismatch");
  if (!w.contains(u)) throw std::invalid_argument("quotient requires U contained in W");
  const int p = u.p();
  // Extend the basis of U by basis vectors of W, keeping those that increase the rank.
  Subspace acc = u;
  std::vector<FpMatrix> complement;
  for (std::size_t k = 0; k < w.dim(); ++k) {
    FpVector vec = w.basis().row(k);
    if (acc.contains(vec)) continue;
    FpMatrix row(p, 1, w.ambient());
    for (std::size_t j = 0; j < vec.size(); ++j) row.set(0, j, vec[j]);
    complement.push_back(row);
    acc = sum(acc, Subspace::span_rows(row));
  }
  FpMatrix basis = FpMatrix::vstack({u.basis(), FpMatrix::vstack(complement, p, w.ambient())}, p, w.ambient());
  // Coordinates in this basis only depend on W's pivot columns.
  const auto& piv = w.pivots();
  std::vector<int> all_rows(basis.rows());
  for (std::size_t r = 0; r < all_rows.size(); ++r) all_rows[r] = static_cast<int>(r);
  std::vector<int> piv_cols(piv.begin(), piv.end());
  FpMatrix square = basis.block(all_rows, piv_cols);
  FpMatrix coord = inverse(square).transpose();  // c = coord * w[piv]
  FpMatrix q(p, complement.size(), w.ambient());
  for (std::size_t r = 0; r < complement.size(); ++r)
    for (std::size_t k = 0; k < piv.size(); ++k) q.set(r, piv[k], coord(u.dim() + r, k));
  return q;
}

}  // namespace hookblock
