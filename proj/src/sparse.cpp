#include "hookblock/sparse.hpp"

#include <algorithm>
#include <stdexcept>

namespace hookblock {

SpMatrix::SpMatrix(int p, std::size_t rows, std::size_t cols) : p_(p), rows_(rows), cols_(cols), data_(rows) {}

SpMatrix::SpMatrix(int p, std::size_t rows, std::size_t cols, const std::vector<Triplet>& triplets)
    : SpMatrix(p, rows, cols) {
  std::vector<std::vector<std::pair<std::uint32_t, long long>>> raw(rows);
  for (const Triplet& t : triplets) {
    if (t.row >= rows || t.col >= cols) throw std::out_of_range("triplet outside matrix");
    raw[t.row].emplace_back(static_cast<std::uint32_t>(t.col), t.value);
  }
  for (std::size_t r = 0; r < rows; ++r) {
    auto& src = raw[r];
    std::sort(src.begin(), src.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    auto& dst = data_[r];
    for (std::size_t k = 0; k < src.size();) {
      long long acc = 0;
      std::size_t j = k;
      while (j < src.size() && src[j].first == src[k].first) acc += src[j++].second;
      const fp_t v = fp_reduce(acc, p);
      if (v) dst.emplace_back(src[k].first, v);
      k = j;
    }
  }
}

SpMatrix SpMatrix::from_dense(const FpMatrix& m) {
  SpMatrix s(m.p(), m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    const fp_t* row = m.row_data(r);
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (row[c]) s.data_[r].emplace_back(static_cast<std::uint32_t>(c), row[c]);
  }
  return s;
}

SpMatrix SpMatrix::identity(int p, std::size_t n) {
  SpMatrix s(p, n, n);
  for (std::size_t r = 0; r < n; ++r) s.data_[r].emplace_back(static_cast<std::uint32_t>(r), 1);
  return s;
}

std::size_t SpMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& row : data_) n += row.size();
  return n;
}

fp_t SpMatrix::at(std::size_t r, std::size_t c) const {
  const auto& row = data_[r];
  auto it = std::lower_bound(row.begin(), row.end(), static_cast<std::uint32_t>(c),
                             [](const Entry& e, std::uint32_t col) { return e.first < col; });
  return (it != row.end() && it->first == c) ? it->second : 0;
}

FpMatrix SpMatrix::to_dense() const {
  FpMatrix m(p_, rows_, cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto [c, v] : data_[r]) m.set(r, c, v);
  return m;
}

FpMatrix SpMatrix::block(const std::vector<int>& row_idx, const std::vector<int>& col_idx) const {
  FpMatrix out(p_, row_idx.size(), col_idx.size());
  if (col_idx.empty()) return out;
  std::vector<int> where(cols_, -1);
  for (std::size_t k = 0; k < col_idx.size(); ++k) where[static_cast<std::size_t>(col_idx[k])] = static_cast<int>(k);
  for (std::size_t r = 0; r < row_idx.size(); ++r)
    for (auto [c, v] : data_[static_cast<std::size_t>(row_idx[r])])
      if (where[c] >= 0) out.set(r, static_cast<std::size_t>(where[c]), v);
  return out;
}

FpMatrix SpMatrix::block(std::size_t row0, std::size_t col0, std::size_t nrows, std::size_t ncols) const {
  FpMatrix out(p_, nrows, ncols);
  for (std::size_t r = 0; r < nrows; ++r)
    for (auto [c, v] : data_[row0 + r])
      if (c >= col0 && c < col0 + ncols) out.set(r, c - col0, v);
  return out;
}

SpMatrix SpMatrix::operator*(const SpMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("sparse product dimension mismatch");
  SpMatrix out(p_, rows_, other.cols_);
  std::vector<std::uint64_t> acc(other.cols_, 0);
  std::vector<char> touched(other.cols_, 0);
  std::vector<std::uint32_t> cols;
  const auto pp = static_cast<std::uint64_t>(p_);
  for (std::size_t i = 0; i < rows_; ++i) {
    cols.clear();
    for (auto [k, a] : data_[i])
      for (auto [j, b] : other.data_[k]) {
        if (!touched[j]) {
          touched[j] = 1;
          cols.push_back(j);
        }
        acc[j] += static_cast<std::uint64_t>(a) * b;
      }
    std::sort(cols.begin(), cols.end());
    for (auto j : cols) {
      const auto v = static_cast<fp_t>(acc[j] % pp);
      if (v) out.data_[i].emplace_back(j, v);
      acc[j] = 0;
      touched[j] = 0;
    }
  }
  return out;
}

namespace {

SpMatrix combine(const SpMatrix& a, const SpMatrix& b, long long sign) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("sparse sum dimension mismatch");
  std::vector<Triplet> t;
  a.emit(t, 0, 0);
  const SpMatrix bs = b.scaled(sign);
  bs.emit(t, 0, 0);
  return SpMatrix(a.p(), a.rows(), a.cols(), t);
}

}  // namespace

SpMatrix SpMatrix::operator+(const SpMatrix& other) const { return combine(*this, other, 1); }
SpMatrix SpMatrix::operator-(const SpMatrix& other) const { return combine(*this, other, -1); }

SpMatrix SpMatrix::scaled(long long k) const {
  SpMatrix out(p_, rows_, cols_);
  const fp_t f = fp_reduce(k, p_);
  if (!f) return out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto [c, v] : data_[r])
      out.data_[r].emplace_back(c, static_cast<fp_t>((static_cast<std::uint64_t>(v) * f) % static_cast<std::uint64_t>(p_)));
  return out;
}

SpMatrix SpMatrix::transpose() const {
  SpMatrix out(p_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto [c, v] : data_[r]) out.data_[c].emplace_back(static_cast<std::uint32_t>(r), v);
  return out;
}

bool SpMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const auto& row) { return row.empty(); });
}

bool SpMatrix::operator==(const SpMatrix& other) const {
  return p_ == other.p_ && rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

void SpMatrix::emit(std::vector<Triplet>& out, std::size_t row0, std::size_t col0) const {
  for (std::size_t r = 0; r < rows_; ++r)
    for (auto [c, v] : data_[r]) out.push_back({row0 + r, col0 + c, static_cast<long long>(v)});
}

}  // namespace hookblock
