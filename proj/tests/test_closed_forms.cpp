#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hookblock/closed_forms.hpp"

using namespace hookblock;

namespace {

// The nine Ext formulas, written out case by case.
std::map<int, int> reference_ext(Kind a, int m, Kind b, int n, int p) {
  std::map<int, int> out;
  const auto put = [&](int q) {
    if (q >= 0) out[q] = 1;
  };
  using K = Kind;
  if (a == K::Weyl && b == K::Schur) {
    if (m == n) put(0);
  } else if (a == K::Simple && b == K::Schur) {
    if (n >= m) put(n - m);
  } else if (a == K::Weyl && b == K::Simple) {
    if (m >= n) put(m - n);
  } else if (a == K::Simple && b == K::Simple) {
    for (int r = 0; r <= p - std::max(m, n) - 1; ++r) put(std::abs(m - n) + 2 * r);
  } else if (a == K::Schur && b == K::Schur) {
    if (n == m) put(0);
    if (n > m) {
      put(n - m - 1);
      put(n - m);
    }
  } else if (a == K::Weyl && b == K::Weyl) {
    if (n == m) put(0);
    if (n < m) {
      put(m - n - 1);
      put(m - n);
    }
  } else if (a == K::Schur && b == K::Simple) {
    if (m < n) put(n - m - 1);
    put(2 * p - m - n - 2);
  } else if (a == K::Simple && b == K::Weyl) {
    if (m > n) put(m - n - 1);
    put(2 * p - m - n - 2);
  } else {
    if (m == n) put(0);
    put(2 * p - m - n - 3);
    put(2 * p - m - n - 2);
  }
  return out;
}

const Kind kKinds[] = {Kind::Simple, Kind::Schur, Kind::Weyl};

}  // namespace

TEST_SUITE("closed_forms") {
  TEST_CASE("ext tables match the case formulas") {
    for (int p : {2, 3, 5, 7, 11})
      for (Kind a : kKinds)
        for (Kind b : kKinds)
          for (int m = 0; m < p; ++m)
            for (int n = 0; n < p; ++n) {
              const ExtTable t = ext_table(ObjectKind{a, m}, ObjectKind{b, n}, p);
              CHECK(t.dims == reference_ext(a, m, b, n, p));
              for (auto [q, d] : t.dims) CHECK(q <= 2 * p - 2);
            }
  }

  TEST_CASE("ext tables are symmetric under Kuhn duality") {
    for (int p : {2, 3, 5, 7, 11})
      for (Kind a : kKinds)
        for (Kind b : kKinds)
          for (int m = 0; m < p; ++m)
            for (int n = 0; n < p; ++n) {
              const ObjectKind x{a, m}, y{b, n};
              CHECK(ext_table(x, y, p).dims == ext_table(dual(y), dual(x), p).dims);
            }
  }

  TEST_CASE("worked ext examples and serialization") {
    const ExtTable fs = ext_table(ObjectKind::parse("F:1"), ObjectKind::parse("S:3"), 5);
    CHECK(fs.dims == std::map<int, int>{{2, 1}});
    CHECK(fs.to_json().dump() == R"({"dims":{"2":1},"from":"F1","p":5,"to":"S3"})");
    CHECK(ext_table(ObjectKind{Kind::Simple, 0}, ObjectKind{Kind::Simple, 0}, 3).dims ==
          std::map<int, int>{{0, 1}, {2, 1}, {4, 1}});
    CHECK(ext_table(ObjectKind{Kind::Schur, 0}, ObjectKind{Kind::Weyl, 0}, 3).dims ==
          std::map<int, int>{{0, 1}, {3, 1}, {4, 1}});
    CHECK(fs.at(2) == 1);
    CHECK(fs.at(0) == 0);
  }

  TEST_CASE("object labels") {
    CHECK(ObjectKind::parse("F:1").to_string() == "F1");
    CHECK(ObjectKind::parse("W2") == ObjectKind{Kind::Weyl, 2});
    CHECK(dual(ObjectKind{Kind::Schur, 1}) == ObjectKind{Kind::Weyl, 1});
    CHECK(dual(ObjectKind{Kind::Simple, 1}) == ObjectKind{Kind::Simple, 1});
    CHECK_THROWS(ObjectKind::parse("X:1"));
    CHECK_THROWS(ObjectKind::parse("F:"));
  }

  TEST_CASE("decomposition matrix is bidiagonal") {
    CHECK(decomposition_matrix(2) == std::vector<std::vector<int>>{{1, 1}, {0, 1}});
    CHECK(decomposition_matrix(3) == std::vector<std::vector<int>>{{1, 1, 0}, {0, 1, 1}, {0, 0, 1}});
    for (int p : {5, 7, 11}) {
      const auto d = decomposition_matrix(p);
      for (int l = 0; l < p; ++l) {
        int row_sum = 0;
        for (int m = 0; m < p; ++m) {
          row_sum += d[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)];
          CHECK(d[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] == ((m == l || m == l + 1) ? 1 : 0));
        }
        CHECK(row_sum == (l == p - 1 ? 1 : 2));
      }
    }
    CHECK_THROWS(decomposition_matrix(4));
  }

  TEST_CASE("Kazhdan-Lusztig checks") {
    for (int p : {2, 3, 5, 7}) CHECK(kl_check(p).ok);
    for (int i = 0; i < 11; ++i) CHECK(hook_length_function(i) == i);
    // Sum identity at p = 5, m = 1, n = 2: degrees 2i - 3 for i = 2, 3, 4.
    CHECK(ext_table(ObjectKind{Kind::Simple, 1}, ObjectKind{Kind::Simple, 2}, 5).dims ==
          std::map<int, int>{{1, 1}, {3, 1}, {5, 1}});
  }

  TEST_CASE("Yoneda algebra models") {
    for (int p : {2, 3, 5, 7, 11}) {
      const GradedAlgebraModel a = model_schur_yoneda(p), b = model_simple_yoneda(p);
      CHECK(a.structure_check().ok);
      CHECK(b.structure_check().ok);
      CHECK(a.dim() == static_cast<std::size_t>(p * p));
      CHECK(square_zero_check(p).ok);
      CHECK(model_dimension_check(p).ok);
      for (int i = 0; i < p; ++i) CHECK(truncated_poly_iso(i, p).ok);
      // Graded dimensions against sums of closed-form tables.
      std::map<int, int> want_a, want_b;
      for (int i = 0; i < p; ++i)
        for (int j = 0; j < p; ++j) {
          for (auto [q, d] : ext_table(ObjectKind{Kind::Schur, i}, ObjectKind{Kind::Schur, j}, p).dims) want_a[q] += d;
          for (auto [q, d] : ext_table(ObjectKind{Kind::Simple, i}, ObjectKind{Kind::Simple, j}, p).dims) want_b[q] += d;
        }
      CHECK(a.graded_dims() == want_a);
      CHECK(b.graded_dims() == want_b);
    }
  }

  TEST_CASE("model products") {
    const int p = 3;
    const GradedAlgebraModel a = model_schur_yoneda(p);
    for (int j = 0; j < p; ++j)
      for (int i = 0; i < j; ++i)
        for (int m = 0; m < p; ++m)
          for (int l = 0; l < m; ++l) {
            const auto prod = a.product(a.index(label_abar(m, l)), a.index(label_abar(j, i)));
            CHECK(prod.empty());
          }
    CHECK(a.product(a.index(label_a(2, 1)), a.index(label_a(1, 0))) == a.basis_vector(a.index(label_a(2, 0))));
    CHECK(a.product(a.index(label_a(2, 1)), a.index(label_a(2, 0))).empty());
    const GradedAlgebraModel b = model_simple_yoneda(p);
    CHECK(b.product(b.index(label_b(1, 1, 0)), b.index(label_b(1, 0, 1))) == b.basis_vector(b.index(label_b(2, 1, 1))));
    CHECK(b.product(b.index(label_b(1, 0, 1)), b.index(label_b(1, 1, 0))) == b.basis_vector(b.index(label_b(2, 0, 0))));
    // Beyond the degree bound the product vanishes: 2p - i - m - 2 = 2 for i = m = 1.
    CHECK(b.product(b.index(label_b(2, 1, 1)), b.index(label_b(2, 1, 1))).empty());
    // x = b^2[i,i] generates K[x]/(x^{p-i}).
    const auto x = b.basis_vector(b.index(label_b(2, 0, 0)));
    const auto x2 = b.multiply(x, x);
    CHECK(x2 == b.basis_vector(b.index(label_b(4, 0, 0))));
    CHECK(b.multiply(x2, x).empty());
    CHECK(b.multiply(b.unit(), x) == x);
    CHECK(a.to_json()["basis"].size() == a.dim());
  }
}
