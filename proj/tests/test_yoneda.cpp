#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "hookblock/closed_forms.hpp"
#include "hookblock/yoneda.hpp"

using namespace hookblock;

TEST_SUITE("yoneda") {
  TEST_CASE("family names") {
    CHECK(family_name(Family::Schur) == "schur");
    CHECK(parse_family("simple") == Family::Simple);
    CHECK_THROWS(parse_family("weyl"));
  }

  TEST_CASE("family sizes match the models") {
    for (int p : {2, 3}) {
      CHECK(yoneda_family(Family::Schur, p, p).size() == model_schur_yoneda(p).dim());
      CHECK(yoneda_family(Family::Simple, p, p).size() == model_simple_yoneda(p).dim());
      for (const FamilyMap& f : yoneda_family(Family::Simple, p, p)) {
        CHECK(f.map.is_chain_map());
        CHECK(f.map.shift == f.degree);
      }
    }
  }

  TEST_CASE("product tables and non-nullity") {
    for (int p : {2, 3}) {
      const CheckReport t = verify_product_tables(p, p);
      CHECK_MESSAGE(t.ok, (t.failures.empty() ? "" : t.failures.front()));
      CHECK(certify_non_null(p, p).ok);
    }
  }

  TEST_CASE("formality certificates") {
    for (int p : {2, 3})
      for (Family f : {Family::Schur, Family::Simple}) {
        const FormalityReport r = formality_certificate(f, p, p);
        CHECK(r.check.ok);
        int total = 0;
        for (auto [t, d] : r.degree_dims) {
          CHECK(d.first == d.second);
          total += d.first;
        }
        const GradedAlgebraModel m = f == Family::Schur ? model_schur_yoneda(p) : model_simple_yoneda(p);
        CHECK(static_cast<std::size_t>(total) == m.dim());
      }
  }

  TEST_CASE("model against oracle") {
    for (int p : {2, 3}) {
      CHECK(compare_model_oracle(Family::Schur, p, p).ok);
      CHECK(compare_model_oracle(Family::Simple, p, p).ok);
    }
  }
}
