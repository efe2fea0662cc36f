// Acceptance runner: one PASS/FAIL line per criterion, exit status nonzero on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "hookblock/audits.hpp"
#include "hookblock/closed_forms.hpp"
#include "hookblock/complex_engine.hpp"
#include "hookblock/verify.hpp"
#include "hookblock/yoneda.hpp"

using namespace hookblock;

namespace {

struct Outcome {
  bool ok = true;
  std::vector<std::string> notes;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
  void require(const CheckReport& r, const std::string& what) {
    require(r.ok, what + (r.failures.empty() ? "" : ": " + r.failures.front()));
  }
};

const Kind kKinds[] = {Kind::Simple, Kind::Schur, Kind::Weyl};

Outcome oracle_equivalence() {
  Outcome out;
  for (int p : {2, 3})
    for (Kind a : kKinds)
      for (Kind b : kKinds)
        for (int m = 0; m < p; ++m)
          for (int n = 0; n < p; ++n) {
            const ObjectKind x{a, m}, y{b, n};
            const ExtTable got = ext_oracle(x, y, p, p, 2 * p);
            const std::string tag = "p=" + std::to_string(p) + " " + x.to_string() + "->" + y.to_string();
            out.require(got == ext_table(x, y, p), tag + " differs from closed form");
            for (int q = 2 * p - 1; q <= 2 * p; ++q) out.require(got.at(q) == 0, tag + " nonzero beyond 2p-2");
          }
  return out;
}

Outcome relation_suite() {
  Outcome out;
  for (int p : {2, 3, 5}) {
    const std::string tag = "p=" + std::to_string(p);
    out.require(relation_check(p, p), tag + " relations");
    const ComplexPtr k = koszul_complex(p, p);
    for (int m = k->lo(); m <= k->hi(); ++m) out.require(homology(*k, m) == 0, tag + " Koszul homology");
    const CartierReport c = cartier_kernel_check(p, p);
    out.require(c.ok && !c.dims.empty() && c.dims[0] == static_cast<std::size_t>(p), tag + " Cartier kernel");
    for (std::size_t i = 1; i < c.dims.size(); ++i) out.require(c.dims[i] == 0, tag + " Cartier kernel H>0");
  }
  return out;
}

Outcome resolution_suite() {
  Outcome out;
  for (int p : {2, 3, 5}) {
    const std::string tag = "p=" + std::to_string(p);
    auto hb = HookBlockModules::get(p, p);
    for (int i = 0; i < p; ++i) {
      const Resolution rs[] = {schur_injective_resolution(i, p, p), schur_projective_resolution(i, p, p),
                               weyl_projective_resolution(i, p, p), simple_injective_resolution(i, p, p),
                               simple_projective_resolution(i, p, p)};
      for (const Resolution& r : rs) {
        const ExactnessReport e = check_resolution(r);
        out.require(e.exact && e.augmentation_ok, tag + " " + r.complex->label() + " exactness");
      }
      if (p <= 3) {
        out.require(homology(*rs[0].complex, 0) == hb->schur(i).module->dim(), tag + " H0(T_i) = S_i");
        out.require(homology(*rs[3].complex, 0) == hb->simple(i).module->dim(), tag + " H0(Tot R_i) = F_i");
      }
    }
    if (p <= 3) out.require(cokernel_identification(p, p), tag + " cokernel identification");
  }
  return out;
}

Outcome yoneda_suite() {
  Outcome out;
  for (int p : {2, 3, 5}) {
    const std::string tag = "p=" + std::to_string(p);
    out.require(verify_product_tables(p, p), tag + " product tables");
    out.require(certify_non_null(p, p), tag + " non-null");
    out.require(formality_certificate(Family::Schur, p, p).check, tag + " formality schur");
    out.require(formality_certificate(Family::Simple, p, p).check, tag + " formality simple");
  }
  return out;
}

Outcome model_suite() {
  Outcome out;
  for (int p : {2, 3, 5, 7, 11}) {
    const std::string tag = "p=" + std::to_string(p);
    out.require(model_schur_yoneda(p).structure_check(), tag + " A structure");
    out.require(model_simple_yoneda(p).structure_check(), tag + " B structure");
    out.require(square_zero_check(p), tag + " square-zero extension");
    for (int i = 0; i < p; ++i) out.require(truncated_poly_iso(i, p), tag + " truncated polynomial");
    out.require(model_dimension_check(p), tag + " graded dimensions");
    if (p <= 3) {
      out.require(compare_model_oracle(Family::Schur, p, p), tag + " model vs oracle schur");
      out.require(compare_model_oracle(Family::Simple, p, p), tag + " model vs oracle simple");
    }
  }
  return out;
}

Outcome kl_suite() {
  Outcome out;
  for (int p : {2, 3, 5, 7}) out.require(kl_check(p), "p=" + std::to_string(p));
  return out;
}

Outcome combinatorics_suite() {
  Outcome out;
  for (int p : {2, 3, 5, 7, 11}) {
    VerifyOptions o;
    o.suite = "combinatorics";
    o.p = p;
    const VerificationReport r = run_verification(o);
    for (const CheckEntry& c : r.checks) {
      // The weight bound is required for p <= 7 only.
      if (c.id == "weight-bound" && p > 7) continue;
      out.require(c.status == CheckStatus::Pass, "p=" + std::to_string(p) + " " + c.id);
    }
  }
  return out;
}

Outcome decomposition_suite() {
  Outcome out;
  for (int p : {2, 3, 5, 7, 11}) {
    const auto d = decomposition_matrix(p);
    for (int l = 0; l < p; ++l)
      for (int m = 0; m < p; ++m)
        out.require(d[static_cast<std::size_t>(l)][static_cast<std::size_t>(m)] == ((m == l || m == l + 1) ? 1 : 0),
                    "p=" + std::to_string(p) + " bidiagonal pattern");
  }
  for (int p : {2, 3}) {
    const DecompositionDerivation dd = decomposition_from_characters(p, p);
    out.require(dd.check, "p=" + std::to_string(p) + " character derivation");
    out.require(dd.matrix == decomposition_matrix(p), "p=" + std::to_string(p) + " derived matrix");
    auto hb = HookBlockModules::get(p, p);
    for (int j = 0; j < p; ++j) {
      const std::size_t next = j + 1 < p ? hb->simple(j + 1).module->dim() : 0;
      out.require(hb->weyl(j)->dim() == hb->simple(j).module->dim() + next, "p=" + std::to_string(p) + " dim W_j");
    }
  }
  return out;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"oracle matches closed-form Ext tables (p = 2, 3)", oracle_equivalence},
      {"relation suite (p = 2, 3, 5)", relation_suite},
      {"resolution suite (p = 2, 3; exactness at p = 5)", resolution_suite},
      {"Yoneda products, non-nullity and formality (p = 2, 3, 5)", yoneda_suite},
      {"algebra models (p <= 11; oracle comparison p <= 3)", model_suite},
      {"Kazhdan-Lusztig parity and sum identity (p <= 7)", kl_suite},
      {"combinatorics on sampled cores (p <= 11)", combinatorics_suite},
      {"decomposition matrices (pattern p <= 11; derivation p <= 3)", decomposition_suite},
  };
  bool all = true;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.ok;
    std::cout << "criterion " << k + 1 << ": " << (o.ok ? "PASS" : "FAIL") << "  " << criteria[k].first << "  ("
              << static_cast<long>(secs * 1000) << " ms)\n";
    for (const std::string& n : o.notes) std::cout << "    " << n << '\n';
  }
  return all ? 0 : 1;
}
