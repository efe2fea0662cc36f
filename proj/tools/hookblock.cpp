#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "hookblock/abacus.hpp"
#include "hookblock/blockmap.hpp"
#include "hookblock/closed_forms.hpp"
#include "hookblock/complex_engine.hpp"
#include "hookblock/lr_tableaux.hpp"
#include "hookblock/objects.hpp"
#include "hookblock/partitions.hpp"
#include "hookblock/verify.hpp"
#include "hookblock/yoneda.hpp"

using nlohmann::json;
using namespace hookblock;

namespace {

// Flag errors detected after parsing; reported with the subcommand usage.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

bool is_matrix(const json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const json& row : v)
    if (!row.is_array()) return false;
  return true;
}

// Flattens the JSON document into aligned "path  value" rows; matrices print row by row.
void flatten(const json& v, const std::string& path, std::vector<std::pair<std::string, std::string>>& rows) {
  if (v.is_object() && !v.empty()) {
    for (const auto& [k, child] : v.items()) flatten(child, path.empty() ? k : path + "." + k, rows);
  } else if (is_matrix(v)) {
    for (std::size_t r = 0; r < v.size(); ++r) {
      std::string line;
      for (const json& x : v[r]) line += (line.empty() ? "" : " ") + scalar_text(x);
      rows.emplace_back(path + "[" + std::to_string(r) + "]", line);
    }
  } else if (v.is_array() && !v.empty() && (v[0].is_object())) {
    for (std::size_t r = 0; r < v.size(); ++r) flatten(v[r], path + "[" + std::to_string(r) + "]", rows);
  } else if (v.is_array()) {
    std::string line;
    for (const json& x : v) line += (line.empty() ? "" : " ") + scalar_text(x);
    rows.emplace_back(path, line);
  } else {
    rows.emplace_back(path, scalar_text(v));
  }
}

std::string render_table(const json& doc) {
  std::vector<std::pair<std::string, std::string>> rows;
  flatten(doc, "", rows);
  std::size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  std::ostringstream out;
  for (const auto& [k, v] : rows) out << k << std::string(width - k.size() + 2, ' ') << v << '\n';
  return out.str();
}

void emit(const json& doc, const std::string& format) {
  if (format == "table")
    std::cout << render_table(doc);
  else
    std::cout << doc.dump(2) << '\n';
}

void check_prime(int p) {
  if (!is_prime(p)) throw UsageError("--p must be a prime, got " + std::to_string(p));
}

ObjectKind parse_hook_object(const std::string& text, int p) {
  ObjectKind x;
  try {
    x = ObjectKind::parse(text);
  } catch (const std::exception&) {
    throw UsageError("object must look like F:m, S:m or W:m, got '" + text + "'");
  }
  if (x.index < 0 || x.index >= p) throw UsageError("object index out of range 0.." + std::to_string(p - 1));
  return x;
}

Partition parse_partition(const std::string& text, const char* flag) {
  try {
    return Partition::parse(text);
  } catch (const std::exception&) {
    throw UsageError(std::string(flag) + " must be a partition literal such as 3,1,1 or 0");
  }
}

// "S:i" is the hook Schur functor S_i at p; "S:2,2" or "2,2" is the Schur functor of that partition.
Partition parse_theta_object(const std::string& text, int p) {
  std::string body = text;
  if (body.rfind("S:", 0) == 0) {
    body = body.substr(2);
    if (body.find(',') == std::string::npos) {
      const ObjectKind x = parse_hook_object(text, p);
      return hook_partition(HookIdx{p, x.index});
    }
  }
  return parse_partition(body, "--object");
}

json block_listing(int e, int p) {
  json list = json::array();
  for (const Block& b : blocks(e, p)) {
    json members = json::array();
    for (const Partition& m : b.members) members.push_back(m.to_string());
    list.push_back({{"core", b.label.core.to_string()}, {"weight", b.label.weight}, {"members", members}});
  }
  return json{{"e", e}, {"p", p}, {"blocks", list}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hook block of degree-p strict polynomial functors"};
  app.require_subcommand(1);
  app.failure_message(CLI::FailureMessage::help);

  int p = 2, n = 0, e = 0;
  std::uint64_t seed = 1;
  bool tier_override = false, use_oracle = false;
  std::string from, to, core = "0", object, suite = "all", format = "json", family;
  const auto add_p = [&](CLI::App* c) { c->add_option("--p", p, "prime p")->required(); };
  const auto add_format = [&](CLI::App* c) {
    c->add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  };

  CLI::App* ext = app.add_subcommand("ext", "Ext table between two hook-block objects");
  add_p(ext);
  ext->add_option("--from", from, "source object, e.g. F:1")->required();
  ext->add_option("--to", to, "target object, e.g. S:3")->required();
  ext->add_option("--n", n, "number of variables for --oracle (default p)");
  ext->add_flag("--oracle", use_oracle, "compute from resolutions instead of the closed form");
  ext->add_flag("--tier-override", tier_override, "allow the oracle beyond p = 3");
  add_format(ext);

  CLI::App* decomp = app.add_subcommand("decomp", "decomposition matrix [W_l : F_m]");
  add_p(decomp);
  add_format(decomp);

  CLI::App* yon = app.add_subcommand("yoneda", "Yoneda algebra model");
  yon->add_option("family", family, "schur or simple")->required()->check(CLI::IsMember({"schur", "simple"}));
  add_p(yon);
  add_format(yon);

  CLI::App* kl = app.add_subcommand("kl", "Kazhdan-Lusztig parity and sum identity");
  add_p(kl);
  add_format(kl);

  CLI::App* block = app.add_subcommand("block", "blocks of degree e, or the weight-1 block of a core");
  block->add_option("--e", e, "degree")->required();
  add_p(block);
  block->add_option("--core", core, "p-core partition literal");
  add_format(block);

  CLI::App* theta = app.add_subcommand("theta", "composition factors of a Schur functor induced from a core");
  add_p(theta);
  theta->add_option("--core", core, "p-core partition literal")->required();
  theta->add_option("--object", object, "S:i or a partition literal")->required();
  add_format(theta);

  CLI::App* abacus = app.add_subcommand("abacus", "abacus of a partition");
  add_p(abacus);
  abacus->add_option("--object", object, "partition literal")->required();
  add_format(abacus);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  add_p(verify);
  verify->add_option("--n", n, "number of variables (default p)");
  verify->add_option("--suite", suite, "suite")->check(
      CLI::IsMember({"combinatorics", "complexes", "oracle", "yoneda", "all"}));
  verify->add_option("--seed", seed, "seed for sampled cores");
  verify->add_flag("--tier-override", tier_override, "lift the oracle tier limit");
  add_format(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    return app.exit(err);
  }

  CLI::App* active = app.get_subcommands().front();
  try {
    check_prime(p);
    if (active == ext) {
      const ObjectKind x = parse_hook_object(from, p), y = parse_hook_object(to, p);
      if (!use_oracle) {
        emit(ext_table(x, y, p).to_json(), format);
      } else {
        if (p > 5 || (p > 3 && !tier_override)) throw UsageError("--oracle is limited to p <= 3 (p <= 5 with --tier-override)");
        const int nn = n == 0 ? p : n;
        if (nn < p) throw UsageError("--n must be at least p");
        emit(ext_oracle(x, y, p, nn, 2 * p).to_json(), format);
      }
    } else if (active == decomp) {
      emit(json{{"p", p}, {"matrix", decomposition_matrix(p)}}, format);
    } else if (active == yon) {
      const GradedAlgebraModel m = parse_family(family) == Family::Schur ? model_schur_yoneda(p) : model_simple_yoneda(p);
      emit(m.to_json(), format);
    } else if (active == kl) {
      const CheckReport r = kl_check(p);
      json ff = json::object();
      for (int j = 0; j < p; ++j)
        for (int i = 0; i < p; ++i) {
          const ExtTable t = ext_table(ObjectKind{Kind::Simple, j}, ObjectKind{Kind::Simple, i}, p);
          ff[t.source + "->" + t.target] = t.to_json()["dims"];
        }
      emit(json{{"p", p}, {"status", r.ok ? "pass" : "fail"}, {"failures", r.failures}, {"ext_FF", ff}}, format);
      if (!r.ok) return 1;
    } else if (active == block) {
      if (e < 1) throw UsageError("--e must be positive");
      if (block->count("--core") == 0) {
        emit(block_listing(e, p), format);
      } else {
        const Partition c = parse_partition(core, "--core");
        if (!is_p_core(c, p)) throw UsageError("--core must be a p-core");
        if (c.weight() + p != e) throw UsageError("--e must equal |core| + p for a weight-1 block");
        json doc = weight1_block_tables(c, p);
        doc["e"] = e;
        emit(doc, format);
      }
    } else if (active == theta) {
      const Partition c = parse_partition(core, "--core");
      if (!is_p_core(c, p)) throw UsageError("--core must be a p-core");
      const Partition nu = parse_theta_object(object, p);
      json factors = json::object();
      for (const auto& [mu, mult] : theta_multiplicities(c, nu, p)) factors[mu.to_string()] = mult;
      emit(json{{"p", p}, {"core", c.to_string()}, {"object", nu.to_string()}, {"factors", factors}}, format);
    } else if (active == abacus) {
      const Partition lambda = parse_partition(object, "--object");
      const CoreWeight cw = p_core_and_weight(lambda, p);
      const json doc{{"p", p},
                     {"partition", lambda.to_string()},
                     {"core", cw.core.to_string()},
                     {"weight", cw.weight},
                     {"quotientless", true}};
      if (format == "table")
        std::cout << abacus_diagram(lambda, p) << render_table(doc);
      else
        emit(doc, format);
    } else if (active == verify) {
      VerifyOptions o;
      o.suite = suite;
      o.p = p;
      o.n = n;
      o.seed = seed;
      o.tier_override = tier_override;
      VerificationReport r;
      try {
        r = run_verification(o);
      } catch (const std::domain_error& err) {
        throw UsageError(err.what());
      } catch (const std::invalid_argument& err) {
        throw UsageError(err.what());
      }
      emit(r.to_json(), format);
      return r.failed() ? 1 : 0;
    }
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n\n" << active->help();
    return 2;
  }
  return 0;
}
