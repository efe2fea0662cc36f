#pragma once

#include <map>
#include <string>
#include <string_view>

#include <json.hpp>

namespace hookblock {

enum class Kind { Simple, Schur, Weyl };

// F_m, S_m or W_m of the hook block.
struct ObjectKind {
  Kind kind = Kind::Simple;
  int index = 0;

  std::string to_string() const;  // "F1"
  // Accepts "F:1", "F1", "S:0", "W:2".
  static ObjectKind parse(std::string_view text);
  auto operator<=>(const ObjectKind&) const = default;
};

char kind_letter(Kind k);
// Kuhn duality on labels: S <-> W, F fixed.
ObjectKind dual(ObjectKind x);

struct ExtTable {
  std::string source;
  std::string target;
  int p = 2;
  std::map<int, int> dims;  // nonzero entries only

  int at(int q) const;
  bool operator==(const ExtTable& other) const { return dims == other.dims; }
  nlohmann::json to_json() const;
};

}  // namespace hookblock
