#include "hookblock/objects.hpp"

#include <charconv>
#include <stdexcept>

namespace hookblock {

char kind_letter(Kind k) {
  switch (k) {
    case Kind::Simple: return 'F';
    case Kind::Schur: return 'S';
    case Kind::Weyl: return 'W';
  }
  return '?';
}

std::string ObjectKind::to_string() const { return std::string(1, kind_letter(kind)) + std::to_string(index); }

ObjectKind ObjectKind::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("malformed object label: " + std::string(text));
  ObjectKind out;
  switch (text.front()) {
    case 'F': out.kind = Kind::Simple; break;
    case 'S': out.kind = Kind::Schur; break;
    case 'W': out.kind = Kind::Weyl; break;
    default: throw std::invalid_argument("object kind must be F, S or W: " + std::string(text));
  }
  std::string_view rest = text.substr(1);
  if (!rest.empty() && rest.front() == ':') rest.remove_prefix(1);
  auto [end, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), out.index);
  if (rest.empty() || ec != std::errc() || end != rest.data() + rest.size() || out.index < 0)
    throw std::invalid_argument("malformed object index: " + std::string(text));
  return out;
}

ObjectKind dual(ObjectKind x) {
  if (x.kind == Kind::Schur) x.kind = Kind::Weyl;
  else if (x.kind == Kind::Weyl) x.kind = Kind::Schur;
  return x;
}

int ExtTable::at(int q) const {
  auto it = dims.find(q);
  return it == dims.end() ? 0 : it->second;
}

nlohmann::json ExtTable::to_json() const {
  nlohmann::json j;
  j["p"] = p;
  j["from"] = source;
  j["to"] = target;
  nlohmann::json d = nlohmann::json::object();
  for (auto [q, v] : dims) d[std::to_string(q)] = v;
  j["dims"] = d;
  return j;
}

}  // namespace hookblock
