#include <charconv>
#include <stdexcept>

#include "dualcount/grouprep.hpp"

namespace dualcount {

GroupSpec GroupSpec::cyclic(int n) {
  if (n < 1) throw std::invalid_argument("cyclic group order must be at least 1");
  return {GroupKind::Cyclic, n};
}

GroupSpec GroupSpec::binary_dihedral(int m) {
  if (m < 2) throw std::invalid_argument("binary dihedral parameter must be at least 2");
  return {GroupKind::BinaryDihedral, m};
}

namespace {
int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("bad group spec: " + std::string(whole));
  return v;
}
}  // namespace

GroupSpec GroupSpec::parse(std::string_view text) {
  if (text == "That") return tetrahedral();
  if (text == "Ohat") return octahedral();
  if (text == "Ihat") return icosahedral();
  if (text.starts_with("Z:")) return cyclic(parse_int(text.substr(2), text));
  if (text.starts_with("Dhat:")) return binary_dihedral(parse_int(text.substr(5), text));
  throw std::invalid_argument("bad group spec: " + std::string(text) + " (expected Z:n, Dhat:m, That, Ohat or Ihat)");
}

std::string GroupSpec::to_string() const {
  switch (kind) {
    case GroupKind::Cyclic: return "Z:" + std::to_string(param);
    case GroupKind::BinaryDihedral: return "Dhat:" + std::to_string(param);
    case GroupKind::BinaryTetrahedral: return "That";
    case GroupKind::BinaryOctahedral: return "Ohat";
    case GroupKind::BinaryIcosahedral: return "Ihat";
  }
  return "?";
}

int GroupSpec::order() const {
  switch (kind) {
    case GroupKind::Cyclic: return param;
    case GroupKind::BinaryDihedral: return 4 * param;
    case GroupKind::BinaryTetrahedral: return 24;
    case GroupKind::BinaryOctahedral: return 48;
    case GroupKind::BinaryIcosahedral: return 120;
  }
  return 0;
}

std::string GroupSpec::ade_type() const {
  switch (kind) {
    case GroupKind::Cyclic: return "A" + std::to_string(param - 1);
    case GroupKind::BinaryDihedral: return "D" + std::to_string(param + 2);
    case GroupKind::BinaryTetrahedral: return "E6";
    case GroupKind::BinaryOctahedral: return "E7";
    case GroupKind::BinaryIcosahedral: return "E8";
  }
  return "?";
}

std::string to_string(Reality r) {
  switch (r) {
    case Reality::StrictlyReal: return "strictly_real";
    case Reality::Pseudoreal: return "pseudoreal";
    case Reality::ComplexPair: return "complex";
  }
  return "?";
}

}  // namespace dualcount
