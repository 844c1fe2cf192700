#pragma once

#include <string>
#include <vector>

#include "dualcount/grouprep.hpp"

namespace dualcount::detail {

/// Raw table data for one group before validation.
struct TableSpec {
  std::vector<std::string> names;
  std::vector<int> dims;
  std::vector<Reality> declared_reality;
  std::vector<std::string> det_names;
  CharacterTable table;
  std::vector<int> abelian_factors;
  std::vector<std::string> abelian_generators;
  std::vector<Cyclotomic> defining;
};

TableSpec build_table(const GroupSpec& g);

}  // namespace dualcount::detail
