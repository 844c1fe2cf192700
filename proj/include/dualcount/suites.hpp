#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dualcount/json_io.hpp"

namespace dualcount {

/// Options shared by the verification suites. Unset fields fall back to each suite's default sweep.
struct SuiteConfig {
  std::optional<GroupSpec> gamma;
  std::optional<std::string> pair;  // duality: sp-so | su-pu | psp-spin; zn-lattice: catalog name
  std::optional<int> n;
  std::optional<int> max_n;
  std::optional<int> max_rank;
  std::optional<std::string> type;  // smatrix: A3, D4, E6, ...
  std::optional<IdentityKind> prop;
  std::optional<std::string> params;
  int random_tuples = 0;
  std::uint64_t seed = 20240601;
  bool enable_e7 = false;
};

struct SuiteItem {
  std::string name;
  bool pass = false;
  io::ordered_json detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteItem> items;
  bool passed() const;
  std::vector<const SuiteItem*> failures() const;
  io::ordered_json to_json() const;
};

const std::vector<std::string>& suite_names();
/// Runs a named suite. Throws std::invalid_argument for an unknown name and Unsupported for
/// requests outside the developed scope.
SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg);

SuiteResult suite_duality(const SuiteConfig& cfg);
SuiteResult suite_refined(const SuiteConfig& cfg);
SuiteResult suite_identities(const SuiteConfig& cfg);
SuiteResult suite_zn_lattice(const SuiteConfig& cfg);
SuiteResult suite_smatrix(const SuiteConfig& cfg);
SuiteResult suite_oracle(const SuiteConfig& cfg);

/// Γ set of the duality sweeps: Z_m (1 ≤ m ≤ 12), D̂_m (2 ≤ m ≤ 6), T̂, Ô, Î.
std::vector<GroupSpec> standard_gammas();
std::vector<GroupSpec> exceptional_gammas();

/// The identity instantiations used for each built-in generating function, for m in [1, max_m].
std::vector<std::pair<IdentityKind, IdentityParams>> reference_instantiations(int max_m);
/// Random parameter tuples satisfying the side conditions of the given family.
std::vector<IdentityParams> random_identity_params(IdentityKind id, int count, std::uint64_t seed);

}  // namespace dualcount
