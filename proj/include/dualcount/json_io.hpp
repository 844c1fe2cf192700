#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dualcount/affine.hpp"
#include "dualcount/counting.hpp"
#include "dualcount/grouprep.hpp"
#include "dualcount/lattice.hpp"
#include "dualcount/mckay.hpp"
#include "dualcount/series.hpp"

namespace dualcount::io {

using nlohmann::ordered_json;

/// Bumped whenever a documented shape in docs/schemas.md changes.
constexpr int kSchemaVersion = 1;

/// Wraps a payload as {"schema_version", "kind", "data"}.
ordered_json document(const std::string& kind, ordered_json data);

/// Formats a double with fixed precision so repeated runs are byte-identical.
std::string fixed(double x, int digits = 12);

ordered_json irrep_table(const GroupData& d);
ordered_json mckay_graph(const McKayGraph& graph, const AAction& action);

struct CountRow {
  std::string gamma;
  std::string target;
  int n = 0;
  mpz_class count;
};
ordered_json count_rows(const std::vector<CountRow>& rows);
std::string count_rows_csv(const std::vector<CountRow>& rows);

ordered_json sector_report(const std::string& gamma, const std::string& side, int n, const SectorCount& s);
ordered_json proof_report(const ProofReport& r);
ordered_json zn_result(const std::string& pair, int n, const ZnDualityResult& r);
ordered_json s_matrix(const SMatrix& m);
ordered_json conjugation_report(const ConjugationReport& r);
ordered_json f_rep(const FRepCharacter& f);

ordered_json cyclotomic(const Cyclotomic& c);

}  // namespace dualcount::io
