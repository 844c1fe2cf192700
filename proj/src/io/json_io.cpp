#include <cstdio>
#include <sstream>

#include "dualcount/json_io.hpp"

namespace dualcount::io {

namespace {

ordered_json element(const FiniteAbelianGroup::Element& a) { return ordered_json(a); }

ordered_json complex_pair(std::complex<double> z) {
  // -0 and 0 must print alike for byte-stable output.
  auto clean = [](double x) { return std::abs(x) < 5e-13 ? 0.0 : x; };
  return ordered_json::array({fixed(clean(z.real())), fixed(clean(z.imag()))});
}

}  // namespace

ordered_json document(const std::string& kind, ordered_json data) {
  ordered_json out;
  out["schema_version"] = kSchemaVersion;
  out["kind"] = kind;
  out["data"] = std::move(data);
  return out;
}

std::string fixed(double x, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, x);
  std::string s = buf;
  if (s.find_first_not_of("-0.") == std::string::npos) return std::string("0.") + std::string(digits, '0');
  return s;
}

ordered_json cyclotomic(const Cyclotomic& c) {
  if (auto v = c.as_integer()) return *v;
  return c.to_string();
}

ordered_json irrep_table(const GroupData& d) {
  ordered_json irreps = ordered_json::array();
  for (const auto& r : d.irreps()) {
    ordered_json row;
    row["name"] = r.name;
    row["dim"] = r.dim;
    row["reality"] = to_string(r.reality);
    row["partner"] = r.partner ? ordered_json(*r.partner) : ordered_json(nullptr);
    row["det"] = element(r.det_char);
    row["node"] = r.node;
    irreps.push_back(std::move(row));
  }
  ordered_json out;
  out["group"] = d.spec().to_string();
  out["order"] = d.order();
  out["abelianization_dual"] = d.abelian().factors();
  out["irreps"] = std::move(irreps);
  return out;
}

ordered_json mckay_graph(const McKayGraph& graph, const AAction& action) {
  ordered_json nodes = ordered_json::array();
  for (int i = 0; i < graph.size(); ++i) nodes.push_back({{"irrep", graph.node_names[i]}, {"comark", graph.comarks[i]}});
  ordered_json edges = ordered_json::array();
  for (auto [i, j] : graph.edges()) edges.push_back({i, j});
  ordered_json act = ordered_json::object();
  for (std::size_t k = 0; k < action.elements.size(); ++k) act[action.labels[k]] = action.permutation[k];
  ordered_json out;
  out["ade_type"] = graph.ade_type;
  out["affine_node"] = graph.affine_node;
  out["nodes"] = std::move(nodes);
  out["edges"] = std::move(edges);
  out["a_action"] = std::move(act);
  return out;
}

ordered_json count_rows(const std::vector<CountRow>& rows) {
  ordered_json out = ordered_json::array();
  for (const auto& r : rows)
    out.push_back({{"gamma", r.gamma}, {"target", r.target}, {"n", r.n}, {"count", r.count.get_str()}});
  return out;
}

std::string count_rows_csv(const std::vector<CountRow>& rows) {
  std::ostringstream os;
  os << "gamma,target,n,count\n";
  for (const auto& r : rows) os << r.gamma << ',' << r.target << ',' << r.n << ',' << r.count.get_str() << '\n';
  return os.str();
}

ordered_json sector_report(const std::string& gamma, const std::string& side, int n, const SectorCount& s) {
  ordered_json out;
  out["gamma"] = gamma;
  out["side"] = side;
  out["n"] = n;
  out["w"] = s.w;
  out["fixed"] = s.fixed.get_str();
  out["moved"] = s.moved.get_str();
  out["dimV0"] = s.dim_v0().get_str();
  out["dimV1"] = s.dim_v1().get_str();
  return out;
}

ordered_json proof_report(const ProofReport& r) {
  ordered_json out;
  out["identity"] = to_string(r.identity);
  out["params"] = to_string(r.params);
  out["method"] = r.method;
  out["degree_or_order"] = r.degree_or_order;
  out["verdict"] = r.verdict;
  return out;
}

ordered_json zn_result(const std::string& pair, int n, const ZnDualityResult& r) {
  ordered_json out;
  out["pair"] = pair;
  out["n"] = n;
  out["count"] = r.count.get_str();
  out["dual_count"] = r.dual_count.get_str();
  out["agree"] = r.agree;
  return out;
}

ordered_json s_matrix(const SMatrix& m) {
  ordered_json weights = ordered_json::array();
  for (const auto& w : m.weights.weights) weights.push_back(w);
  ordered_json rows = ordered_json::array();
  for (const auto& row : m.s) {
    ordered_json r = ordered_json::array();
    for (auto z : row) r.push_back(complex_pair(z));
    rows.push_back(std::move(r));
  }
  ordered_json out;
  out["type"] = m.weights.type;
  out["level"] = m.weights.level;
  out["nodes"] = m.weights.node_names;
  out["weights"] = std::move(weights);
  out["s"] = std::move(rows);
  return out;
}

ordered_json conjugation_report(const ConjugationReport& r) {
  ordered_json out;
  out["type"] = r.type;
  out["level"] = r.level;
  out["holds"] = r.holds;
  out["identification"] = r.identifications;
  // Exponent form keeps tiny errors readable and stable.
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r.max_abs_error);
  out["max_abs_error"] = buf;
  return out;
}

ordered_json f_rep(const FRepCharacter& f) {
  ordered_json values = ordered_json::array();
  for (const auto& row : f.value) {
    ordered_json r = ordered_json::array();
    for (const auto& c : row) r.push_back(cyclotomic(c));
    values.push_back(std::move(r));
  }
  ordered_json dims = ordered_json::array();
  for (const auto& d : f.sector_dims) dims.push_back(d.get_str());
  ordered_json out;
  out["gamma"] = f.gamma;
  out["side"] = f.side;
  out["n"] = f.n;
  out["h1"] = f.h1_labels;
  out["h2_dual"] = f.h2_dual_labels;
  out["value"] = std::move(values);
  out["sector_dims"] = std::move(dims);
  return out;
}

}  // namespace dualcount::io
