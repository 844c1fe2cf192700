#include <cstdlib>
#include <iostream>
#include <sstream>

#include "dualcount/errors.hpp"
#include "run_config.hpp"

using namespace dualcount;
using cli::Format;
using cli::RunConfig;
using io::ordered_json;

namespace {

constexpr int kExitPass = 0, kExitUsage = 1, kExitFailed = 2, kExitUnsupported = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class T>
const T& need(const std::optional<T>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing ") + flag);
  return *v;
}

std::pair<int, int> n_range(const RunConfig& c, int default_max) {
  if (c.n) return {*c.n, *c.n};
  return {c.min_n.value_or(0), c.max_n.value_or(default_max)};
}

void emit(const RunConfig& c, const std::string& kind, const ordered_json& data, const std::string& text,
          const std::string& csv = "") {
  switch (c.format) {
    case Format::Json: std::cout << io::document(kind, data).dump(2) << "\n"; break;
    case Format::Csv:
      if (csv.empty()) throw UsageError("csv output is only available for row-shaped results");
      std::cout << csv;
      break;
    case Format::Text: std::cout << text; break;
  }
}

int cmd_count(const RunConfig& c) {
  const GroupSpec g = GroupSpec::parse(need(c.gamma, "--gamma"));
  const Family f = parse_family(need(c.target, "--target"));
  const auto [lo, hi] = n_range(c, 0);
  if (!c.n && !c.max_n) throw UsageError("count needs --n or --max-n");
  std::vector<io::CountRow> rows;
  std::ostringstream text;
  for (int n = lo; n <= hi; ++n) {
    rows.push_back({g.to_string(), to_string(f), n, count_homs(g, {f, n})});
    text << (c.n ? "" : "n=" + std::to_string(n) + " ") << rows.back().count.get_str() << "\n";
  }
  emit(c, "count", io::count_rows(rows), text.str(), io::count_rows_csv(rows));
  return kExitPass;
}

int cmd_sectors(const RunConfig& c) {
  const GroupSpec g = GroupSpec::parse(c.gamma.value_or("Ohat"));
  const Family side = parse_family(c.side.value_or("Sp"));
  const auto [lo, hi] = n_range(c, 6);
  ordered_json rows = ordered_json::array();
  std::ostringstream text, csv;
  csv << "gamma,side,n,w,fixed,moved,dimV0,dimV1\n";
  for (int n = lo; n <= hi; ++n)
    for (int w : {0, 1}) {
      const SectorCount s = count_twisted(g, side, n, w);
      rows.push_back(io::sector_report(g.to_string(), to_string(side), n, s));
      text << "n=" << n << " w=" << w << " fixed=" << s.fixed << " moved=" << s.moved << " dimV0=" << s.dim_v0()
           << " dimV1=" << s.dim_v1() << "\n";
      csv << g.to_string() << ',' << to_string(side) << ',' << n << ',' << w << ',' << s.fixed << ',' << s.moved << ','
          << s.dim_v0() << ',' << s.dim_v1() << "\n";
    }
  emit(c, "sectors", rows, text.str(), csv.str());
  return kExitPass;
}

int cmd_irreps(const RunConfig& c) {
  const auto d = group_data(GroupSpec::parse(need(c.gamma, "--gamma")));
  std::ostringstream text, csv;
  csv << "name,dim,reality,partner,det,node\n";
  for (const auto& r : d->irreps()) {
    const std::string det = d->abelian().element_to_string(r.det_char);
    text << r.name << "  dim=" << r.dim << "  " << to_string(r.reality) << "  det=" << det
         << (r.partner ? "  partner=" + *r.partner : "") << "\n";
    csv << r.name << ',' << r.dim << ',' << to_string(r.reality) << ',' << r.partner.value_or("") << ",\"" << det
        << "\"," << r.node << "\n";
  }
  emit(c, "irreps", io::irrep_table(*d), text.str(), csv.str());
  return kExitPass;
}

int cmd_mckay(const RunConfig& c) {
  const GroupSpec g = GroupSpec::parse(need(c.gamma, "--gamma"));
  const McKayGraph graph = dualcount::mckay_graph(g);
  const AAction action = a_action(g);
  std::ostringstream text;
  text << graph.ade_type << " (affine node " << graph.node_names[graph.affine_node] << ")\n";
  for (int i = 0; i < graph.size(); ++i) text << "  " << graph.node_names[i] << " comark " << graph.comarks[i] << "\n";
  for (auto [i, j] : graph.edges()) text << "  " << graph.node_names[i] << " - " << graph.node_names[j] << "\n";
  emit(c, "mckay", io::mckay_graph(graph, action), text.str());
  return kExitPass;
}

int cmd_series(const RunConfig& c) {
  std::string source;
  if (c.expr) source = *c.expr;
  else if (c.refined) source = builtin_genfun_text(parse_refined_case(*c.refined));
  else source = builtin_genfun_text(GroupSpec::parse(need(c.gamma, "--gamma")), parse_family(c.side.value_or("Sp")));
  const GenExpr e = parse_genexpr(source);
  const int order = c.order.value_or(default_series_order());
  if (order > max_series_order()) throw UsageError("order above the maximum " + std::to_string(max_series_order()));
  const GaussSeries s = expand(e, order);
  ordered_json coeffs = ordered_json::array();
  std::ostringstream text, csv;
  text << to_string(e) << "\n";
  csv << "k,coefficient\n";
  for (int k = 0; k <= order; ++k) {
    coeffs.push_back(s[k].to_string());
    text << (k ? " " : "") << s[k].to_string();
    csv << k << ',' << s[k].to_string() << "\n";
  }
  text << "\n";
  emit(c, "series", {{"expression", to_string(e)}, {"order", order}, {"coefficients", coeffs}}, text.str(), csv.str());
  return kExitPass;
}

int cmd_zn(const RunConfig& c) {
  const std::string& name = need(c.pair, "--pair");
  const auto [lo, hi] = n_range(c, 6);
  for (const auto& pair : dual_pair_catalog(c.max_rank.value_or(8))) {
    if (pair.name != name) continue;
    ordered_json rows = ordered_json::array();
    std::ostringstream text;
    bool all = true;
    for (int n = std::max(lo, 1); n <= hi; ++n) {
      const auto r = zn_duality(pair, n);
      all = all && r.agree;
      rows.push_back(io::zn_result(pair.name, n, r));
      text << "n=" << n << " " << r.count << " " << r.dual_count << (r.agree ? "" : " MISMATCH") << "\n";
    }
    emit(c, "zn", rows, text.str());
    return all ? kExitPass : kExitFailed;
  }
  throw UsageError("no catalogued dual pair named '" + name + "'");
}

int cmd_smatrix(const RunConfig& c) {
  AffineOptions opt;
  opt.allow_e7 = c.enable_e7_smatrix;
  const std::string& type = need(c.type, "--type");
  const SMatrix m = dualcount::s_matrix(type, need(c.n, "--n"), opt);
  std::ostringstream text;
  for (const auto& row : m.s) {
    for (std::size_t j = 0; j < row.size(); ++j)
      text << (j ? "  " : "") << io::fixed(row[j].real(), 6) << (row[j].imag() < 0 ? "-" : "+")
           << io::fixed(std::abs(row[j].imag()), 6) << "i";
    text << "\n";
  }
  emit(c, "smatrix", io::s_matrix(m), text.str());
  return kExitPass;
}

int cmd_frep(const RunConfig& c) {
  const GroupSpec g = GroupSpec::parse(need(c.gamma, "--gamma"));
  const std::string side = c.side.value_or("SU");
  FSide s = side == "SU" ? FSide::SU : side == "Sp" ? FSide::Sp : side == "Spin" ? FSide::Spin : throw UsageError("side must be SU, Sp or Spin");
  const FRepCharacter f = f_rep_character(g, s, need(c.n, "--n"));
  std::ostringstream text;
  for (std::size_t z = 0; z < f.value.size(); ++z) {
    text << f.h1_labels[z] << ":";
    for (const auto& v : f.value[z]) text << " " << v.to_string();
    text << "\n";
  }
  emit(c, "frep", io::f_rep(f), text.str());
  return kExitPass;
}

int report_suite(const RunConfig& c, const SuiteResult& r, const std::string& kind) {
  std::ostringstream text, csv;
  csv << "name,pass\n";
  for (const auto& i : r.items) {
    text << (i.pass ? "PASS " : "FAIL ") << i.name << "\n";
    csv << '"' << i.name << "\"," << (i.pass ? "true" : "false") << "\n";
  }
  text << kind << ": " << r.items.size() - r.failures().size() << "/" << r.items.size() << " checks passed\n";
  emit(c, kind, r.to_json(), text.str(), csv.str());
  if (r.passed()) return kExitPass;
  if (c.format != Format::Json) {
    ordered_json failures = ordered_json::array();
    for (const auto* f : r.failures()) failures.push_back({{"name", f->name}, {"detail", f->detail}});
    std::cerr << failures.dump() << "\n";
  }
  return kExitFailed;
}

int cmd_prove(const RunConfig& c) {
  RunConfig v = c;
  need(c.prop, "--prop");
  return report_suite(c, suite_identities(cli::suite_config(v)), "prove");
}

int cmd_verify(const RunConfig& c) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), c.suite) == names.end()) throw UsageError("unknown suite '" + c.suite + "'");
  return report_suite(c, run_suite(c.suite, cli::suite_config(c)), "verify " + c.suite);
}

int dispatch(const RunConfig& c) {
  if (c.command == "count") return cmd_count(c);
  if (c.command == "sectors") return cmd_sectors(c);
  if (c.command == "irreps") return cmd_irreps(c);
  if (c.command == "mckay") return cmd_mckay(c);
  if (c.command == "series") return cmd_series(c);
  if (c.command == "prove") return cmd_prove(c);
  if (c.command == "zn") return cmd_zn(c);
  if (c.command == "smatrix") return cmd_smatrix(c);
  if (c.command == "frep") return cmd_frep(c);
  if (c.command == "verify") return cmd_verify(c);
  throw UsageError("unknown command '" + c.command + "'");
}

}  // namespace

int main(int argc, char** argv) {
  const auto parsed = cli::parse_args(std::vector<std::string>(argv + 1, argv + argc));
  if (!parsed.config) {
    (parsed.exit_code == 0 ? std::cout : std::cerr) << parsed.message << "\n";
    return parsed.exit_code == 0 ? kExitPass : kExitUsage;
  }
  try {
    return dispatch(*parsed.config);
  } catch (const Unsupported& e) {
    std::cerr << e.what() << "\n";
    return kExitUnsupported;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const VerificationFailure& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitFailed;
  }
}
