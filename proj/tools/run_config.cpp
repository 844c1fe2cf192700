#include <CLI11.hpp>

#include "run_config.hpp"

namespace dualcount::cli {

namespace {

const std::vector<std::string> kCommands{"count", "sectors", "irreps", "mckay", "series", "prove",
                                         "zn",    "smatrix", "frep",   "verify"};

void add_common(CLI::App& sub, RunConfig& c) {
  sub.add_option("--gamma", c.gamma, "group: Z:<n>, Dhat:<m>, That, Ohat, Ihat");
  sub.add_option("--target", c.target, "target family: U SU PU Sp O_odd SO_odd Spin_odd PSp");
  sub.add_option("--side", c.side, "side of a generating function or F-representation");
  sub.add_option("--n", c.n, "single rank or level")->check(CLI::NonNegativeNumber);
  sub.add_option("--min-n", c.min_n, "start of the n range")->check(CLI::NonNegativeNumber);
  sub.add_option("--max-n", c.max_n, "end of the n range")->check(CLI::NonNegativeNumber);
  sub.add_option("--max-rank", c.max_rank, "largest rank in the dual pair catalog")->check(CLI::PositiveNumber);
  sub.add_option("--order", c.order, "series truncation order")->check(CLI::NonNegativeNumber);
  sub.add_option("--pair", c.pair, "sp-so, su-pu, psp-spin, or a catalogued dual pair name");
  sub.add_option("--type", c.type, "affine type such as A2, D4, E6");
  sub.add_option("--prop", c.prop, "identity family: KF1 KF2 KF3 KF4 PropA PropX PropY");
  sub.add_option("--params", c.params, "identity parameters, groups separated by ';'");
  sub.add_option("--expr", c.expr, "generating-function expression");
  sub.add_option("--refined", c.refined, "refined case: Y00-Sp Y00-Spin Y01-Sp Y01-Spin Y11-Spin");
  sub.add_option("--random", c.random, "random identity tuples per family")->check(CLI::NonNegativeNumber);
  sub.add_option("--seed", c.seed, "seed for random tuples");
  sub.add_flag("--enable-e7-smatrix", c.enable_e7_smatrix, "allow the E7 S-matrix");
  sub.add_option("--format", c.format, "json, csv or text")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}},
          CLI::ignore_case));
}

}  // namespace

std::string to_string(Format f) {
  switch (f) {
    case Format::Text: return "text";
    case Format::Json: return "json";
    case Format::Csv: return "csv";
  }
  return "text";
}

ParseOutcome parse_args(const std::vector<std::string>& args) {
  RunConfig c;
  CLI::App app{"Counting homomorphisms from finite subgroups of SU(2) into Langlands dual groups", "dualcount"};
  app.require_subcommand(1);
  for (const auto& name : kCommands) {
    auto* sub = app.add_subcommand(name);
    add_common(*sub, c);
    if (name == "verify")
      sub->add_option("suite", c.suite, "duality refined identities zn-lattice smatrix oracle")->required();
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {std::nullopt, 0, app.help()};
  } catch (const CLI::CallForAllHelp&) {
    return {std::nullopt, 0, app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::ParseError& e) {
    std::string where;
    for (auto* sub : app.get_subcommands()) where = sub->get_name();
    return {std::nullopt, 1, std::string(e.what()) + (where.empty() ? "" : " (in '" + where + "')")};
  }
  c.command = app.get_subcommands().front()->get_name();
  return {c, 0, ""};
}

std::vector<std::string> to_args(const RunConfig& c) {
  std::vector<std::string> a{c.command};
  if (c.command == "verify") a.push_back(c.suite);
  auto opt = [&](const char* flag, const auto& v) {
    if (!v) return;
    a.push_back(flag);
    if constexpr (std::is_same_v<std::decay_t<decltype(*v)>, std::string>) a.push_back(*v);
    else a.push_back(std::to_string(*v));
  };
  opt("--gamma", c.gamma);
  opt("--target", c.target);
  opt("--side", c.side);
  opt("--n", c.n);
  opt("--min-n", c.min_n);
  opt("--max-n", c.max_n);
  opt("--max-rank", c.max_rank);
  opt("--order", c.order);
  opt("--pair", c.pair);
  opt("--type", c.type);
  opt("--prop", c.prop);
  opt("--params", c.params);
  opt("--expr", c.expr);
  opt("--refined", c.refined);
  opt("--random", c.random);
  opt("--seed", c.seed);
  if (c.enable_e7_smatrix) a.push_back("--enable-e7-smatrix");
  a.push_back("--format");
  a.push_back(to_string(c.format));
  return a;
}

SuiteConfig suite_config(const RunConfig& c) {
  SuiteConfig s;
  if (c.gamma) s.gamma = GroupSpec::parse(*c.gamma);
  s.pair = c.pair;
  s.n = c.n;
  s.max_n = c.max_n;
  s.max_rank = c.max_rank;
  s.type = c.type;
  if (c.prop) s.prop = parse_identity(*c.prop);
  s.params = c.params;
  s.random_tuples = c.random.value_or(0);
  if (c.seed) s.seed = *c.seed;
  s.enable_e7 = c.enable_e7_smatrix;
  return s;
}

}  // namespace dualcount::cli
