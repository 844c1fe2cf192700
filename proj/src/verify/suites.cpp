#include <algorithm>
#include <array>
#include <random>
#include <stdexcept>

#include "dualcount/errors.hpp"
#include "dualcount/suites.hpp"

namespace dualcount {

namespace {

using io::ordered_json;

SuiteItem item(std::string name, bool pass, ordered_json detail = ordered_json::object()) {
  return {std::move(name), pass, std::move(detail)};
}

int pick(const std::optional<int>& v, int fallback) { return v ? *v : fallback; }

std::vector<GroupSpec> gammas_or(const SuiteConfig& cfg, std::vector<GroupSpec> fallback) {
  if (cfg.gamma) return {*cfg.gamma};
  return fallback;
}

std::string gaussian_count(const GaussRational& c) {
  if (c.im != 0 || c.re.get_den() != 1) return c.to_string();
  return c.re.get_str();
}

}  // namespace

bool SuiteResult::passed() const {
  return std::all_of(items.begin(), items.end(), [](const SuiteItem& i) { return i.pass; });
}

std::vector<const SuiteItem*> SuiteResult::failures() const {
  std::vector<const SuiteItem*> out;
  for (const auto& i : items)
    if (!i.pass) out.push_back(&i);
  return out;
}

io::ordered_json SuiteResult::to_json() const {
  ordered_json list = ordered_json::array();
  for (const auto& i : items) {
    ordered_json row;
    row["name"] = i.name;
    row["pass"] = i.pass;
    row["detail"] = i.detail;
    list.push_back(std::move(row));
  }
  ordered_json failures_list = ordered_json::array();
  for (const auto* f : failures()) failures_list.push_back(f->name);
  ordered_json out;
  out["suite"] = suite;
  out["passed"] = passed();
  out["checks"] = items.size();
  out["failures"] = std::move(failures_list);
  out["items"] = std::move(list);
  return out;
}

std::vector<GroupSpec> standard_gammas() {
  std::vector<GroupSpec> out;
  for (int m = 1; m <= 12; ++m) out.push_back(GroupSpec::cyclic(m));
  for (int m = 2; m <= 6; ++m) out.push_back(GroupSpec::binary_dihedral(m));
  for (auto g : exceptional_gammas()) out.push_back(g);
  return out;
}

std::vector<GroupSpec> exceptional_gammas() {
  return {GroupSpec::tetrahedral(), GroupSpec::octahedral(), GroupSpec::icosahedral()};
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"duality", "refined", "identities", "zn-lattice", "smatrix", "oracle"};
  return names;
}

SuiteResult run_suite(const std::string& name, const SuiteConfig& cfg) {
  if (name == "duality") return suite_duality(cfg);
  if (name == "refined") return suite_refined(cfg);
  if (name == "identities") return suite_identities(cfg);
  if (name == "zn-lattice") return suite_zn_lattice(cfg);
  if (name == "smatrix") return suite_smatrix(cfg);
  if (name == "oracle") return suite_oracle(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteResult suite_duality(const SuiteConfig& cfg) {
  const std::string pair = cfg.pair.value_or("sp-so");
  Family left, right;
  std::vector<GroupSpec> gammas;
  int max_n;
  if (pair == "sp-so") {
    left = Family::Sp, right = Family::SO_odd, max_n = 12;
    gammas = gammas_or(cfg, standard_gammas());
  } else if (pair == "su-pu") {
    left = Family::SU, right = Family::PU, max_n = 10;
    gammas = gammas_or(cfg, standard_gammas());
  } else if (pair == "psp-spin") {
    left = Family::PSp, right = Family::Spin_odd, max_n = 10;
    gammas = gammas_or(cfg, exceptional_gammas());
  } else {
    throw std::invalid_argument("unknown pair '" + pair + "' (expected sp-so, su-pu or psp-spin)");
  }
  max_n = pick(cfg.max_n, max_n);
  SuiteResult r{"duality", {}};
  for (const auto& g : gammas)
    for (int n = pick(cfg.n, 0); n <= (cfg.n ? *cfg.n : max_n); ++n) {
      const mpz_class a = count_homs(g, {left, n});
      const mpz_class b = count_homs(g, {right, n});
      r.items.push_back(item(g.to_string() + " " + to_string(left) + "/" + to_string(right) + " n=" + std::to_string(n),
                             a == b, {{"gamma", g.to_string()}, {"n", n}, {to_string(left), a.get_str()},
                                      {to_string(right), b.get_str()}}));
    }
  return r;
}

SuiteResult suite_refined(const SuiteConfig& cfg) {
  const GroupSpec g = cfg.gamma.value_or(GroupSpec::octahedral());
  const int max_n = pick(cfg.max_n, g.kind == GroupKind::BinaryOctahedral ? 8 : 6);
  SuiteResult r{"refined", {}};
  for (int n = pick(cfg.n, 0); n <= (cfg.n ? *cfg.n : max_n); ++n) {
    const std::string N = " n=" + std::to_string(n);
    if (n >= 1) {
      const auto su = verify_swap_equivalence(g, DualPairKind::SU_PU, n);
      r.items.push_back(item(g.to_string() + " SU/PU swap" + N, su.equivalent,
                             {{"identifications", su.identifications}, {"detail", su.detail}}));
    }
    if (g.kind != GroupKind::BinaryOctahedral) continue;
    const SectorCount sp[2] = {count_twisted(g, Family::Sp, n, 0), count_twisted(g, Family::Sp, n, 1)};
    const SectorCount spin[2] = {count_twisted(g, Family::Spin_odd, n, 0), count_twisted(g, Family::Spin_odd, n, 1)};
    auto dim = [](const SectorCount& s, int e) { return e == 0 ? s.dim_v0() : s.dim_v1(); };
    for (int e = 0; e < 2; ++e)
      for (int m = 0; m < 2; ++m) {
        const mpz_class a = dim(sp[m], e), b = dim(spin[e], m);
        r.items.push_back(item("dim V^" + std::to_string(e) + "_" + std::to_string(m) + N, a == b,
                               {{"Sp", a.get_str()}, {"Spin", b.get_str()}}));
      }
    const auto swap = verify_swap_equivalence(g, DualPairKind::Sp_Spin, n);
    r.items.push_back(item(g.to_string() + " Sp/Spin swap" + N, swap.equivalent, {{"detail", swap.detail}}));
  }
  return r;
}

std::vector<std::pair<IdentityKind, IdentityParams>> reference_instantiations(int max_m) {
  std::vector<std::pair<IdentityKind, IdentityParams>> out;
  for (int m = 2; m <= max_m; ++m) out.push_back({IdentityKind::KF1, {{1}, {1}, {m / 2}, {1}}});
  out.push_back({IdentityKind::KF1, {{2}, {1, 2}, {2}, {1, 2}}});
  out.push_back({IdentityKind::KF1, {{4}, {1, 3, 2, 2}, {2}, {2, 4}}});
  for (int m = 1; m <= max_m; ++m) {
    std::vector<int> v{1};
    for (int j = 1; j <= m; ++j) v.push_back(2);
    for (int j = 1; j <= m; ++j) v.push_back(1);
    out.push_back({IdentityKind::KF2, {{2}, {1}, {m + 1, m}, v}});
  }
  out.push_back({IdentityKind::KF2, {{4}, {1, 2}, {1, 1}, {2, 1}}});
  for (int m = 2; m <= max_m; ++m) out.push_back({IdentityKind::KF3, {{1}, {m - 1, m - 1, 0, 0}, {2, 1}}});
  out.push_back({IdentityKind::KF4, {{1, 2}, {1}, {2}}});
  return out;
}

std::vector<IdentityParams> random_identity_params(IdentityKind id, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(id) * 0x9E3779B97F4A7C15ull));
  auto uni = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  auto values = [&](int len, int lo, int hi) {
    std::vector<int> v(len);
    for (auto& x : v) x = uni(lo, hi);
    return v;
  };
  std::vector<IdentityParams> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 200 * count) throw std::logic_error("random identity generator is stuck");
    IdentityParams p;
    switch (id) {
      case IdentityKind::KF1: {
        const int s = std::array{1, 2, 4}[uni(0, 2)];
        std::vector<int> k;
        if (s == 1) k = {uni(1, 3)};
        if (s == 2) k = {uni(1, 2), 0}, k[1] = k[0] + uni(1, 2);
        if (s == 4) {
          // k3 and k4 strictly between k1 and k2 keeps every pole degree positive.
          const int k1 = uni(1, 2), k2 = k1 + uni(2, 4), k3 = uni(k1 + 1, k2 - 1);
          k = {k1, k2, k3, k1 + k2 - k3};
        }
        const int l = uni(0, 3);
        p = {{s}, k, {l}, uni(0, 1) ? values(l, 1, 3) : std::vector<int>{uni(1, 3)}};
        break;
      }
      case IdentityKind::KF2: {
        const int s = uni(0, 1) ? 2 : 4;
        std::vector<int> k{uni(1, 2)};
        if (s == 4) k.push_back(k[0] + uni(1, 2));
        const int l0 = uni(0, 2), l1 = uni(0, 2);
        p = {{s}, k, {l0, l1}, uni(0, 1) ? values(l0 + l1, 1, 3) : values(2, 1, 3)};
        if (static_cast<int>(p[3].size()) == l0 + l1 && l0 + l1 == 2 && uni(0, 1)) p[3] = values(2, 1, 3);
        if (p[3].empty()) p[3] = values(2, 1, 3);
        break;
      }
      case IdentityKind::KF3: {
        std::vector<int> ls = values(4, 0, 2);
        int nonempty = 0;
        for (int l : ls) nonempty += l > 0;
        p = {{uni(1, 2)}, ls, values(nonempty, 1, 3)};
        break;
      }
      case IdentityKind::KF4: {
        const int k1 = uni(1, 2), k2 = k1 + uni(1, 2), l = uni(0, 2);
        p = {{k1, k2}, {l}, uni(0, 1) ? values(l, 1, 3) : std::vector<int>{uni(1, 3)}};
        break;
      }
      default: throw std::invalid_argument("random tuples exist only for KF1-KF4");
    }
    try {
      identity_sides(id, p);
    } catch (const std::invalid_argument&) {
      continue;
    }
    out.push_back(std::move(p));
  }
  return out;
}

SuiteResult suite_identities(const SuiteConfig& cfg) {
  SuiteResult r{"identities", {}};
  auto prove = [&](IdentityKind id, const IdentityParams& p) {
    const ProofReport rep = prove_identity(id, p);
    r.items.push_back(item(to_string(id) + " (" + to_string(p) + ")", rep.verdict, io::proof_report(rep)));
  };
  if (cfg.prop) {
    IdentityParams p = parse_identity_params(cfg.params.value_or(""));
    prove(*cfg.prop, p);
    return r;
  }
  for (const auto& [id, p] : reference_instantiations(pick(cfg.max_n, 8))) prove(id, p);
  for (auto id : {IdentityKind::PropA, IdentityKind::PropX, IdentityKind::PropY}) prove(id, {});
  if (cfg.random_tuples > 0)
    for (auto id : {IdentityKind::KF1, IdentityKind::KF2, IdentityKind::KF3, IdentityKind::KF4})
      for (const auto& p : random_identity_params(id, cfg.random_tuples, cfg.seed)) prove(id, p);
  return r;
}

SuiteResult suite_zn_lattice(const SuiteConfig& cfg) {
  SuiteResult r{"zn-lattice", {}};
  const int max_n = pick(cfg.max_n, 6);
  bool matched = false;
  for (const auto& pair : dual_pair_catalog(pick(cfg.max_rank, 8))) {
    if (cfg.pair && pair.name != *cfg.pair) continue;
    matched = true;
    for (int n = pick(cfg.n, 1); n <= (cfg.n ? *cfg.n : max_n); ++n) {
      const auto z = zn_duality(pair, n);
      r.items.push_back(item(pair.name + " n=" + std::to_string(n), z.agree, io::zn_result(pair.name, n, z)));
    }
  }
  if (cfg.pair && !matched) throw std::invalid_argument("no catalogued dual pair named '" + *cfg.pair + "'");
  return r;
}

SuiteResult suite_smatrix(const SuiteConfig& cfg) {
  SuiteResult r{"smatrix", {}};
  std::vector<std::pair<std::string, int>> cases;
  if (cfg.type) {
    for (int n = pick(cfg.n, 1); n <= (cfg.n ? *cfg.n : pick(cfg.max_n, 2)); ++n) cases.push_back({*cfg.type, n});
  } else {
    for (int k = 1; k <= 4; ++k)
      for (int n = 1; n <= pick(cfg.max_n, 4); ++n) cases.push_back({"A" + std::to_string(k), n});
    for (const char* t : {"D4", "D5", "E6"})
      for (int n = 1; n <= std::min(2, pick(cfg.max_n, 2)); ++n) cases.push_back({t, n});
  }
  AffineOptions opt;
  opt.allow_e7 = cfg.enable_e7;
  for (const auto& [type, n] : cases) {
    const auto rep = verify_s_conjugation(type, n, opt);
    const bool ok = rep.holds && rep.max_abs_error < 1e-9;
    r.items.push_back(item(type + " level " + std::to_string(n), ok, io::conjugation_report(rep)));
  }
  if (!cfg.type)
    for (int n = 1; n <= 6; ++n)
      r.items.push_back(item("A1 exact level " + std::to_string(n), a1_exact_conjugation(n)));
  return r;
}

SuiteResult suite_oracle(const SuiteConfig& cfg) {
  SuiteResult r{"oracle", {}};
  const int max_n = pick(cfg.max_n, 12);
  for (const auto& g : gammas_or(cfg, standard_gammas())) {
    for (Family side : {Family::Sp, Family::SO_odd}) {
      const GaussSeries s = expand(builtin_genfun(g, side), 2 * max_n + 1);
      for (int n = 0; n <= max_n; ++n) {
        const GaussRational c = s[side == Family::Sp ? 2 * n : 2 * n + 1];
        const mpz_class count = count_homs(g, {side, n});
        r.items.push_back(item("genfun " + g.to_string() + " " + to_string(side) + " n=" + std::to_string(n),
                               c == GaussRational(mpq_class(count)),
                               {{"series", gaussian_count(c)}, {"count", count.get_str()}}));
      }
    }
  }
  if (!cfg.gamma || cfg.gamma->kind == GroupKind::BinaryOctahedral) {
    const GroupSpec o = GroupSpec::octahedral();
    const int refined_max = std::min(max_n, 8);
    struct Case {
      RefinedCase c;
      Family side;
      int e, m;
    };
    for (const Case& k : {Case{RefinedCase::Y00_Sp, Family::Sp, 0, 0}, Case{RefinedCase::Y01_Sp, Family::Sp, 0, 1},
                          Case{RefinedCase::Y00_Spin, Family::Spin_odd, 0, 0},
                          Case{RefinedCase::Y01_Spin, Family::Spin_odd, 0, 1},
                          Case{RefinedCase::Y11_Spin, Family::Spin_odd, 1, 1}}) {
      const GaussSeries s = expand(builtin_genfun(k.c), 2 * refined_max + 1);
      for (int n = 0; n <= refined_max; ++n) {
        // Sp: sector m, eigenvalue e. Spin: sector e, eigenvalue m.
        const bool sp = k.side == Family::Sp;
        const SectorCount sc = count_twisted(o, k.side, n, sp ? k.m : k.e);
        const int eigen = sp ? k.e : k.m;
        const mpz_class dim = eigen == 0 ? sc.dim_v0() : sc.dim_v1();
        const GaussRational c = s[sp ? 2 * n : 2 * n + 1];
        r.items.push_back(item("genfun " + to_string(k.c) + " n=" + std::to_string(n), c == GaussRational(mpq_class(dim)),
                               {{"series", gaussian_count(c)}, {"count", dim.get_str()}}));
      }
    }
  }
  if (!cfg.gamma) {
    for (int k = 2; k <= 4; ++k)
      for (int n = 1; n <= std::min(max_n, 6); ++n) {
        const GroupSpec z = GroupSpec::cyclic(n);
        const auto a = cartan_data({RootType::A, k - 1});
        LatticeChoice coweights{"coweight", {}};
        for (int i = 0; i < k - 1; ++i) {
          IntVector e(k - 1, 0);
          e[i] = 1;
          coweights.extra.push_back(e);
        }
        const std::string tag = " k=" + std::to_string(k) + " n=" + std::to_string(n);
        const mpz_class su = weyl_orbit_count(a, {"coroot", {}}, n), pu = weyl_orbit_count(a, coweights, n);
        const mpz_class u = weyl_orbit_count(unitary_realization(k), n);
        const mpz_class hsu = count_homs(z, {Family::SU, k}), hpu = count_homs(z, {Family::PU, k}),
                        hu = count_homs(z, {Family::U, k});
        r.items.push_back(item("lattice SU" + tag, su == hsu, {{"orbits", su.get_str()}, {"homs", hsu.get_str()}}));
        r.items.push_back(item("lattice PU" + tag, pu == hpu, {{"orbits", pu.get_str()}, {"homs", hpu.get_str()}}));
        r.items.push_back(item("lattice U" + tag, u == hu, {{"orbits", u.get_str()}, {"homs", hu.get_str()}}));
      }
  }
  return r;
}

}  // namespace dualcount
