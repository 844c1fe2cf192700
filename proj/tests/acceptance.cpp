// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "dualcount/affine.hpp"
#include "dualcount/counting.hpp"
#include "dualcount/errors.hpp"
#include "dualcount/lattice.hpp"
#include "dualcount/mckay.hpp"
#include "dualcount/series.hpp"
#include "dualcount/suites.hpp"
#include "support.hpp"

using namespace dualcount;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
  bool pass = true;
  std::ostringstream note;
  int checks = 0;
  void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok && pass) note << "first failure: " << what;
    pass = pass && ok;
  }
};

int failures = 0;

void criterion(int id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.note << "exception: " << e.what();
  }
  const double secs = seconds_since(start);
  std::cout << (o.pass ? "PASS" : "FAIL") << " [" << id << "] " << title << " (" << o.checks << " checks, "
            << std::fixed;
  std::cout.precision(2);
  std::cout << secs << " s)";
  if (!o.note.str().empty()) std::cout << " -- " << o.note.str();
  std::cout << std::endl;
  failures += !o.pass;
}

std::string tag(const GroupSpec& g, int n) { return g.to_string() + " n=" + std::to_string(n); }

}  // namespace

int main() {
  criterion(1, "N(G,Sp(n)) = N(G,SO(2n+1)), standard groups, n <= 12, under 60 s", [](Outcome& o) {
    const auto start = Clock::now();
    for (const auto& g : standard_gammas())
      for (int n = 0; n <= 12; ++n)
        o.expect(count_homs(g, {Family::Sp, n}) == count_homs(g, {Family::SO_odd, n}), tag(g, n));
    const double t = seconds_since(start);
    o.expect(t < 60, "runtime " + std::to_string(t) + " s");
  });

  criterion(2, "N(G,SU(n)) = N(G,PU(n)), standard groups, n <= 10", [](Outcome& o) {
    for (const auto& g : standard_gammas())
      for (int n = 1; n <= 10; ++n)
        o.expect(count_homs(g, {Family::SU, n}) == count_homs(g, {Family::PU, n}), tag(g, n));
  });

  criterion(3, "N(G,PSp(n)) = N(G,Spin(2n+1)), exceptional groups, n <= 10", [](Outcome& o) {
    for (const auto& g : exceptional_gammas())
      for (int n = 0; n <= 10; ++n)
        o.expect(count_homs(g, {Family::PSp, n}) == count_homs(g, {Family::Spin_odd, n}), tag(g, n));
  });

  criterion(4, "binary octahedral sector dimensions swap (e,m), n <= 8", [](Outcome& o) {
    const GroupSpec g = GroupSpec::octahedral();
    auto dim = [](const SectorCount& s, int e) { return e == 0 ? s.dim_v0() : s.dim_v1(); };
    for (int n = 0; n <= 8; ++n) {
      const SectorCount sp[2] = {count_twisted(g, Family::Sp, n, 0), count_twisted(g, Family::Sp, n, 1)};
      const SectorCount spin[2] = {count_twisted(g, Family::Spin_odd, n, 0), count_twisted(g, Family::Spin_odd, n, 1)};
      for (int e = 0; e < 2; ++e)
        for (int m = 0; m < 2; ++m)
          o.expect(dim(sp[m], e) == dim(spin[e], m),
                   "n=" + std::to_string(n) + " e=" + std::to_string(e) + " m=" + std::to_string(m));
    }
  });

  criterion(5, "generating-function coefficients equal enumeration counts, n <= 12", [](Outcome& o) {
    SuiteConfig cfg;
    cfg.max_n = 12;
    const SuiteResult r = suite_oracle(cfg);
    for (const auto& item : r.items)
      if (item.name.rfind("genfun", 0) == 0) o.expect(item.pass, item.name);
  });

  criterion(6, "identities proven by exact clearing; 50 random tuples per family; zero case to order 200",
            [](Outcome& o) {
              for (const auto& [id, p] : reference_instantiations(10)) {
                const auto r = prove_identity(id, p);
                o.expect(r.verdict && r.method == "cleared", to_string(id) + " " + to_string(p));
              }
              for (auto id : {IdentityKind::PropA, IdentityKind::PropX}) {
                const auto r = prove_identity(id, {});
                o.expect(r.verdict && r.method == "cleared", to_string(id));
              }
              for (auto id : {IdentityKind::KF1, IdentityKind::KF2, IdentityKind::KF3, IdentityKind::KF4})
                for (const auto& p : random_identity_params(id, 50, 20240601)) {
                  const auto r = prove_identity(id, p);
                  o.expect(r.verdict && r.method == "cleared", to_string(id) + " " + to_string(p));
                }
              o.expect(expand(builtin_genfun(RefinedCase::Y11_Spin), 200).is_zero(), "Y11-Spin through order 200");
            });

  criterion(7, "Z_n orbit duality for catalogued pairs, rank <= 8, n <= 6, each pair under 30 s", [](Outcome& o) {
    for (const auto& pair : dual_pair_catalog(8)) {
      const auto start = Clock::now();
      for (int n = 1; n <= 6; ++n) o.expect(verify_zn_duality(pair, n), pair.name + " n=" + std::to_string(n));
      const double t = seconds_since(start);
      o.expect(t < 30, pair.name + " took " + std::to_string(t) + " s");
    }
  });

  criterion(8, "W-orbits on type A lattices equal Z_n hom counts into SU/PU/U(k), k <= 4, n <= 6", [](Outcome& o) {
    for (int k = 2; k <= 4; ++k)
      for (int n = 1; n <= 6; ++n) {
        const GroupSpec z = GroupSpec::cyclic(n);
        const auto a = cartan_data({RootType::A, k - 1});
        LatticeChoice coweights{"coweight", {}};
        for (int i = 0; i < k - 1; ++i) {
          IntVector e(k - 1, 0);
          e[i] = 1;
          coweights.extra.push_back(e);
        }
        const std::string t = "k=" + std::to_string(k) + " n=" + std::to_string(n);
        o.expect(weyl_orbit_count(a, {"coroot", {}}, n) == count_homs(z, {Family::SU, k}), "SU " + t);
        o.expect(weyl_orbit_count(a, coweights, n) == count_homs(z, {Family::PU, k}), "PU " + t);
        o.expect(weyl_orbit_count(unitary_realization(k), n) == count_homs(z, {Family::U, k}), "U " + t);
      }
  });

  criterion(9, "S-matrix conjugation: A_k (k<=4, n<=4), D4/D5 (n<=2), E6 (n<=2), error < 1e-9", [](Outcome& o) {
    std::vector<std::pair<std::string, int>> cases;
    for (int k = 1; k <= 4; ++k)
      for (int n = 1; n <= 4; ++n) cases.push_back({"A" + std::to_string(k), n});
    for (const char* t : {"D4", "D5", "E6"})
      for (int n = 1; n <= 2; ++n) cases.push_back({t, n});
    for (const auto& [type, n] : cases) {
      const auto r = verify_s_conjugation(type, n);
      o.expect(r.holds && r.max_abs_error < 1e-9, type + " level " + std::to_string(n));
    }
  });

  criterion(10, "properties: sum of dim^2, McKay = extended Dynkin, moved even, Whitney congruence (dim <= 25)",
            [](Outcome& o) {
              std::vector<GroupSpec> groups;
              for (int n = 1; n <= 12; ++n) groups.push_back(GroupSpec::cyclic(n));
              for (int m = 2; m <= 8; ++m) groups.push_back(GroupSpec::binary_dihedral(m));
              for (const auto& g : exceptional_gammas()) groups.push_back(g);
              for (const auto& g : groups) {
                int s = 0;
                for (const auto& r : irreps(g)) s += r.dim * r.dim;
                o.expect(s == g.order(), "dim^2 " + g.to_string());
                if (g.order() < 2) continue;
                const auto graph = mckay_graph(g);
                o.expect(isomorphic_graphs(graph.adjacency, testing_support::extended_dynkin(graph.ade_type)),
                         "McKay " + g.to_string());
              }
              for (auto f : {Family::Sp, Family::Spin_odd})
                for (int n = 0; n <= 10; ++n)
                  for (int w : {0, 1}) o.expect(count_twisted(GroupSpec::octahedral(), f, n, w).moved % 2 == 0, "moved");
              const GroupSpec oct = GroupSpec::octahedral();
              const auto d = group_data(oct);
              for (int dim = 1; dim <= 25; ++dim)
                enumerate_solutions(*d, Structure::Orthogonal, dim, [&](const MultiplicityVector& mv) {
                  if (!d->abelian().is_zero(det_of(*d, mv))) return;
                  const auto r = sector_report(oct, mv);
                  o.expect(r.by_whitney == r.by_congruence, "Whitney dim " + std::to_string(dim));
                });
            });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
