#include <doctest.h>

#include <functional>

#include "dualcount/counting.hpp"
#include "dualcount/errors.hpp"
#include "dualcount/lattice.hpp"
#include "support.hpp"

using namespace dualcount;

namespace {

LatticeChoice coroot() { return {"coroot", {}}; }

LatticeChoice all_coweights(int r) {
  LatticeChoice m{"coweight", {}};
  for (int i = 0; i < r; ++i) {
    IntVector e(r, 0);
    e[i] = 1;
    m.extra.push_back(e);
  }
  return m;
}

long su_multisets(int n, int k) {
  long count = 0;
  std::function<void(int, int, int)> rec = [&](int start, int left, int sum) {
    if (left == 0) {
      count += sum % n == 0;
      return;
    }
    for (int x = start; x < n; ++x) rec(x, left - 1, (sum + x) % n);
  };
  rec(0, k, 0);
  return count;
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("Cartan matrices") {
    const auto b3 = cartan_data(CartanType::parse("B3"));
    const auto c3 = cartan_data(CartanType::parse("C3"));
    CHECK(transpose(b3.cartan) == c3.cartan);
    CHECK(dual_cartan(b3).cartan == c3.cartan);
    CHECK(b3.center.order() == 2);
    CHECK(cartan_data(CartanType::parse("E6")).center.order() == 3);
    CHECK(cartan_data(CartanType::parse("E8")).center.order() == 1);
    CHECK(cartan_data(CartanType::parse("D4")).center.factors() == std::vector<int>{2, 2});
    CHECK(cartan_data(CartanType::parse("D5")).center.factors() == std::vector<int>{4});
    CHECK(CartanType::parse("F4").name() == "F4");
    CHECK_THROWS(CartanType::parse("E9"));
  }

  TEST_CASE("reflections are involutions preserving the Cartan pairing") {
    for (auto t : {"A3", "B3", "C4", "D4", "G2", "F4", "E6"}) {
      const auto c = cartan_data(CartanType::parse(t));
      for (int i = 0; i < c.rank; ++i) {
        const IntMatrix s = c.reflection(i);
        CHECK(multiply(s, s) == identity_matrix(c.rank));
      }
    }
  }

  TEST_CASE("annihilator is an involution on intermediate lattices") {
    for (const auto& pair : dual_pair_catalog(6)) {
      CAPTURE(pair.name);
      const auto back = annihilator(pair.dual, pair.dual_lattice);
      CHECK(same_lattice(pair.g, back, pair.g_lattice));
    }
  }

  TEST_CASE("orbit counting agrees with Burnside") {
    for (auto t : {"A1", "A2", "A3", "B2", "C3", "G2", "D4", "B3"})
      for (int n = 1; n <= 5; ++n) {
        const auto c = cartan_data(CartanType::parse(t));
        for (const auto& m : {coroot(), all_coweights(c.rank)}) {
          CAPTURE(std::string(t) + " " + m.name + " n=" + std::to_string(n));
          const auto r = realize(c, m);
          CHECK(weyl_orbit_count(r, n) == burnside_orbit_count(r, n));
        }
      }
  }

  TEST_CASE("orbit count does not depend on seed order") {
    auto g = testing_support::rng(3);
    const auto r = realize(cartan_data(CartanType::parse("B3")), coroot());
    const mpz_class base = weyl_orbit_count(r, 5);
    for (int trial = 0; trial < 8; ++trial) {
      OrbitOptions opt;
      opt.shuffle_seed = static_cast<std::uint64_t>(testing_support::uniform(g, 1, 1 << 30));
      CHECK(weyl_orbit_count(r, 5, opt) == base);
    }
  }

  TEST_CASE("type A lattices against closed forms") {
    for (int k = 1; k <= 4; ++k)
      for (int n = 1; n <= 6; ++n) {
        CHECK(weyl_orbit_count(unitary_realization(k), n) == testing_support::multisets(n, k));
        if (k >= 2) CHECK(weyl_orbit_count(cartan_data({RootType::A, k - 1}), coroot(), n) == su_multisets(n, k));
      }
  }

  TEST_CASE("orbit space limit") {
    OrbitOptions opt;
    opt.max_points = 1000;
    CHECK_THROWS_AS(weyl_orbit_count(cartan_data(CartanType::parse("A4")), coroot(), 6, opt), Unsupported);
  }

  TEST_CASE("Z_n duality on the small catalogue") {
    for (const auto& pair : dual_pair_catalog(4))
      for (int n = 1; n <= 4; ++n) {
        CAPTURE(pair.name);
        CHECK(verify_zn_duality(pair, n));
      }
  }

  TEST_CASE("non-dual pairs are rejected") {
    auto pair = dual_pair_catalog(3).front();
    pair.dual_lattice = coroot();
    CHECK_THROWS_AS(zn_duality(pair, 2), std::invalid_argument);
  }

  TEST_CASE("refined characters swap under duality") {
    struct Case {
      const char* type;
      LatticeChoice inner, outer;
    };
    for (const auto& c : std::vector<Case>{{"A1", coroot(), all_coweights(1)},
                                           {"A2", coroot(), all_coweights(2)},
                                           {"C2", coroot(), all_coweights(2)},
                                           {"B2", coroot(), all_coweights(2)}})
      for (int n = 2; n <= 4; ++n) {
        CAPTURE(std::string(c.type) + " n=" + std::to_string(n));
        const RefinedLatticeData data{cartan_data(CartanType::parse(c.type)), c.inner, c.outer};
        const auto f = refined_zn_characters(data, n);
        mpz_class total = 0;
        for (const auto& d : f.sector_dims) total += d;
        CHECK(total > 0);
        // Sector 0 is V_Z(Z_n, G) for the simply connected group itself.
        CHECK(f.value[0][0].as_integer().has_value());
        const auto r = compare_swapped(data, n);
        CHECK((r.direct || r.inverse));
      }
  }
}
