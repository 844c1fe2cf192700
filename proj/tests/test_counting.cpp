#include <doctest.h>

#include <functional>
#include <numeric>

#include "dualcount/counting.hpp"
#include "dualcount/errors.hpp"
#include "support.hpp"

using namespace dualcount;
using testing_support::multisets;

namespace {

/// Multisets of k elements of Z_n whose sum is ≡ 0 mod n (homs Z_n → SU(k) up to conjugacy).
long su_oracle(int n, int k) {
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

/// Element multisets of Z_n/± of size k: eigenvalue data of Sp(k) and SO(2k+1) torus elements of order dividing n.
long sp_oracle(int n, int k) { return multisets(n / 2 + 1, k); }

}  // namespace

TEST_SUITE("counting") {
  TEST_CASE("cyclic groups against closed forms") {
    for (int n = 1; n <= 8; ++n)
      for (int k = 0; k <= 6; ++k) {
        CAPTURE(n);
        CAPTURE(k);
        const GroupSpec z = GroupSpec::cyclic(n);
        CHECK(count_homs(z, {Family::U, k}) == multisets(n, k));
        if (k >= 1) CHECK(count_homs(z, {Family::SU, k}) == su_oracle(n, k));
        CHECK(count_homs(z, {Family::Sp, k}) == sp_oracle(n, k));
        CHECK(count_homs(z, {Family::SO_odd, k}) == sp_oracle(n, k));
      }
  }

  TEST_CASE("small examples") {
    const auto O = GroupSpec::octahedral(), T = GroupSpec::tetrahedral(), I = GroupSpec::icosahedral();
    CHECK(count_homs(O, {Family::Sp, 1}) == 4);
    CHECK(count_homs(GroupSpec::cyclic(3), {Family::SO_odd, 1}) == 2);
    CHECK(count_homs(T, {Family::Sp, 0}) == 1);
    // 2-dim reps of Ô: three irreducible ones plus 1⊕1, 1⊕1', 1'⊕1'.
    CHECK(count_homs(O, {Family::U, 2}) == 6);
    CHECK(count_homs(I, {Family::U, 1}) == 1);
    // Sp(1) = SU(2): the defining-type reps are the pseudoreal 2-dim irreps plus ρ⊕ρ* for 1-dim ρ.
    CHECK(count_homs(T, {Family::Sp, 1}) == count_homs(T, {Family::SU, 2}));
  }

  TEST_CASE("duality for small ranks") {
    for (auto g : {GroupSpec::cyclic(7), GroupSpec::binary_dihedral(4), GroupSpec::binary_dihedral(5),
                   GroupSpec::tetrahedral(), GroupSpec::octahedral(), GroupSpec::icosahedral()})
      for (int n = 0; n <= 6; ++n) {
        CHECK(count_homs(g, {Family::Sp, n}) == count_homs(g, {Family::SO_odd, n}));
        if (n >= 1) CHECK(count_homs(g, {Family::SU, n}) == count_homs(g, {Family::PU, n}));
      }
    for (auto g : {GroupSpec::tetrahedral(), GroupSpec::octahedral(), GroupSpec::icosahedral()})
      for (int n = 0; n <= 5; ++n) CHECK(count_homs(g, {Family::PSp, n}) == count_homs(g, {Family::Spin_odd, n}));
  }

  TEST_CASE("binary dihedral Spin and PSp are out of scope") {
    CHECK_THROWS_AS(count_homs(GroupSpec::binary_dihedral(3), {Family::Spin_odd, 2}), Unsupported);
    CHECK_THROWS_AS(count_twisted(GroupSpec::tetrahedral(), Family::Sp, 2, 0), Unsupported);
  }

  TEST_CASE("O and SO relation for odd dimensions") {
    // O(2n+1) = SO(2n+1) × {±1}: every O-rep is an SO-rep twisted by a character of order ≤ 2.
    for (auto g : {GroupSpec::cyclic(6), GroupSpec::octahedral(), GroupSpec::binary_dihedral(4)})
      for (int n = 0; n <= 4; ++n) {
        const auto& A = group_data(g)->abelian();
        const long two_torsion = static_cast<long>(A.torsion(2).size());
        CHECK(count_homs(g, {Family::O_odd, n}) == two_torsion * count_homs(g, {Family::SO_odd, n}));
      }
  }

  TEST_CASE("sector counts: moved is always even") {
    for (auto f : {Family::Sp, Family::Spin_odd})
      for (int n = 0; n <= 10; ++n)
        for (int w : {0, 1}) {
          const auto s = count_twisted(GroupSpec::octahedral(), f, n, w);
          CHECK(s.moved % 2 == 0);
          CHECK(s.dim_v0() + s.dim_v1() == s.fixed + s.moved);
        }
  }

  TEST_CASE("untwisted Sp sector sums to the total count") {
    for (int n = 0; n <= 8; ++n) {
      const auto s = count_twisted(GroupSpec::octahedral(), Family::Sp, n, 0);
      CHECK(s.fixed + s.moved == count_homs(GroupSpec::octahedral(), {Family::Sp, n}));
    }
  }

  TEST_CASE("Stiefel-Whitney sector agrees with the congruence rule exhaustively") {
    const GroupSpec o = GroupSpec::octahedral();
    const auto d = group_data(o);
    long checked = 0;
    for (int dim = 1; dim <= 25; ++dim)
      enumerate_solutions(*d, Structure::Orthogonal, dim, [&](const MultiplicityVector& mv) {
        if (!d->abelian().is_zero(det_of(*d, mv))) return;
        const auto r = sector_report(o, mv);
        CHECK(r.by_whitney == r.by_congruence);
        ++checked;
      });
    CHECK(checked > 1000);
  }

  TEST_CASE("explicit and general Spin lift rules agree") {
    const auto d = group_data(GroupSpec::octahedral());
    for (int dim = 1; dim <= 17; dim += 2)
      enumerate_solutions(*d, Structure::Orthogonal, dim, [&](const MultiplicityVector& mv) {
        CHECK(spin_lift_fixed(*d, mv) == spin_lift_fixed_explicit(*d, mv));
      });
  }

  TEST_CASE("tensoring by a one-dimensional irrep is an involution on solutions") {
    auto g = testing_support::rng(7);
    for (auto spec : {GroupSpec::octahedral(), GroupSpec::binary_dihedral(4), GroupSpec::cyclic(6)}) {
      const auto d = group_data(spec);
      const auto& A = d->abelian();
      for (int trial = 0; trial < 20; ++trial) {
        const auto a = A.element(testing_support::uniform(g, 0, static_cast<int>(A.order()) - 1));
        enumerate_solutions(*d, Structure::Symplectic, 2 * testing_support::uniform(g, 1, 3),
                            [&](const MultiplicityVector& mv) {
                              CHECK(tensor_by(*d, A.neg(a), tensor_by(*d, a, mv)) == mv);
                            });
      }
    }
  }

  TEST_CASE("F-representation swap for SU/PU") {
    for (auto g : {GroupSpec::cyclic(4), GroupSpec::binary_dihedral(2), GroupSpec::binary_dihedral(3),
                   GroupSpec::tetrahedral(), GroupSpec::octahedral()})
      for (int n = 1; n <= 4; ++n) CHECK(verify_swap_equivalence(g, DualPairKind::SU_PU, n).equivalent);
    for (int n = 0; n <= 5; ++n)
      CHECK(verify_swap_equivalence(GroupSpec::octahedral(), DualPairKind::Sp_Spin, n).equivalent);
  }

  TEST_CASE("F-representation characters are traces of permutation actions") {
    const auto f = f_rep_character(GroupSpec::octahedral(), FSide::Sp, 3);
    // identity row, trivial column: total dimension.
    mpz_class total = 0;
    for (const auto& d : f.sector_dims) total += d;
    CHECK(f.value[0][0].as_integer() == total.get_si());
  }
}
