#include <doctest.h>

#include <cmath>
#include <numeric>

#include "dualcount/abelian.hpp"
#include "dualcount/cyclotomic.hpp"
#include "dualcount/intmat.hpp"
#include "support.hpp"

using namespace dualcount;

TEST_SUITE("core") {
  TEST_CASE("roots of unity sum to zero and satisfy their order") {
    for (int n = 2; n <= 24; ++n) {
      Cyclotomic sum(n);
      for (int k = 0; k < n; ++k) sum += Cyclotomic::root(n, k);
      CHECK(sum.is_zero());
      CHECK(Cyclotomic::root(n, 1) * Cyclotomic::root(n, n - 1) == Cyclotomic::integer(n, 1));
      CHECK(Cyclotomic::root(n, n) == Cyclotomic::integer(1, 1));
    }
  }

  TEST_CASE("cyclotomic polynomials have the expected low cases") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
  }

  TEST_CASE("mixed orders lift to the lcm") {
    const Cyclotomic i = Cyclotomic::root(4, 1);
    const Cyclotomic w = Cyclotomic::root(3, 1);
    const Cyclotomic p = i * w;
    CHECK(p.order() % 12 == 0);
    CHECK(p == Cyclotomic::root(12, 7));
    CHECK(std::abs(p.to_complex() - std::polar(1.0, 2 * M_PI * 7 / 12)) < 1e-12);
  }

  TEST_CASE("sqrt 2 in Q(zeta_8) squares to 2") {
    const Cyclotomic s = Cyclotomic::root(8, 1) + Cyclotomic::root(8, -1);
    CHECK((s * s).as_integer() == 2);
    CHECK_FALSE(s.as_integer().has_value());
    CHECK(s.conj() == s);
  }

  TEST_CASE("random cyclotomic arithmetic agrees with complex arithmetic") {
    auto g = testing_support::rng(1);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = testing_support::uniform(g, 1, 30);
      Cyclotomic a(n), b(n);
      for (int k = 0; k < 4; ++k) {
        a += Cyclotomic::root(n, testing_support::uniform(g, 0, n - 1)) * testing_support::uniform(g, -3, 3);
        b += Cyclotomic::root(n, testing_support::uniform(g, 0, n - 1)) * testing_support::uniform(g, -3, 3);
      }
      CHECK(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-9);
      CHECK(std::abs((a - b).to_complex() - (a.to_complex() - b.to_complex())) < 1e-9);
      CHECK(((a - b).is_zero()) == (std::abs(a.to_complex() - b.to_complex()) < 1e-9));
    }
  }

  TEST_CASE("automorphism counts of small abelian groups") {
    // |Aut(Z_n)| = φ(n), |GL_2(F_2)| = 6.
    CHECK(FiniteAbelianGroup({4}).isomorphisms_to_dual().size() == 2);
    CHECK(FiniteAbelianGroup({3}).isomorphisms_to_dual().size() == 2);
    CHECK(FiniteAbelianGroup({2}).isomorphisms_to_dual().size() == 1);
    CHECK(FiniteAbelianGroup({2, 2}).isomorphisms_to_dual().size() == 6);
    CHECK(FiniteAbelianGroup(std::vector<int>{}).isomorphisms_to_dual().size() == 1);
  }

  TEST_CASE("torsion and quotient have equal size") {
    for (auto f : std::vector<std::vector<int>>{{2, 2}, {4}, {12}, {2, 6}, {3}}) {
      const FiniteAbelianGroup A(f);
      for (int r = 1; r <= 6; ++r) CHECK(A.torsion(r).size() == A.quotient_representatives(r).size());
    }
  }

  TEST_CASE("pairing is bilinear") {
    const FiniteAbelianGroup A({2, 6});
    const int L = A.exponent();
    for (const auto& c : A.elements())
      for (const auto& x : A.elements())
        for (const auto& y : A.elements())
          CHECK((A.pairing_exponent(c, x) + A.pairing_exponent(c, y)) % L == A.pairing_exponent(c, A.add(x, y)));
  }

  TEST_CASE("Hermite and Smith forms") {
    const IntMatrix rows{{2, 4}, {6, 8}};
    const IntMatrix h = hermite_row_basis(rows, 2);
    CHECK(h == IntMatrix{{2, 0}, {0, 4}});
    CHECK(smith_invariants(rows, 2) == std::vector<int>{2, 4});
    CHECK(reduce_mod_hermite({5, -3}, h) == IntVector{1, 1});
    const IntMatrix a2{{2, -1}, {-1, 2}};
    CHECK(determinant(to_rational(a2)) == 3);
    CHECK(smith_invariants(a2, 2) == std::vector<int>{3});
    const auto inv = inverse(to_rational(a2));
    REQUIRE(inv);
    CHECK(multiply(*inv, to_rational(a2)) == to_rational(identity_matrix(2)));
  }
}
