#include <doctest.h>

#include <cmath>

#include "dualcount/affine.hpp"
#include "dualcount/errors.hpp"
#include "dualcount/mckay.hpp"

using namespace dualcount;

namespace {

/// Finite Dynkin label of an A1 weight.
int a1_label(const LevelWeights& w, std::size_t i) { return w.weights[i][1 - w.affine_node]; }

}  // namespace

TEST_SUITE("affine") {
  TEST_CASE("level weights match unitary representation counts") {
    for (auto type : {"A1", "A2", "A3", "D4", "D5", "E6", "E7", "E8"})
      for (int n = 1; n <= 4; ++n) {
        CAPTURE(std::string(type) + " level " + std::to_string(n));
        const auto w = level_weights(type, n);
        CHECK(w.weights.size() == count_homs(w.partner, {Family::U, n}).get_ui());
      }
    CHECK(level_weights("A1", 1).weights.size() == 2);
    CHECK(level_weights("A2", 1).weights.size() == 3);
    CHECK(level_weights("E7", 2).weights.size() == 6);
    CHECK_THROWS_AS(level_weights("B3", 1), Unsupported);
    CHECK_THROWS(level_weights("A2", 0));
  }

  TEST_CASE("A1 S-matrix at level 1") {
    const auto s = s_matrix("A1", 1);
    const double h = 1 / std::sqrt(2.0);
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) {
        const double expect = (a1_label(s.weights, i) == 1 && a1_label(s.weights, j) == 1) ? -h : h;
        CHECK(std::abs(s.s[i][j] - std::complex<double>(expect, 0)) < 1e-12);
      }
  }

  TEST_CASE("A1 S-matrix agrees with the sine formula") {
    for (int n = 1; n <= 6; ++n) {
      const auto s = s_matrix("A1", n);
      for (std::size_t i = 0; i < s.s.size(); ++i)
        for (std::size_t j = 0; j < s.s.size(); ++j) {
          const int a = a1_label(s.weights, i) + 1, b = a1_label(s.weights, j) + 1;
          const double expect = std::sqrt(2.0 / (n + 2)) * std::sin(M_PI * a * b / (n + 2));
          CHECK(std::abs(s.s[i][j] - std::complex<double>(expect, 0)) < 1e-12);
        }
    }
  }

  TEST_CASE("level 2 A1 middle row") {
    const auto s = s_matrix("A1", 2);
    for (std::size_t i = 0; i < 3; ++i) {
      if (a1_label(s.weights, i) != 1) continue;
      for (std::size_t j = 0; j < 3; ++j) {
        const int b = a1_label(s.weights, j);
        const double expect = b == 1 ? 0 : (b == 0 ? 1 : -1) / std::sqrt(2.0);
        CHECK(std::abs(s.s[i][j].real() - expect) < 1e-12);
      }
    }
  }

  TEST_CASE("unitarity, symmetry, charge conjugation and positive quantum dimensions") {
    for (auto type : {"A1", "A2", "A3", "A4", "D4", "D5", "D6", "E6"})
      for (int n = 1; n <= 3; ++n) {
        CAPTURE(std::string(type) + " level " + std::to_string(n));
        const auto s = s_matrix(type, n);
        CHECK(unitarity_error(s) < 1e-9);
        CHECK(symmetry_error(s) < 1e-9);
        bool squares = false;
        CHECK(charge_conjugation_error(s, squares) < 1e-9);
        CHECK(squares);
        const auto v = static_cast<std::size_t>(s.weights.vacuum());
        for (const auto& x : s.s[v]) CHECK(x.real() > 1e-6);
      }
  }

  TEST_CASE("conjugation holds for a unique identification") {
    for (auto [type, n] : std::vector<std::pair<const char*, int>>{{"A1", 2}, {"A2", 3}, {"A3", 2}, {"D4", 1},
                                                                   {"D4", 2}, {"D5", 2}, {"D6", 1}, {"E6", 1}}) {
      CAPTURE(std::string(type) + " level " + std::to_string(n));
      const auto r = verify_s_conjugation(type, n);
      CHECK(r.holds);
      CHECK(r.max_abs_error < 1e-9);
      CHECK(r.identifications.size() == 1);
    }
  }

  TEST_CASE("det' of fundamental weights matches determinant characters") {
    for (auto type : {"A3", "D4", "D5", "E6", "E7"}) {
      const auto w = level_weights(type, 4);
      const auto dets = det_prime(w);
      const auto d = group_data(w.partner);
      for (std::size_t k = 0; k < w.weights.size(); ++k) {
        // Weights supported on one node with multiplicity one carry that irrep's class.
        int support = -1, total = 0;
        for (std::size_t i = 0; i < w.weights[k].size(); ++i)
          if (w.weights[k][i]) support = static_cast<int>(i), total += w.weights[k][i];
        if (total == 1) CHECK(dets[k] == d->irrep(support).det_char);
      }
    }
  }

  TEST_CASE("exact A1 check") {
    for (int n = 1; n <= 8; ++n) CHECK(a1_exact_conjugation(n));
  }

  TEST_CASE("out of scope types") {
    CHECK_THROWS_AS(s_matrix("E8", 1), Unsupported);
    CHECK_THROWS_AS(s_matrix("E7", 1), Unsupported);
    CHECK_THROWS_AS(s_matrix("D7", 1), Unsupported);
    AffineOptions opt;
    opt.allow_e7 = true;
    CHECK(verify_s_conjugation("E7", 1, opt).holds);
  }
}
