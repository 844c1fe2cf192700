#include <doctest.h>

#include <cstdlib>

#include "dualcount/kernels.hpp"
#include "dualcount/lattice.hpp"
#include "support.hpp"

using namespace dualcount;
using namespace dualcount::kernels;

TEST_SUITE("kernels") {
  TEST_CASE("generator images: vector path equals reference path") {
    if (!backend_available(Backend::AVX2)) {
      MESSAGE("AVX2 unavailable on this CPU; vector path not exercised");
      return;
    }
    auto g = testing_support::rng(21);
    for (auto t : {"A1", "A4", "B3", "D5", "E6", "E7", "E8", "G2"})
      for (int n : {2, 3, 5, 6}) {
        const auto r = realize(cartan_data(CartanType::parse(t)), {"coroot", {}});
        const GeneratorBlock b = make_generator_block(r.generators, n);
        std::vector<std::int32_t> x(b.rank);
        std::vector<std::uint32_t> ref(b.padded), vec(b.padded);
        for (int trial = 0; trial < 200; ++trial) {
          for (auto& v : x) v = testing_support::uniform(g, 0, n - 1);
          generator_images_scalar(b, x.data(), ref.data());
          generator_images_avx2(b, x.data(), vec.data());
          for (int k = 0; k < b.generators; ++k) CHECK(ref[k] == vec[k]);
        }
      }
  }

  TEST_CASE("phase sums: vector path equals reference path") {
    if (!backend_available(Backend::AVX2)) {
      MESSAGE("AVX2 unavailable on this CPU; vector path not exercised");
      return;
    }
    auto g = testing_support::rng(22);
    for (int trial = 0; trial < 100; ++trial) {
      const int rank = testing_support::uniform(g, 1, 8);
      const std::size_t count = static_cast<std::size_t>(testing_support::uniform(g, 1, 300));
      const int modulus = testing_support::uniform(g, 2, 500);
      std::vector<std::int32_t> cols(rank * count), signs(count), y(rank);
      for (auto& c : cols) c = testing_support::uniform(g, -40, 40);
      for (auto& s : signs) s = testing_support::uniform(g, 0, 1) ? 1 : -1;
      for (auto& v : y) v = testing_support::uniform(g, -60, 60);
      const PhaseTable t = make_phase_table(modulus);
      const auto a = phase_sum_scalar(cols, signs, count, y, t);
      const auto b = phase_sum_avx2(cols, signs, count, y, t);
      CHECK(std::abs(a - b) < 1e-9);
    }
  }

  TEST_CASE("backend selection") {
    CHECK(backend_available(Backend::Scalar));
    set_backend_override(Backend::Scalar);
    CHECK(active_backend() == Backend::Scalar);
    set_backend_override(std::nullopt);
    CHECK(backend_name(Backend::AVX2) == "avx2");
  }

  TEST_CASE("orbit counts are identical on both backends") {
    const auto r = realize(cartan_data(CartanType::parse("D4")), {"coroot", {}});
    set_backend_override(Backend::Scalar);
    const mpz_class a = weyl_orbit_count(r, 5);
    set_backend_override(std::nullopt);
    const mpz_class b = weyl_orbit_count(r, 5);
    CHECK(a == b);
  }
}
