#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "dualcount/errors.hpp"
#include "dualcount/kernels.hpp"
#include "dualcount/lattice.hpp"

namespace dualcount {

namespace {

std::uint64_t point_count(int rank, int n, std::uint64_t limit) {
  std::uint64_t total = 1;
  for (int i = 0; i < rank; ++i) {
    total *= static_cast<std::uint64_t>(n);
    if (total > limit) throw Unsupported("orbit space (Z/" + std::to_string(n) + ")^" + std::to_string(rank) + " exceeds the point limit");
  }
  return total;
}

void decode(std::uint64_t index, int n, std::vector<std::int32_t>& x) {
  for (auto& v : x) {
    v = static_cast<std::int32_t>(index % n);
    index /= n;
  }
}

}  // namespace

mpz_class weyl_orbit_count(const LatticeRealization& r, int n, const OrbitOptions& opt) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  if (r.rank == 0 || n == 1) return 1;
  const std::uint64_t total = point_count(r.rank, n, opt.max_points);
  if (r.generators.empty()) return mpz_class(std::to_string(total));

  const auto block = kernels::make_generator_block(r.generators, n);
  std::vector<bool> seen(total, false);
  std::vector<std::uint32_t> stack, images(block.padded);
  std::vector<std::int32_t> x(r.rank);

  // Seeds visited as idx -> (a*idx + c) mod total, a bijection when gcd(a, total) = 1.
  std::uint64_t a = 1, c = 0;
  if (opt.shuffle_seed != 0) {
    std::mt19937_64 rng(opt.shuffle_seed);
    do a = rng() % total; while (a == 0 || std::gcd(a, total) != 1);
    c = rng() % total;
  }

  std::uint64_t orbits = 0;
  for (std::uint64_t step = 0; step < total; ++step) {
    const auto seed = static_cast<std::uint32_t>((static_cast<unsigned __int128>(a) * step + c) % total);
    if (seen[seed]) continue;
    ++orbits;
    seen[seed] = true;
    stack.push_back(seed);
    while (!stack.empty()) {
      const std::uint32_t p = stack.back();
      stack.pop_back();
      decode(p, n, x);
      kernels::generator_images(block, x.data(), images.data());
      for (int g = 0; g < block.generators; ++g)
        if (!seen[images[g]]) {
          seen[images[g]] = true;
          stack.push_back(images[g]);
        }
    }
  }
  return mpz_class(std::to_string(orbits));
}

mpz_class weyl_orbit_count(const CartanData& c, const LatticeChoice& m, int n, const OrbitOptions& opt) {
  return weyl_orbit_count(realize(c, m), n, opt);
}

std::vector<IntMatrix> weyl_group_elements(const LatticeRealization& r, std::size_t max_group_order) {
  std::set<IntMatrix> seen{identity_matrix(r.rank)};
  std::vector<IntMatrix> frontier{identity_matrix(r.rank)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& w : frontier)
      for (const auto& g : r.generators) {
        auto product = multiply(g, w);
        if (seen.insert(product).second) {
          if (seen.size() > max_group_order) throw Unsupported("Weyl group larger than " + std::to_string(max_group_order));
          next.push_back(std::move(product));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

mpz_class burnside_orbit_count(const LatticeRealization& r, int n, std::size_t max_group_order) {
  if (r.rank == 0 || n == 1) return 1;
  const auto group = weyl_group_elements(r, max_group_order);
  const std::uint64_t total = point_count(r.rank, n, 5'000'000);
  mpz_class sum = 0;
  std::vector<std::int32_t> x(r.rank);
  for (const auto& w : group) {
    // |Fix(w)| by direct scan, kept independent of the BFS kernel.
    IntMatrix m = w;
    for (int i = 0; i < r.rank; ++i) m[i][i] -= 1;
    std::uint64_t fixed = 0;
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      decode(idx, n, x);
      bool ok = true;
      for (int i = 0; i < r.rank && ok; ++i) {
        std::int64_t acc = 0;
        for (int j = 0; j < r.rank; ++j) acc += m[i][j] * x[j];
        ok = acc % n == 0;
      }
      fixed += ok;
    }
    sum += mpz_class(std::to_string(fixed));
  }
  mpz_class order(std::to_string(group.size()));
  if (sum % order != 0) throw VerificationFailure("Burnside sum not divisible by |W|");
  return sum / order;
}

}  // namespace dualcount
