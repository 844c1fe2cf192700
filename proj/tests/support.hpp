#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace testing_support {

/// Fixed-seed generator for property tests; each suite derives its own stream from a tag.
inline std::mt19937_64 rng(std::uint64_t tag) { return std::mt19937_64(0x5eed0000ull + tag); }

inline int uniform(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

inline long binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Number of multisets of size k drawn from `types` kinds.
inline long multisets(long types, long k) { return binomial(types + k - 1, k); }

/// Extended Dynkin diagrams written down directly: node 0 is the affine node.
inline std::vector<std::vector<int>> extended_dynkin(const std::string& type) {
  const char letter = type[0];
  const int r = std::stoi(type.substr(1));
  const int n = r + 1;
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  auto edge = [&](int i, int j) { a[i][j] = a[j][i] = a[i][j] + 1; };
  if (letter == 'A') {
    if (r == 1) {
      a[0][1] = a[1][0] = 2;
      return a;
    }
    for (int i = 0; i < n; ++i) edge(i, (i + 1) % n);
  } else if (letter == 'D') {
    // 0,1 hang off 2; chain 2..r-2; r-1 and r hang off r-2.
    edge(0, 2);
    edge(1, 2);
    for (int i = 2; i < r - 2; ++i) edge(i, i + 1);
    edge(r - 2, r - 1);
    edge(r - 2, r);
  } else if (type == "E6") {
    edge(0, 1), edge(1, 2), edge(2, 3), edge(3, 4), edge(2, 5), edge(5, 6);
  } else if (type == "E7") {
    edge(0, 1), edge(1, 2), edge(2, 3), edge(3, 4), edge(4, 5), edge(5, 6), edge(3, 7);
  } else if (type == "E8") {
    edge(0, 1), edge(1, 2), edge(2, 3), edge(3, 4), edge(4, 5), edge(5, 6), edge(6, 7), edge(5, 8);
  }
  return a;
}

}  // namespace testing_support
