#include <charconv>
#include <stdexcept>

#include "dualcount/lattice.hpp"

namespace dualcount {

std::string CartanType::name() const {
  const char letters[] = {'A', 'B', 'C', 'D', 'E', 'F', 'G'};
  return std::string(1, letters[static_cast<int>(type)]) + std::to_string(rank);
}

CartanType CartanType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
  const std::string letters = "ABCDEFG";
  const auto pos = letters.find(text[0]);
  int rank = 0;
  auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), rank);
  if (pos == std::string::npos || ec != std::errc() || ptr != text.data() + text.size() || rank < 1)
    throw std::invalid_argument("bad Cartan type '" + std::string(text) + "'");
  CartanType t{static_cast<RootType>(pos), rank};
  const bool ok = (t.type == RootType::A) || (t.type == RootType::B && rank >= 2) ||
                  (t.type == RootType::C && rank >= 2) || (t.type == RootType::D && rank >= 4) ||
                  (t.type == RootType::E && rank >= 6 && rank <= 8) || (t.type == RootType::F && rank == 4) ||
                  (t.type == RootType::G && rank == 2);
  if (!ok) throw std::invalid_argument("unsupported Cartan type '" + std::string(text) + "'");
  return t;
}

namespace {

IntMatrix simply_laced(int r, const std::vector<std::pair<int, int>>& edges) {
  IntMatrix c(r, IntVector(r, 0));
  for (int i = 0; i < r; ++i) c[i][i] = 2;
  for (auto [a, b] : edges) c[a][b] = c[b][a] = -1;
  return c;
}

std::vector<std::pair<int, int>> chain(int r) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < r; ++i) e.emplace_back(i, i + 1);
  return e;
}

IntMatrix cartan_matrix(const CartanType& t) {
  const int r = t.rank;
  switch (t.type) {
    case RootType::A: return simply_laced(r, chain(r));
    case RootType::B: {
      auto c = simply_laced(r, chain(r));
      c[r - 1][r - 2] = -2;  // α_r short
      return c;
    }
    case RootType::C: {
      auto c = simply_laced(r, chain(r));
      c[r - 2][r - 1] = -2;  // α_r long
      return c;
    }
    case RootType::D: {
      auto e = chain(r - 1);
      e.emplace_back(r - 3, r - 1);
      return simply_laced(r, e);
    }
    case RootType::E: {
      std::vector<std::pair<int, int>> e = {{0, 2}, {2, 3}, {3, 4}, {1, 3}};
      for (int i = 4; i + 1 < r; ++i) e.emplace_back(i, i + 1);
      return simply_laced(r, e);
    }
    case RootType::F: {
      auto c = simply_laced(4, chain(4));
      c[2][1] = -2;  // α_1, α_2 long; α_3, α_4 short
      return c;
    }
    case RootType::G: return {{2, -3}, {-1, 2}};
  }
  throw std::logic_error("unreachable");
}

}  // namespace

CartanData cartan_from_matrix(std::string name, IntMatrix cartan) {
  CartanData c;
  c.name = std::move(name);
  c.rank = static_cast<int>(cartan.size());
  c.cartan = std::move(cartan);
  if (c.rank == 0) return c;
  c.center = FiniteAbelianGroup(smith_invariants(c.cartan, c.rank));
  const IntMatrix h = hermite_row_basis(c.cartan, c.rank);
  // Hermite box of Z^r / Q^∨
  IntVector v(c.rank, 0);
  auto rec = [&](auto& self, int i) -> void {
    if (i == c.rank) {
      c.center_representatives.push_back(v);
      return;
    }
    for (std::int64_t x = 0; x < h[i][i]; ++x) {
      v[i] = x;
      self(self, i + 1);
    }
    v[i] = 0;
  };
  rec(rec, 0);
  if (c.center_representatives.size() != c.center.order())
    throw std::logic_error("center representatives disagree with Smith invariants");
  return c;
}

CartanData cartan_data(const CartanType& t) {
  if (t.rank == 1 && t.type != RootType::A) return cartan_from_matrix(t.name(), {{2}});
  return cartan_from_matrix(t.name(), cartan_matrix(t));
}

CartanData dual_cartan(const CartanData& c) { return cartan_from_matrix(c.name + "^dual", transpose(c.cartan)); }

IntMatrix CartanData::reflection(int i) const {
  IntMatrix r = identity_matrix(rank);
  for (int j = 0; j < rank; ++j) r[j][i] -= cartan[i][j];
  return r;
}

mpq_class CartanData::pairing(const IntVector& weight, const IntVector& coweight) const {
  const auto inv = inverse(to_rational(cartan));
  mpq_class s = 0;
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) s += mpq_class(static_cast<long>(coweight[i])) * (*inv)[i][j] * static_cast<long>(weight[j]);
  return s;
}

}  // namespace dualcount
