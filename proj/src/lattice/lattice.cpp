#include <stdexcept>

#include "dualcount/lattice.hpp"

namespace dualcount {

IntMatrix lattice_basis(const CartanData& c, const LatticeChoice& m) {
  IntMatrix rows = c.cartan;
  for (auto& e : m.extra) {
    if (static_cast<int>(e.size()) != c.rank) throw std::invalid_argument("lattice generator has wrong rank");
    rows.push_back(e);
  }
  return hermite_row_basis(rows, c.rank);
}

bool same_lattice(const CartanData& c, const LatticeChoice& a, const LatticeChoice& b) {
  return lattice_basis(c, a) == lattice_basis(c, b);
}

LatticeChoice annihilator(const CartanData& c, const LatticeChoice& m) {
  const auto inv = inverse(to_rational(c.cartan));
  const IntMatrix basis = lattice_basis(c, m);
  const CartanData d = dual_cartan(c);
  LatticeChoice out{"dual of " + m.name, {}};
  for (auto& l : d.center_representatives) {
    bool integral = true;
    for (auto& x : basis) {
      mpq_class s = 0;
      for (int i = 0; i < c.rank; ++i)
        for (int j = 0; j < c.rank; ++j) s += mpq_class(static_cast<long>(x[i])) * (*inv)[i][j] * static_cast<long>(l[j]);
      if (s.get_den() != 1) {
        integral = false;
        break;
      }
    }
    bool zero = true;
    for (auto v : l) zero = zero && v == 0;
    if (integral && !zero) out.extra.push_back(l);
  }
  return out;
}

LatticeRealization realize(const CartanData& c, const LatticeChoice& m) {
  LatticeRealization r;
  r.name = c.name + " on " + m.name;
  r.rank = c.rank;
  if (c.rank == 0) return r;
  const IntMatrix bt = transpose(lattice_basis(c, m));  // columns are basis vectors
  const auto bt_inv = inverse(to_rational(bt));
  if (!bt_inv) throw std::logic_error("lattice basis is singular");
  for (int i = 0; i < c.rank; ++i) {
    auto g = to_integer(multiply(*bt_inv, multiply(to_rational(c.reflection(i)), to_rational(bt))));
    if (!g) throw std::invalid_argument("lattice " + m.name + " is not Weyl-invariant");
    r.generators.push_back(*g);
  }
  return r;
}

LatticeRealization unitary_realization(int k) {
  LatticeRealization r;
  r.name = "U(" + std::to_string(k) + ")";
  r.rank = k;
  for (int i = 0; i + 1 < k; ++i) {
    IntMatrix p = identity_matrix(k);
    p[i][i] = p[i + 1][i + 1] = 0;
    p[i][i + 1] = p[i + 1][i] = 1;
    r.generators.push_back(p);
  }
  return r;
}

DualPair make_dual_pair(std::string name, const CartanData& g, const LatticeChoice& m) {
  return DualPair{std::move(name), g, m, dual_cartan(g), annihilator(g, m)};
}

namespace {

IntVector unit(int r, int i, int scale = 1) {
  IntVector v(r, 0);
  v[i] = scale;
  return v;
}

LatticeChoice coroot() { return {"coroot", {}}; }
LatticeChoice coweight(int r) {
  LatticeChoice m{"coweight", {}};
  for (int i = 0; i < r; ++i) m.extra.push_back(unit(r, i));
  return m;
}

}  // namespace

std::vector<DualPair> dual_pair_catalog(int max_rank) {
  std::vector<DualPair> out;
  for (int k = 2; k - 1 <= max_rank; ++k) {
    const auto a = cartan_data({RootType::A, k - 1});
    const std::string K = std::to_string(k);
    out.push_back(make_dual_pair("SU(" + K + ")/PU(" + K + ")", a, coroot()));
    for (int d = 2; d < k; ++d)
      if (k % d == 0)
        out.push_back(make_dual_pair("SU(" + K + ")/Z" + std::to_string(d), a,
                                     {"Z" + std::to_string(d) + " quotient", {unit(k - 1, 0, k / d)}}));
  }
  for (int n = 2; n <= max_rank; ++n) {
    const std::string N = std::to_string(n), N2 = std::to_string(2 * n + 1);
    out.push_back(make_dual_pair("Sp(" + N + ")/SO(" + N2 + ")", cartan_data({RootType::C, n}), coroot()));
    out.push_back(make_dual_pair("Spin(" + N2 + ")/PSp(" + N + ")", cartan_data({RootType::B, n}), coroot()));
  }
  for (int n = 4; n <= max_rank; ++n) {
    const auto d = cartan_data({RootType::D, n});
    const std::string M = std::to_string(2 * n);
    out.push_back(make_dual_pair("Spin(" + M + ")/PSO(" + M + ")", d, coroot()));
    out.push_back(make_dual_pair("SO(" + M + ")/SO(" + M + ")", d, {"vector quotient", {unit(n, 0)}}));
    if (n % 2 == 0) {
      const char* partner = n % 4 == 0 ? "Ss(" : "Sc(";
      out.push_back(make_dual_pair("Ss(" + M + ")/" + partner + M + ")", d, {"spinor quotient", {unit(n, n - 1)}}));
      out.push_back(make_dual_pair("Sc(" + M + ")/" + (n % 4 == 0 ? std::string("Sc(") : std::string("Ss(")) + M + ")", d,
                                   {"cospinor quotient", {unit(n, n - 2)}}));
    }
  }
  if (max_rank >= 2) out.push_back(make_dual_pair("G2", cartan_data({RootType::G, 2}), coroot()));
  if (max_rank >= 4) out.push_back(make_dual_pair("F4", cartan_data({RootType::F, 4}), coroot()));
  if (max_rank >= 6) {
    out.push_back(make_dual_pair("E6/E6adj", cartan_data({RootType::E, 6}), coroot()));
    out.push_back(make_dual_pair("E6adj/E6", cartan_data({RootType::E, 6}), coweight(6)));
  }
  if (max_rank >= 7) {
    out.push_back(make_dual_pair("E7/E7adj", cartan_data({RootType::E, 7}), coroot()));
    out.push_back(make_dual_pair("E7adj/E7", cartan_data({RootType::E, 7}), coweight(7)));
  }
  if (max_rank >= 8) out.push_back(make_dual_pair("E8", cartan_data({RootType::E, 8}), coroot()));
  return out;
}

ZnDualityResult zn_duality(const DualPair& pair, int n) {
  if (!same_lattice(pair.dual, pair.dual_lattice, annihilator(pair.g, pair.g_lattice)))
    throw std::invalid_argument("non-dual pair: " + pair.name);
  ZnDualityResult r;
  r.count = weyl_orbit_count(pair.g, pair.g_lattice, n);
  r.dual_count = weyl_orbit_count(pair.dual, pair.dual_lattice, n);
  r.agree = r.count == r.dual_count;
  return r;
}

bool verify_zn_duality(const DualPair& pair, int n) { return zn_duality(pair, n).agree; }

}  // namespace dualcount
