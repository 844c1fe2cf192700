#include <map>
#include <numeric>
#include <stdexcept>

#include "dualcount/errors.hpp"
#include "dualcount/lattice.hpp"

namespace dualcount {

namespace {

IntVector add(IntVector a, const IntVector& b, std::int64_t scale = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += scale * b[i];
  return a;
}

/// Coordinates of v in the row basis b (throws if v is outside the lattice).
IntVector coordinates(const IntMatrix& b, const IntVector& v) {
  const auto bt_inv = inverse(to_rational(transpose(b)));
  IntVector y(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpq_class s = 0;
    for (std::size_t j = 0; j < v.size(); ++j) s += (*bt_inv)[i][j] * static_cast<long>(v[j]);
    if (s.get_den() != 1) throw std::invalid_argument("vector outside lattice");
    y[i] = s.get_num().get_si();
  }
  return y;
}

/// Elements of (rowspan outer)/(rowspan inner) as ambient vectors reduced modulo inner's Hermite basis.
std::vector<IntVector> quotient_elements(const IntMatrix& outer, const IntMatrix& inner) {
  const int r = static_cast<int>(outer.size());
  IntMatrix k;
  for (auto& row : inner) k.push_back(coordinates(outer, row));
  const IntMatrix h = hermite_row_basis(k, r);
  std::vector<IntVector> out;
  IntVector y(r, 0);
  while (true) {
    IntVector v(r, 0);
    for (int i = 0; i < r; ++i) v = add(v, outer[i], y[i]);
    out.push_back(reduce_mod_hermite(v, inner));
    int i = 0;
    for (; i < r; ++i) {
      if (++y[i] < h[i][i]) break;
      y[i] = 0;
    }
    if (i == r) break;
  }
  return out;
}

int find_vector(const std::vector<IntVector>& list, const IntVector& v) {
  for (std::size_t i = 0; i < list.size(); ++i)
    if (list[i] == v) return static_cast<int>(i);
  throw std::logic_error("vector not found in quotient");
}

struct PointSpace {
  IntMatrix outer_basis;  // N^*
  IntMatrix inner_basis;  // M^*
  IntMatrix box;          // Hermite basis of nM^* in N^*-coordinates
  std::uint64_t size = 1;

  std::uint64_t index(const IntVector& y) const {
    std::uint64_t idx = 0, radix = 1;
    for (std::size_t i = 0; i < y.size(); ++i) {
      idx += static_cast<std::uint64_t>(y[i]) * radix;
      radix *= static_cast<std::uint64_t>(box[i][i]);
    }
    return idx;
  }
  IntVector point(std::uint64_t idx) const {
    IntVector y(box.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
      y[i] = static_cast<std::int64_t>(idx % box[i][i]);
      idx /= box[i][i];
    }
    return y;
  }
  IntVector coweight(const IntVector& y) const {
    IntVector v(y.size(), 0);
    for (std::size_t i = 0; i < y.size(); ++i) v = add(v, outer_basis[i], y[i]);
    return v;
  }
};

PointSpace point_space(const RefinedLatticeData& data, int n) {
  PointSpace s;
  s.outer_basis = lattice_basis(data.cartan, data.outer);
  s.inner_basis = lattice_basis(data.cartan, data.inner);
  IntMatrix k;
  for (auto& row : s.inner_basis) {
    IntVector c;
    try {
      c = coordinates(s.outer_basis, row);
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("inner lattice " + data.inner.name + " is not contained in " + data.outer.name);
    }
    for (auto& v : c) v *= n;
    k.push_back(c);
  }
  s.box = hermite_row_basis(k, data.cartan.rank);
  for (int i = 0; i < data.cartan.rank; ++i) {
    s.size *= static_cast<std::uint64_t>(s.box[i][i]);
    if (s.size > 20'000'000) throw Unsupported("refined point set too large");
  }
  return s;
}

mpz_class to_mpz(std::uint64_t v) { return mpz_class(std::to_string(v)); }

}  // namespace

GradedOrbitSet graded_orbits(const RefinedLatticeData& data, int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  const PointSpace s = point_space(data, n);
  const LatticeRealization w = realize(data.cartan, data.outer);
  GradedOrbitSet out;
  out.n = n;
  out.z_elements = quotient_elements(s.outer_basis, s.inner_basis);
  std::map<IntVector, int> grade_of;
  for (std::size_t i = 0; i < out.z_elements.size(); ++i) grade_of[out.z_elements[i]] = static_cast<int>(i);

  std::vector<bool> seen(s.size, false);
  for (std::uint64_t seed = 0; seed < s.size; ++seed) {
    if (seen[seed]) continue;
    seen[seed] = true;
    std::vector<std::uint64_t> orbit{seed};
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      const IntVector y = s.point(orbit[head]);
      for (const auto& g : w.generators) {
        const auto image = s.index(reduce_mod_hermite(multiply(g, y), s.box));
        if (!seen[image]) {
          seen[image] = true;
          orbit.push_back(image);
        }
      }
    }
    const IntVector key = reduce_mod_hermite(s.coweight(s.point(seed)), s.inner_basis);
    // W acts trivially on Z, so the whole orbit shares one grade.
    for (auto p : orbit)
      if (reduce_mod_hermite(s.coweight(s.point(p)), s.inner_basis) != key)
        throw VerificationFailure("grading is not W-invariant");
    out.grade.push_back(grade_of.at(key));
    out.orbits.push_back(std::move(orbit));
  }
  return out;
}

LatticeFRep refined_zn_characters(const RefinedLatticeData& data, int n) {
  const PointSpace s = point_space(data, n);
  const GradedOrbitSet orbits = graded_orbits(data, n);
  const auto& zs = orbits.z_elements;
  const CartanData dual = dual_cartan(data.cartan);
  const IntMatrix m_basis = lattice_basis(dual, annihilator(data.cartan, data.inner));
  const IntMatrix n_basis = lattice_basis(dual, annihilator(data.cartan, data.outer));
  const auto bs = quotient_elements(m_basis, n_basis);

  LatticeFRep out;
  std::vector<int> h1_index;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    IntVector nz = zs[i];
    for (auto& v : nz) v *= n;
    if (reduce_mod_hermite(nz, s.inner_basis) == IntVector(nz.size(), 0)) {
      out.h1.push_back(zs[i]);
      h1_index.push_back(static_cast<int>(i));
    }
  }
  for (auto& b : bs) {
    IntVector nb = b;
    for (auto& v : nb) v *= n;
    if (reduce_mod_hermite(nb, n_basis) == IntVector(nb.size(), 0)) out.h2_dual.push_back(b);
  }

  // Classes of Z/nZ; the first element met in index order represents its class.
  std::vector<int> class_of(zs.size(), -1);
  std::vector<int> class_rep;
  for (std::size_t i = 0; i < zs.size(); ++i) {
    if (class_of[i] >= 0) continue;
    const int c = static_cast<int>(class_rep.size());
    class_rep.push_back(static_cast<int>(i));
    for (auto& y : zs) class_of[find_vector(zs, reduce_mod_hermite(add(zs[i], y, n), s.inner_basis))] = c;
  }

  std::map<std::uint64_t, std::size_t> orbit_of;
  for (std::size_t o = 0; o < orbits.orbits.size(); ++o)
    for (auto p : orbits.orbits[o]) orbit_of[p] = o;

  // fixed[z][g]: orbits of grade g preserved by translation with z.
  std::vector<std::vector<std::uint64_t>> fixed(out.h1.size(), std::vector<std::uint64_t>(zs.size(), 0));
  for (std::size_t zi = 0; zi < out.h1.size(); ++zi) {
    const IntVector shift = coordinates(s.outer_basis, out.h1[zi]);
    for (std::size_t o = 0; o < orbits.orbits.size(); ++o) {
      const IntVector y = s.point(orbits.orbits[o][0]);
      const auto moved = s.index(reduce_mod_hermite(add(y, shift, n), s.box));
      if (orbit_of.at(moved) == o) ++fixed[zi][orbits.grade[o]];
    }
  }
  for (std::size_t zi = 0; zi < fixed.size(); ++zi)
    for (std::size_t g = 0; g < zs.size(); ++g)
      if (fixed[zi][g] != fixed[zi][class_rep[class_of[g]]])
        throw VerificationFailure("sector multiplicities differ within an nZ coset");

  std::int64_t order = 1;
  for (auto& b : out.h2_dual)
    for (int rep : class_rep) {
      const mpq_class p = data.cartan.pairing(b, zs[rep]);
      order = std::lcm(order, p.get_den().get_si());
    }

  for (int rep : class_rep) {
    out.sectors.push_back(zs[rep]);
    out.sector_dims.push_back(to_mpz(fixed.empty() ? 0 : fixed[0][rep]));
  }
  for (std::size_t zi = 0; zi < out.h1.size(); ++zi) {
    std::vector<Cyclotomic> row;
    for (auto& b : out.h2_dual) {
      Cyclotomic v(static_cast<int>(order));
      for (int rep : class_rep) {
        mpq_class p = data.cartan.pairing(b, zs[rep]) * static_cast<long>(order);
        v += Cyclotomic::root(static_cast<int>(order), p.get_num().get_si()) * static_cast<std::int64_t>(fixed[zi][rep]);
      }
      row.push_back(v);
    }
    out.value.push_back(std::move(row));
  }
  return out;
}

RefinedLatticeData dual_refined_data(const RefinedLatticeData& data) {
  return {dual_cartan(data.cartan), annihilator(data.cartan, data.outer), annihilator(data.cartan, data.inner)};
}

LatticeSwapReport compare_swapped(const RefinedLatticeData& data, int n) {
  const auto g = refined_zn_characters(data, n);
  const auto dual_data = dual_refined_data(data);
  const auto h = refined_zn_characters(dual_data, n);
  if (g.h1.size() != h.h2_dual.size() || g.h2_dual.size() != h.h1.size()) return {};
  const IntMatrix m_star = lattice_basis(data.cartan, data.inner);
  LatticeSwapReport r{true, true};
  for (std::size_t zi = 0; zi < g.h1.size(); ++zi) {
    IntVector neg = g.h1[zi];
    for (auto& v : neg) v = -v;
    const int direct = find_vector(h.h2_dual, g.h1[zi]);
    const int inverse = find_vector(h.h2_dual, reduce_mod_hermite(neg, m_star));
    for (std::size_t bi = 0; bi < g.h2_dual.size(); ++bi) {
      const int row = find_vector(h.h1, g.h2_dual[bi]);
      r.direct = r.direct && g.value[zi][bi] == h.value[row][direct];
      r.inverse = r.inverse && g.value[zi][bi] == h.value[row][inverse];
    }
  }
  return r;
}

}  // namespace dualcount
