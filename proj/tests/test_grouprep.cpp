#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <set>

#include "dualcount/errors.hpp"
#include "dualcount/grouprep.hpp"

using namespace dualcount;
using C = std::complex<double>;

namespace {

const std::vector<GroupSpec> kFamilies{GroupSpec::cyclic(5), GroupSpec::cyclic(8), GroupSpec::binary_dihedral(2),
                                       GroupSpec::binary_dihedral(5), GroupSpec::binary_dihedral(6),
                                       GroupSpec::tetrahedral(), GroupSpec::octahedral(), GroupSpec::icosahedral()};

std::vector<std::vector<C>> numeric_table(const GroupData& d) {
  std::vector<std::vector<C>> t;
  for (const auto& row : d.table().chi) {
    std::vector<C> r;
    for (const auto& x : row) r.push_back(x.to_complex());
    t.push_back(r);
  }
  return t;
}

bool same_row(const std::vector<C>& a, const std::vector<C>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  return true;
}

/// Every hand row occurs in the library table and vice versa.
void check_table(const GroupSpec& g, const std::vector<std::vector<C>>& hand, const std::vector<int>& sizes) {
  const auto d = group_data(g);
  CHECK(d->table().class_sizes == sizes);
  const auto lib = numeric_table(*d);
  REQUIRE(lib.size() == hand.size());
  for (const auto& row : hand)
    CHECK(std::any_of(lib.begin(), lib.end(), [&](const auto& r) { return same_row(r, row); }));
}

// Unit quaternions (w, x, y, z) as a numeric model of the binary polyhedral groups.
using Quat = std::array<double, 4>;

Quat mul(const Quat& a, const Quat& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3], a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1], a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}
Quat conj(const Quat& a) { return {a[0], -a[1], -a[2], -a[3]}; }
bool close(const Quat& a, const Quat& b) {
  for (int i = 0; i < 4; ++i)
    if (std::abs(a[i] - b[i]) > 1e-9) return false;
  return true;
}

std::vector<Quat> closure(const std::vector<Quat>& gens) {
  std::vector<Quat> elems{{1, 0, 0, 0}};
  for (std::size_t head = 0; head < elems.size(); ++head)
    for (const auto& g : gens) {
      const Quat p = mul(elems[head], g);
      if (std::none_of(elems.begin(), elems.end(), [&](const Quat& e) { return close(e, p); })) elems.push_back(p);
    }
  return elems;
}

struct NumericClasses {
  std::vector<int> sizes;
  std::vector<double> traces;  // of the defining representation, 2 Re q
};

NumericClasses classes_of(const std::vector<Quat>& elems) {
  std::vector<int> cls(elems.size(), -1);
  NumericClasses out;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (cls[i] >= 0) continue;
    const int id = static_cast<int>(out.sizes.size());
    int size = 0;
    for (const auto& g : elems) {
      const Quat c = mul(mul(g, elems[i]), conj(g));
      for (std::size_t j = 0; j < elems.size(); ++j)
        if (cls[j] < 0 && close(elems[j], c)) cls[j] = id, ++size;
    }
    out.sizes.push_back(size);
    out.traces.push_back(2 * elems[i][0]);
  }
  return out;
}

std::vector<Quat> quaternion_model(const GroupSpec& g) {
  const double s = std::sqrt(0.5), phi = (1 + std::sqrt(5.0)) / 2;
  const Quat t{0.5, 0.5, 0.5, 0.5}, i{0, 1, 0, 0}, j{0, 0, 1, 0};
  switch (g.kind) {
    case GroupKind::BinaryDihedral: {
      const double a = M_PI / g.param;
      return closure({{std::cos(a), std::sin(a), 0, 0}, j});
    }
    case GroupKind::BinaryTetrahedral: return closure({i, t});
    case GroupKind::BinaryOctahedral: return closure({t, {s, s, 0, 0}});
    case GroupKind::BinaryIcosahedral: return closure({i, t, {phi / 2, 1 / (2 * phi), 0.5, 0}});
    case GroupKind::Cyclic: {
      const double a = 2 * M_PI / g.param;
      return closure({{std::cos(a), std::sin(a), 0, 0}});
    }
  }
  return {};
}

}  // namespace

TEST_SUITE("grouprep") {
  TEST_CASE("Z3 and Z4 tables match the hand tables") {
    for (int n : {3, 4}) {
      std::vector<std::vector<C>> hand;
      for (int k = 0; k < n; ++k) {
        std::vector<C> row;
        for (int j = 0; j < n; ++j) row.push_back(std::polar(1.0, 2 * M_PI * j * k / n));
        hand.push_back(row);
      }
      check_table(GroupSpec::cyclic(n), hand, std::vector<int>(n, 1));
    }
  }

  TEST_CASE("quaternion group table matches the hand table") {
    // classes 1, -1, ±b, ±a, ±ab
    check_table(GroupSpec::binary_dihedral(2),
                {{1, 1, 1, 1, 1}, {1, 1, 1, -1, -1}, {1, 1, -1, 1, -1}, {1, 1, -1, -1, 1}, {2, -2, 0, 0, 0}},
                {1, 1, 2, 2, 2});
    const auto d = group_data(GroupSpec::binary_dihedral(2));
    CHECK(d->irrep(d->index_of("2_1")).reality == Reality::Pseudoreal);
  }

  TEST_CASE("dicyclic group of order 12 matches the hand table") {
    const C i(0, 1);
    // classes 1, -1, {b, b^5}, {b^2, b^4}, a-coset halves
    check_table(GroupSpec::binary_dihedral(3),
                {{1, 1, 1, 1, 1, 1},
                 {1, 1, 1, 1, -1, -1},
                 {1, -1, -1, 1, i, -i},
                 {1, -1, -1, 1, -i, i},
                 {2, -2, 1, -1, 0, 0},
                 {2, 2, -1, -1, 0, 0}},
                {1, 1, 2, 2, 3, 3});
    const auto d = group_data(GroupSpec::binary_dihedral(3));
    std::multiset<Reality> kinds;
    for (const auto& r : d->irreps()) kinds.insert(r.reality);
    CHECK(kinds.count(Reality::ComplexPair) == 2);
    CHECK(kinds.count(Reality::Pseudoreal) == 1);
    CHECK(kinds.count(Reality::StrictlyReal) == 3);
  }

  TEST_CASE("class data agrees with an explicit quaternion model") {
    for (const auto& g : kFamilies) {
      CAPTURE(g.to_string());
      const auto elems = quaternion_model(g);
      REQUIRE(static_cast<int>(elems.size()) == g.order());
      const auto num = classes_of(elems);
      const auto d = group_data(g);
      std::multiset<std::pair<int, long>> lib_keys, num_keys;
      for (std::size_t c = 0; c < d->table().class_sizes.size(); ++c)
        lib_keys.insert({d->table().class_sizes[c], std::lround(1e6 * d->defining_character()[c].to_complex().real())});
      for (std::size_t c = 0; c < num.sizes.size(); ++c) num_keys.insert({num.sizes[c], std::lround(1e6 * num.traces[c])});
      CHECK(lib_keys == num_keys);
    }
  }

  TEST_CASE("symmetric powers decompose with nonnegative integer multiplicities") {
    for (const auto& g : kFamilies) {
      CAPTURE(g.to_string());
      const auto d = group_data(g);
      const auto& table = d->table();
      for (int k = 0; k <= 12; ++k) {
        // χ_{Sym^k V}(g) = Σ_{j=0..k} λ^{k-2j} for eigenvalues λ^{±1}.
        std::vector<C> chi;
        for (const auto& t : d->defining_character()) {
          const C tr = t.to_complex();
          const C lambda = std::polar(1.0, std::acos(std::clamp(tr.real() / 2, -1.0, 1.0)));
          C s = 0;
          for (int j = 0; j <= k; ++j) s += std::pow(lambda, k - 2 * j);
          chi.push_back(s);
        }
        for (int irrep = 0; irrep < d->size(); ++irrep) {
          C m = 0;
          for (std::size_t c = 0; c < chi.size(); ++c)
            m += double(table.class_sizes[c]) * chi[c] * std::conj(table.chi[irrep][c].to_complex());
          m /= double(g.order());
          CHECK(std::abs(m.imag()) < 1e-9);
          CHECK(std::abs(m.real() - std::round(m.real())) < 1e-9);
          CHECK(m.real() > -1e-9);
        }
      }
    }
  }

  TEST_CASE("sum of squared dimensions equals the group order") {
    for (int n = 1; n <= 16; ++n) {
      int s = 0;
      for (const auto& r : irreps(GroupSpec::cyclic(n))) s += r.dim * r.dim;
      CHECK(s == n);
    }
    for (int m = 2; m <= 10; ++m) {
      int s = 0;
      for (const auto& r : irreps(GroupSpec::binary_dihedral(m))) s += r.dim * r.dim;
      CHECK(s == 4 * m);
    }
    for (const auto& g : {GroupSpec::tetrahedral(), GroupSpec::octahedral(), GroupSpec::icosahedral()}) {
      int s = 0;
      for (const auto& r : irreps(g)) s += r.dim * r.dim;
      CHECK(s == g.order());
    }
  }

  TEST_CASE("column orthogonality") {
    for (const auto& g : kFamilies) {
      const auto d = group_data(g);
      const auto& t = d->table();
      for (std::size_t a = 0; a < t.class_sizes.size(); ++a)
        for (std::size_t b = 0; b < t.class_sizes.size(); ++b) {
          Cyclotomic s;
          for (int i = 0; i < d->size(); ++i) s += t.chi[i][a] * t.chi[i][b].conj();
          const std::int64_t expect = a == b ? g.order() / t.class_sizes[a] : 0;
          CHECK(s.as_integer() == expect);
        }
    }
  }

  TEST_CASE("Frobenius-Schur indicator agrees with the reality label") {
    for (const auto& g : kFamilies) {
      const auto d = group_data(g);
      for (int i = 0; i < d->size(); ++i) {
        const int fs = d->frobenius_schur(i);
        const Reality r = d->irrep(i).reality;
        CHECK(fs == (r == Reality::StrictlyReal ? 1 : r == Reality::Pseudoreal ? -1 : 0));
        CHECK(d->irrep(i).partner.has_value() == (r == Reality::ComplexPair));
      }
    }
  }

  TEST_CASE("determinant characters agree with the table") {
    for (const auto& g : kFamilies) {
      const auto d = group_data(g);
      for (int i = 0; i < d->size(); ++i) {
        const auto from_table = d->det_from_table(i);
        if (from_table) CHECK(*from_table == d->one_dim_irrep(d->irrep(i).det_char));
      }
    }
  }

  TEST_CASE("octahedral abelianization and twisted irreps") {
    const auto d = group_data(GroupSpec::octahedral());
    CHECK(d->abelian().order() == 2);
    const auto tw = twisted_irreps(GroupSpec::octahedral());
    int s = 0;
    for (const auto& t : tw) s += t.dim * t.dim;
    CHECK(s == 48);
    CHECK_THROWS_AS(twisted_irreps(GroupSpec::tetrahedral()), Unsupported);
  }

  TEST_CASE("Stiefel-Whitney classes of octahedral irreps") {
    const GroupSpec o = GroupSpec::octahedral();
    CHECK(sw_class(o, "1") == SWClass{0, 0});
    CHECK(sw_class(o, "1'") == SWClass{1, 0});
    CHECK(sw_class(o, "2''") == SWClass{1, 0});
    CHECK(sw_class(o, "3'") == SWClass{1, 1});
    CHECK(sw_class(o, "3") == SWClass{0, 0});
    // Cartan formula in Z_2[y]/(y^3) is associative and (1+y)^2 = 1+y^2.
    CHECK(SWClass{1, 0}.pow(2) == SWClass{0, 1});
    CHECK(SWClass{1, 1}.inverse() * SWClass{1, 1} == SWClass{});
  }

  TEST_CASE("group spec parsing round-trips") {
    for (const auto& g : kFamilies) CHECK(GroupSpec::parse(g.to_string()) == g);
    CHECK_THROWS(GroupSpec::parse("Dhat:1"));
    CHECK_THROWS(GroupSpec::parse("Z:0"));
    CHECK_THROWS(GroupSpec::parse("Qhat"));
  }

  TEST_CASE("cohomology sizes") {
    const auto h1 = cohomology(GroupSpec::octahedral(), 1, 2);
    const auto h2 = cohomology(GroupSpec::octahedral(), 2, 2);
    CHECK(h1.representatives.size() == 2);
    CHECK(h2.representatives.size() == 2);
    CHECK(cohomology(GroupSpec::icosahedral(), 2, 2).representatives.size() == 1);
    CHECK(cohomology(GroupSpec::binary_dihedral(2), 1, 2).representatives.size() == 4);
  }
}
