#include <stdexcept>

#include "builder.hpp"

namespace dualcount::detail {

namespace {

using Row = std::vector<Cyclotomic>;

Cyclotomic cy(int order, std::initializer_list<std::int64_t> powers_coeff) {
  Cyclotomic c(order);
  int k = 0;
  for (auto v : powers_coeff) {
    if (v != 0) c += Cyclotomic::root(order, k) * v;
    ++k;
  }
  return c;
}

Row ints(int order, std::initializer_list<std::int64_t> values) {
  Row r;
  for (auto v : values) r.push_back(Cyclotomic::integer(order, v));
  return r;
}

Row sum_rows(const Row& a, const Row& b) {
  Row r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] += b[k];
  return r;
}

TableSpec cyclic_table(int n) {
  TableSpec t;
  t.table.cyclotomic_order = n;
  for (int j = 0; j < n; ++j) {
    t.table.class_names.push_back("a^" + std::to_string(j));
    t.table.class_sizes.push_back(1);
    t.table.square_class.push_back((2 * j) % n);
  }
  for (int k = 0; k < n; ++k) {
    t.names.push_back("r" + std::to_string(k));
    t.dims.push_back(1);
    const bool self_conjugate = (2 * k) % n == 0;
    t.declared_reality.push_back(self_conjugate ? Reality::StrictlyReal : Reality::ComplexPair);
    t.det_names.push_back(t.names.back());
    Row row;
    for (int j = 0; j < n; ++j) row.push_back(Cyclotomic::root(n, static_cast<std::int64_t>(k) * j));
    t.table.chi.push_back(row);
  }
  if (n >= 2) {
    t.abelian_factors = {n};
    t.abelian_generators = {"r1"};
  }
  t.defining = sum_rows(t.table.chi[1 % n], t.table.chi[(n - 1) % n]);
  return t;
}

// Binary dihedral group of order 4m: a^2 = b^m = -1, a b a^{-1} = b^{-1}.
// Exponents are taken in Z_{4m}: α = e^{πi/m} = ζ^2, i = ζ^m, -1 = ζ^{2m}.
TableSpec dihedral_table(int m) {
  const int N = 4 * m;
  TableSpec t;
  auto& tab = t.table;
  tab.cyclotomic_order = N;
  // classes: e, -e, b^j (1 <= j < m), a, ab
  tab.class_names = {"1", "-1"};
  tab.class_sizes = {1, 1};
  std::vector<int> b_power = {0, m};
  for (int j = 1; j < m; ++j) {
    tab.class_names.push_back("b^" + std::to_string(j));
    tab.class_sizes.push_back(2);
    b_power.push_back(j);
  }
  tab.class_names.push_back("a");
  tab.class_names.push_back("ab");
  tab.class_sizes.push_back(m);
  tab.class_sizes.push_back(m);
  const int num_classes = static_cast<int>(tab.class_names.size());
  const int class_a0 = num_classes - 2;

  auto class_of_b_power = [&](int j) {
    j = ((j % (2 * m)) + 2 * m) % (2 * m);
    if (j == 0) return 0;
    if (j == m) return 1;
    return 1 + (j < m ? j : 2 * m - j);
  };
  for (int c = 0; c < num_classes; ++c)
    tab.square_class.push_back(c < class_a0 ? class_of_b_power(2 * b_power[c]) : 1);

  // one-dimensional: (exponent of i on a, sign exponent on b)
  auto one_dim_row = [&](int ea, int eb) {
    Row row;
    for (int c = 0; c < class_a0; ++c) row.push_back(Cyclotomic::root(N, 2L * m * eb * b_power[c]));
    row.push_back(Cyclotomic::root(N, static_cast<long>(m) * ea));
    row.push_back(Cyclotomic::root(N, static_cast<long>(m) * ea + 2L * m * eb));
    return row;
  };
  auto two_dim_row = [&](int k) {
    Row row;
    for (int c = 0; c < class_a0; ++c)
      row.push_back(Cyclotomic::root(N, 2L * k * b_power[c]) + Cyclotomic::root(N, -2L * k * b_power[c]));
    row.push_back(Cyclotomic(N));
    row.push_back(Cyclotomic(N));
    return row;
  };

  const bool even = m % 2 == 0;
  auto add = [&](std::string name, int dim, Reality r, std::string det, Row row) {
    t.names.push_back(std::move(name));
    t.dims.push_back(dim);
    t.declared_reality.push_back(r);
    t.det_names.push_back(std::move(det));
    tab.chi.push_back(std::move(row));
  };
  add("1", 1, Reality::StrictlyReal, "1", one_dim_row(0, 0));
  for (int k = 1; k < m; ++k)
    add("2_" + std::to_string(k), 2, k % 2 ? Reality::Pseudoreal : Reality::StrictlyReal, k % 2 ? "1" : "1'",
        two_dim_row(k));
  const Reality r34 = even ? Reality::StrictlyReal : Reality::ComplexPair;
  add("1'''", 1, r34, "1'''", one_dim_row((m + 2) % 4, 1));
  add("1'", 1, Reality::StrictlyReal, "1'", one_dim_row(2, 0));
  add("1''", 1, r34, "1''", one_dim_row(m % 4, 1));

  if (even) {
    t.abelian_factors = {2, 2};
    t.abelian_generators = {"1'", "1''"};
  } else {
    t.abelian_factors = {4};
    t.abelian_generators = {"1''"};
  }
  t.defining = two_dim_row(1);
  return t;
}

TableSpec tetrahedral_table() {
  const int N = 3;
  TableSpec t;
  auto& tab = t.table;
  tab.cyclotomic_order = N;
  tab.class_names = {"1", "-1", "4", "3a", "3b", "6a", "6b"};
  tab.class_sizes = {1, 1, 6, 4, 4, 4, 4};
  tab.square_class = {0, 0, 1, 4, 3, 4, 3};
  const Cyclotomic one = Cyclotomic::integer(N, 1), w = cy(N, {0, 1}), w2 = cy(N, {0, 0, 1});
  auto I = [&](std::int64_t v) { return Cyclotomic::integer(N, v); };
  t.names = {"1", "2", "3", "2'", "1'", "2''", "1''"};
  t.dims = {1, 2, 3, 2, 1, 2, 1};
  t.declared_reality = {Reality::StrictlyReal, Reality::Pseudoreal, Reality::StrictlyReal, Reality::ComplexPair,
                        Reality::ComplexPair,  Reality::ComplexPair, Reality::ComplexPair};
  t.det_names = {"1", "1", "1", "1''", "1'", "1'", "1''"};
  tab.chi = {
      ints(N, {1, 1, 1, 1, 1, 1, 1}),
      ints(N, {2, -2, 0, -1, -1, 1, 1}),
      ints(N, {3, 3, -1, 0, 0, 0, 0}),
      {I(2), I(-2), I(0), -w, -w2, w, w2},
      {one, one, one, w, w2, w, w2},
      {I(2), I(-2), I(0), -w2, -w, w2, w},
      {one, one, one, w2, w, w2, w},
  };
  t.abelian_factors = {3};
  t.abelian_generators = {"1'"};
  t.defining = tab.chi[1];
  return t;
}

TableSpec octahedral_table() {
  const int N = 8;
  TableSpec t;
  auto& tab = t.table;
  tab.cyclotomic_order = N;
  tab.class_names = {"1", "-1", "8a", "8b", "4a", "4b", "6", "3"};
  tab.class_sizes = {1, 1, 6, 6, 6, 12, 8, 8};
  tab.square_class = {0, 0, 4, 4, 1, 1, 7, 7};
  const Cyclotomic s = cy(N, {0, 1, 0, 0, 0, 0, 0, 1});
  auto I = [&](std::int64_t v) { return Cyclotomic::integer(N, v); };
  t.names = {"1", "2", "3", "4", "3'", "2'", "1'", "2''"};
  t.dims = {1, 2, 3, 4, 3, 2, 1, 2};
  t.declared_reality = {Reality::StrictlyReal, Reality::Pseudoreal, Reality::StrictlyReal, Reality::Pseudoreal,
                        Reality::StrictlyReal, Reality::Pseudoreal, Reality::StrictlyReal, Reality::StrictlyReal};
  t.det_names = {"1", "1", "1", "1", "1'", "1", "1'", "1'"};
  tab.chi = {
      ints(N, {1, 1, 1, 1, 1, 1, 1, 1}),
      {I(2), I(-2), s, -s, I(0), I(0), I(1), I(-1)},
      ints(N, {3, 3, 1, 1, -1, -1, 0, 0}),
      ints(N, {4, -4, 0, 0, 0, 0, -1, 1}),
      ints(N, {3, 3, -1, -1, -1, 1, 0, 0}),
      {I(2), I(-2), -s, s, I(0), I(0), I(1), I(-1)},
      ints(N, {1, 1, -1, -1, 1, -1, 1, 1}),
      ints(N, {2, 2, 0, 0, 2, 0, -1, -1}),
  };
  t.abelian_factors = {2};
  t.abelian_generators = {"1'"};
  t.defining = tab.chi[1];
  return t;
}

TableSpec icosahedral_table() {
  const int N = 5;
  TableSpec t;
  auto& tab = t.table;
  tab.cyclotomic_order = N;
  tab.class_names = {"1", "-1", "4", "6", "3", "10a", "10b", "5a", "5b"};
  tab.class_sizes = {1, 1, 30, 20, 20, 12, 12, 12, 12};
  tab.square_class = {0, 0, 1, 4, 4, 7, 8, 8, 7};
  const Cyclotomic p = cy(N, {1, 1, 0, 0, 1});  // golden ratio
  const Cyclotomic q = cy(N, {0, -1, 0, 0, -1});  // 1 - golden ratio
  auto I = [&](std::int64_t v) { return Cyclotomic::integer(N, v); };
  t.names = {"1", "2", "3", "4", "5", "6", "4'", "2'", "3'"};
  t.dims = {1, 2, 3, 4, 5, 6, 4, 2, 3};
  t.declared_reality = {Reality::StrictlyReal, Reality::Pseudoreal, Reality::StrictlyReal,
                        Reality::Pseudoreal,   Reality::StrictlyReal, Reality::Pseudoreal,
                        Reality::StrictlyReal, Reality::Pseudoreal,   Reality::StrictlyReal};
  t.det_names = std::vector<std::string>(9, "1");
  tab.chi = {
      ints(N, {1, 1, 1, 1, 1, 1, 1, 1, 1}),
      {I(2), I(-2), I(0), I(1), I(-1), p, q, -q, -p},
      {I(3), I(3), I(-1), I(0), I(0), p, q, q, p},
      ints(N, {4, -4, 0, -1, 1, 1, 1, -1, -1}),
      ints(N, {5, 5, 1, -1, -1, 0, 0, 0, 0}),
      ints(N, {6, -6, 0, 0, 0, -1, -1, 1, 1}),
      ints(N, {4, 4, 0, 1, 1, -1, -1, -1, -1}),
      {I(2), I(-2), I(0), I(1), I(-1), q, p, -p, -q},
      {I(3), I(3), I(-1), I(0), I(0), q, p, p, q},
  };
  t.defining = tab.chi[1];
  return t;
}

}  // namespace

TableSpec build_table(const GroupSpec& g) {
  switch (g.kind) {
    case GroupKind::Cyclic: return cyclic_table(g.param);
    case GroupKind::BinaryDihedral: return dihedral_table(g.param);
    case GroupKind::BinaryTetrahedral: return tetrahedral_table();
    case GroupKind::BinaryOctahedral: return octahedral_table();
    case GroupKind::BinaryIcosahedral: return icosahedral_table();
  }
  throw std::invalid_argument("unknown group kind");
}

}  // namespace dualcount::detail
