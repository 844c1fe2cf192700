#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "builder.hpp"
#include "dualcount/errors.hpp"

namespace dualcount {

namespace {

using Row = std::vector<Cyclotomic>;

std::vector<std::int64_t> row_key(const Row& row, int order) {
  std::vector<std::int64_t> key;
  for (auto& v : row) {
    auto r = v.lifted(order).reduced();
    key.insert(key.end(), r.begin(), r.end());
  }
  return key;
}

Row product(const Row& a, const Row& b) {
  Row r = a;
  for (std::size_t k = 0; k < r.size(); ++k) r[k] *= b[k];
  return r;
}

}  // namespace

GroupData::GroupData(const GroupSpec& spec) : spec_(spec) {
  auto raw = detail::build_table(spec);
  table_ = std::move(raw.table);
  defining_ = std::move(raw.defining);
  abelian_ = FiniteAbelianGroup(raw.abelian_factors);
  const int k = static_cast<int>(raw.names.size());
  for (int i = 0; i < k; ++i) {
    IrrepInfo info;
    info.name = raw.names[i];
    info.dim = raw.dims[i];
    info.reality = raw.declared_reality[i];
    info.node = i;
    irreps_.push_back(std::move(info));
  }

  const int N = table_.cyclotomic_order;
  const int classes = static_cast<int>(table_.class_sizes.size());
  if (std::accumulate(table_.class_sizes.begin(), table_.class_sizes.end(), 0) != order())
    throw VerificationFailure(spec.to_string() + ": class sizes do not sum to the group order");
  long dim_sq = 0;
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(table_.chi[i].size()) != classes)
      throw VerificationFailure(spec.to_string() + ": ragged character table");
    if (table_.chi[i][0].as_integer() != irreps_[i].dim)
      throw VerificationFailure(spec.to_string() + ": character at identity differs from dimension");
    dim_sq += static_cast<long>(irreps_[i].dim) * irreps_[i].dim;
  }
  if (dim_sq != order()) throw VerificationFailure(spec.to_string() + ": sum of squared dimensions differs from order");
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      if (multiplicity(table_.chi[i], j) != (i == j ? 1 : 0))
        throw VerificationFailure(spec.to_string() + ": characters " + irreps_[i].name + ", " + irreps_[j].name +
                                  " not orthonormal");

  std::map<std::vector<std::int64_t>, int> by_key;
  for (int i = 0; i < k; ++i) by_key.emplace(row_key(table_.chi[i], N), i);
  auto find_row = [&](const Row& row) {
    auto it = by_key.find(row_key(row, N));
    return it == by_key.end() ? -1 : it->second;
  };

  for (int i = 0; i < k; ++i) {
    Row conj_row;
    for (auto& v : table_.chi[i]) conj_row.push_back(v.conj());
    const int c = find_row(conj_row);
    if (c < 0) throw VerificationFailure(spec.to_string() + ": conjugate character missing");
    const int fs = frobenius_schur(i);
    const Reality computed = fs == 1 ? Reality::StrictlyReal : fs == -1 ? Reality::Pseudoreal : Reality::ComplexPair;
    if ((fs == 0) != (c != i) || computed != irreps_[i].reality)
      throw VerificationFailure(spec.to_string() + ": reality of " + irreps_[i].name + " disagrees with indicator");
    if (c != i) irreps_[i].partner = irreps_[c].name;
  }

  // A = one-dimensional irreps, coordinates given by the chosen generators.
  const auto& factors = abelian_.factors();
  one_dim_by_element_.assign(abelian_.order(), -1);
  for (std::size_t idx = 0; idx < abelian_.order(); ++idx) {
    const auto a = abelian_.element(idx);
    Row row = table_.chi[0];
    for (std::size_t g = 0; g < factors.size(); ++g)
      for (int e = 0; e < a[g]; ++e) row = product(row, table_.chi[index_of(raw.abelian_generators[g])]);
    const int irr = find_row(row);
    if (irr < 0 || irreps_[irr].dim != 1) throw VerificationFailure(spec.to_string() + ": abelian generators inconsistent");
    one_dim_by_element_[idx] = irr;
  }
  int one_dim_count = 0;
  for (auto& r : irreps_) one_dim_count += r.dim == 1;
  if (static_cast<std::size_t>(one_dim_count) != abelian_.order())
    throw VerificationFailure(spec.to_string() + ": abelianization order mismatch");
  for (std::size_t x = 0; x < abelian_.order(); ++x)
    for (std::size_t y = x + 1; y < abelian_.order(); ++y)
      if (one_dim_by_element_[x] == one_dim_by_element_[y])
        throw VerificationFailure(spec.to_string() + ": abelian generators do not generate");

  for (int i = 0; i < k; ++i) irreps_[i].det_char = one_dim_element(index_of(raw.det_names[i]));

  tensor_perm_.assign(abelian_.order(), std::vector<int>(k, -1));
  for (std::size_t idx = 0; idx < abelian_.order(); ++idx)
    for (int i = 0; i < k; ++i) {
      const int j = find_row(product(table_.chi[one_dim_by_element_[idx]], table_.chi[i]));
      if (j < 0) throw VerificationFailure(spec.to_string() + ": tensor with a character is not irreducible");
      tensor_perm_[idx][i] = j;
    }
}

int GroupData::index_of(std::string_view name) const {
  for (int i = 0; i < size(); ++i)
    if (irreps_[i].name == name) return i;
  throw std::invalid_argument("unknown irrep '" + std::string(name) + "' for " + spec_.to_string());
}

int GroupData::one_dim_irrep(const FiniteAbelianGroup::Element& a) const {
  return one_dim_by_element_.at(abelian_.index_of(a));
}

FiniteAbelianGroup::Element GroupData::one_dim_element(int irrep) const {
  for (std::size_t idx = 0; idx < one_dim_by_element_.size(); ++idx)
    if (one_dim_by_element_[idx] == irrep) return abelian_.element(idx);
  throw std::invalid_argument("irrep " + irreps_.at(irrep).name + " is not one-dimensional");
}

int GroupData::tensor_one_dim(const FiniteAbelianGroup::Element& a, int irrep) const {
  return tensor_perm_.at(abelian_.index_of(a)).at(irrep);
}

long GroupData::multiplicity(const std::vector<Cyclotomic>& chi, int irrep) const {
  Cyclotomic s(table_.cyclotomic_order);
  for (std::size_t c = 0; c < chi.size(); ++c) s += chi[c] * table_.chi[irrep][c].conj() * table_.class_sizes[c];
  auto v = s.as_integer();
  if (!v || *v % order() != 0) throw VerificationFailure("class function inner product is not an integer");
  return *v / order();
}

std::vector<long> GroupData::decompose(const std::vector<Cyclotomic>& chi) const {
  std::vector<long> out;
  for (int i = 0; i < size(); ++i) out.push_back(multiplicity(chi, i));
  return out;
}

std::vector<Cyclotomic> GroupData::tensor_character(int i, int j) const { return product(table_.chi[i], table_.chi[j]); }

int GroupData::frobenius_schur(int irrep) const {
  Cyclotomic s(table_.cyclotomic_order);
  for (std::size_t c = 0; c < table_.class_sizes.size(); ++c)
    s += table_.chi[irrep][table_.square_class[c]] * table_.class_sizes[c];
  auto v = s.as_integer();
  if (!v || *v % order() != 0) throw VerificationFailure("Frobenius-Schur sum is not a multiple of the order");
  return static_cast<int>(*v / order());
}

std::optional<int> GroupData::det_from_table(int irrep) const {
  const auto& chi = table_.chi[irrep];
  Row det;
  if (irreps_[irrep].dim == 1) return irrep;
  if (irreps_[irrep].dim != 2) return std::nullopt;
  for (std::size_t c = 0; c < chi.size(); ++c) {
    Cyclotomic v = chi[c] * chi[c] - chi[table_.square_class[c]];
    // divide by 2 exactly on the power basis after checking evenness of the reduced form
    auto red = v.reduced();
    Cyclotomic half(table_.cyclotomic_order);
    for (std::size_t p = 0; p < red.size(); ++p) {
      if (red[p] % 2 != 0) return std::nullopt;
      half += Cyclotomic::root(table_.cyclotomic_order, static_cast<long>(p)) * (red[p] / 2);
    }
    det.push_back(half);
  }
  for (int i = 0; i < size(); ++i) {
    if (irreps_[i].dim != 1) continue;
    bool same = true;
    for (std::size_t c = 0; c < det.size() && same; ++c) same = det[c] == table_.chi[i][c];
    if (same) return i;
  }
  return std::nullopt;
}

std::shared_ptr<const GroupData> group_data(const GroupSpec& spec) {
  static std::mutex lock;
  static std::map<GroupSpec, std::shared_ptr<const GroupData>> cache;
  {
    std::lock_guard guard(lock);
    if (auto it = cache.find(spec); it != cache.end()) return it->second;
  }
  auto data = std::make_shared<const GroupData>(spec);
  std::lock_guard guard(lock);
  return cache.emplace(spec, data).first->second;
}

std::vector<IrrepInfo> irreps(const GroupSpec& g) { return group_data(g)->irreps(); }

FiniteAbelianGroup::Element det_char(const GroupSpec& g, std::string_view irrep) {
  auto d = group_data(g);
  return d->irrep(d->index_of(irrep)).det_char;
}

CohomologyGroup cohomology(const GroupSpec& g, int degree, int coefficient) {
  if (degree != 1 && degree != 2) throw std::invalid_argument("cohomology degree must be 1 or 2");
  if (coefficient < 1) throw std::invalid_argument("coefficient group order must be positive");
  auto d = group_data(g);
  const auto& A = d->abelian();
  CohomologyGroup h;
  h.degree = degree;
  h.coefficient = coefficient;
  h.structure = A.torsion_structure(coefficient);
  h.representatives = degree == 1 ? A.torsion(coefficient) : A.quotient_representatives(coefficient);
  h.description = "H^" + std::to_string(degree) + "(B" + g.to_string() + "; Z" + std::to_string(coefficient) +
                  ") = " + h.structure.to_string() + (degree == 1 ? " = A[r]" : " = A/rA");
  return h;
}

}  // namespace dualcount
