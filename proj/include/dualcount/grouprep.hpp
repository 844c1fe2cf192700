#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dualcount/abelian.hpp"
#include "dualcount/cyclotomic.hpp"

namespace dualcount {

enum class GroupKind { Cyclic, BinaryDihedral, BinaryTetrahedral, BinaryOctahedral, BinaryIcosahedral };

/// A finite subgroup of SU(2) up to conjugacy: Z_n (n >= 1), D̂_m (m >= 2, order 4m), T̂, Ô, Î.
struct GroupSpec {
  GroupKind kind = GroupKind::Cyclic;
  int param = 1;

  static GroupSpec cyclic(int n);
  static GroupSpec binary_dihedral(int m);
  static GroupSpec tetrahedral() { return {GroupKind::BinaryTetrahedral, 0}; }
  static GroupSpec octahedral() { return {GroupKind::BinaryOctahedral, 0}; }
  static GroupSpec icosahedral() { return {GroupKind::BinaryIcosahedral, 0}; }

  /// Accepts "Z:7", "Dhat:5", "That", "Ohat", "Ihat".
  static GroupSpec parse(std::string_view text);
  std::string to_string() const;

  int order() const;
  /// Affine ADE label of the McKay graph, e.g. "A3", "D6", "E7".
  std::string ade_type() const;

  friend auto operator<=>(const GroupSpec&, const GroupSpec&) = default;
};

enum class Reality { StrictlyReal, Pseudoreal, ComplexPair };
std::string to_string(Reality r);

struct IrrepInfo {
  std::string name;
  int dim = 1;
  Reality reality = Reality::StrictlyReal;
  std::optional<std::string> partner;
  FiniteAbelianGroup::Element det_char;
  int node = 0;
};

/// chi[i][c] is the character of irrep i on conjugacy class c.
struct CharacterTable {
  int cyclotomic_order = 1;
  std::vector<std::string> class_names;
  std::vector<int> class_sizes;
  std::vector<int> square_class;
  std::vector<std::vector<Cyclotomic>> chi;
};

/// Exact character data for one group, built once and immutable afterwards.
class GroupData {
public:
  explicit GroupData(const GroupSpec& spec);

  const GroupSpec& spec() const { return spec_; }
  int order() const { return spec_.order(); }
  const std::vector<IrrepInfo>& irreps() const { return irreps_; }
  const IrrepInfo& irrep(int i) const { return irreps_.at(i); }
  int size() const { return static_cast<int>(irreps_.size()); }
  int index_of(std::string_view name) const;
  const CharacterTable& table() const { return table_; }

  /// A = group of one-dimensional irreps, identified with the abelianization's dual.
  const FiniteAbelianGroup& abelian() const { return abelian_; }
  int one_dim_irrep(const FiniteAbelianGroup::Element& a) const;
  FiniteAbelianGroup::Element one_dim_element(int irrep) const;

  /// Index of ρ_a ⊗ ρ_i.
  int tensor_one_dim(const FiniteAbelianGroup::Element& a, int irrep) const;
  /// Character of the defining 2-dimensional representation.
  const std::vector<Cyclotomic>& defining_character() const { return defining_; }

  /// ⟨χ, χ_i⟩ for an arbitrary class function given on classes.
  long multiplicity(const std::vector<Cyclotomic>& chi, int irrep) const;
  std::vector<long> decompose(const std::vector<Cyclotomic>& chi) const;
  std::vector<Cyclotomic> tensor_character(int i, int j) const;
  /// Frobenius–Schur indicator computed from the square map.
  int frobenius_schur(int irrep) const;
  /// Character of det ρ_i recovered from the table (exact): χ_det(g) for 1- and 2-dim irreps.
  std::optional<int> det_from_table(int irrep) const;

private:
  void finish();

  GroupSpec spec_;
  std::vector<IrrepInfo> irreps_;
  CharacterTable table_;
  FiniteAbelianGroup abelian_;
  std::vector<int> one_dim_by_element_;
  std::vector<std::vector<int>> tensor_perm_;
  std::vector<Cyclotomic> defining_;

};

/// Cached shared instance per spec.
std::shared_ptr<const GroupData> group_data(const GroupSpec& spec);

std::vector<IrrepInfo> irreps(const GroupSpec& g);
FiniteAbelianGroup::Element det_char(const GroupSpec& g, std::string_view irrep);

/// Irreps of the Z_2 central extension for the nontrivial sector (binary octahedral only).
struct TwistedIrrepInfo {
  std::string name;
  int dim = 1;
  Reality reality = Reality::StrictlyReal;
  std::optional<std::string> partner;
  std::string untwisted;  // irrep whose label it shares on the McKay diagram
};
std::vector<TwistedIrrepInfo> twisted_irreps(const GroupSpec& g);

/// Total Stiefel–Whitney class in Z_2[y]/(y^3) stored as (w1, w2) bits; w0 = 1.
struct SWClass {
  int w1 = 0;
  int w2 = 0;
  friend bool operator==(const SWClass&, const SWClass&) = default;
  SWClass operator*(const SWClass& o) const { return {w1 ^ o.w1, w2 ^ o.w2 ^ (w1 & o.w1)}; }
  SWClass inverse() const { return {w1, w1 ^ w2}; }
  SWClass pow(long e) const;
  std::string to_string() const;
};
SWClass sw_class(const GroupSpec& g, std::string_view irrep);

struct CohomologyGroup {
  int degree = 1;
  int coefficient = 2;
  FiniteAbelianGroup structure;
  /// Elements of A: the subgroup A[r] for degree 1, representatives of A/rA for degree 2.
  std::vector<FiniteAbelianGroup::Element> representatives;
  std::string description;
};
CohomologyGroup cohomology(const GroupSpec& g, int degree, int coefficient);

}  // namespace dualcount
