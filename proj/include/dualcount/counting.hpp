#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "dualcount/cyclotomic.hpp"
#include "dualcount/grouprep.hpp"

namespace dualcount {

enum class Family { U, SU, PU, Sp, O_odd, SO_odd, Spin_odd, PSp };

std::string to_string(Family f);
Family parse_family(std::string_view text);

struct TargetFamily {
  Family family = Family::U;
  int n = 0;
  /// Complex dimension of the defining representation that homomorphisms are decomposed in.
  int rep_dim() const;
  std::string to_string() const;
};

/// Multiplicities in canonical irrep order.
using MultiplicityVector = std::vector<int>;
std::map<std::string, int> named(const GroupData& d, const MultiplicityVector& mv);

/// Constraint applied to each irrep (or conjugate pair) when enumerating multiplicity vectors.
enum class Structure { Unitary, Symplectic, Orthogonal };

/// Visits every multiplicity vector of total dimension `dim` allowed by the structure:
/// Symplectic: strictly real multiplicities even, conjugate pairs matched.
/// Orthogonal: pseudoreal multiplicities even, conjugate pairs matched.
/// `dims`, `reality`, `partner` describe the irreps (partner[i] == i when self-conjugate).
void enumerate_multiplicities(const std::vector<int>& dims, const std::vector<Reality>& reality,
                              const std::vector<int>& partner, Structure s, int dim,
                              const std::function<void(const MultiplicityVector&)>& visit);

void enumerate_solutions(const GroupData& d, Structure s, int dim,
                         const std::function<void(const MultiplicityVector&)>& visit);

/// Determinant character of a representation with the given multiplicities.
FiniteAbelianGroup::Element det_of(const GroupData& d, const MultiplicityVector& mv);
MultiplicityVector tensor_by(const GroupData& d, const FiniteAbelianGroup::Element& a, const MultiplicityVector& mv);

/// N(Γ, G): number of homomorphisms up to conjugation.
mpz_class count_homs(const GroupSpec& g, const TargetFamily& t);

struct SectorCount {
  int w = 0;
  mpz_class fixed;
  mpz_class moved;
  mpz_class dim_v0() const { return fixed + moved / 2; }
  mpz_class dim_v1() const { return moved / 2; }
};

/// Binary octahedral group, Z = Z_2: twisted sector counts on the Sp(n) or Spin(2n+1) side.
SectorCount count_twisted(const GroupSpec& g, Family f, int n, int w);

/// Sector of an SO-representation of the binary octahedral group computed two ways.
struct SectorReport {
  int by_whitney = 0;
  int by_congruence = 0;
};
SectorReport sector_report(const GroupSpec& g, const MultiplicityVector& mv);
int sector_of_so_rep(const GroupSpec& g, const MultiplicityVector& mv);

/// Whether the sign character fixes the Spin lift class of an SO-representation of the binary
/// octahedral group (general rule from the component decomposition).
bool spin_lift_fixed(const GroupData& d, const MultiplicityVector& mv);
/// The same condition in the explicit form n_{2''} > 0 or (n_1 + n_3 > 0 and n_{1'} + n_{3'} > 0).
bool spin_lift_fixed_explicit(const GroupData& d, const MultiplicityVector& mv);

enum class FSide { SU, Sp, Spin };

/// Character table of F(Γ;Z) = H^1 × (H^2)^∧ acting on V_Z(Γ,G).
struct FRepCharacter {
  std::string gamma;
  std::string side;
  int n = 0;
  FiniteAbelianGroup z_group;       // coordinates of H^1 elements
  FiniteAbelianGroup w_group;       // coordinates of (H^2)^∧ elements
  std::vector<FiniteAbelianGroup::Element> h1;
  std::vector<FiniteAbelianGroup::Element> h2_dual;
  std::vector<std::string> h1_labels;
  std::vector<std::string> h2_dual_labels;
  std::vector<std::vector<Cyclotomic>> value;  // value[z][ŵ]
  std::vector<mpz_class> sector_dims;         // dim V_{Z,w} per sector, in representative order
};

FRepCharacter f_rep_character(const GroupSpec& g, FSide side, int n);

enum class DualPairKind { SU_PU, Sp_Spin };

struct SwapReport {
  bool equivalent = false;
  std::vector<std::string> identifications;
  std::string detail;
};

/// Compares χ_G(z, ŵ) with χ_H̃(ι⁻¹ ŵ, ι z) over identifications ι.
SwapReport verify_swap_equivalence(const GroupSpec& g, DualPairKind pair, int n);

}  // namespace dualcount
