#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "dualcount/abelian.hpp"
#include "dualcount/cyclotomic.hpp"
#include "dualcount/intmat.hpp"

namespace dualcount {

enum class RootType { A, B, C, D, E, F, G };

struct CartanType {
  RootType type = RootType::A;
  int rank = 1;
  std::string name() const;
  /// "A3", "B2", "E7", ...
  static CartanType parse(std::string_view text);
  friend bool operator==(const CartanType&, const CartanType&) = default;
};

/// Cartan matrix C_ij = <α_i^∨, α_j> (Bourbaki labelling). Coweights are written in the basis of
/// fundamental coweights, so the coroot α_i^∨ has coordinates row_i(C) and s_i(d) = d - d_i row_i(C).
struct CartanData {
  std::string name;
  int rank = 0;
  IntMatrix cartan;
  /// P^∨/Q^∨ and one coweight representative per element in index order.
  FiniteAbelianGroup center;
  std::vector<IntVector> center_representatives;

  /// Simple reflection on coweight coordinates as a matrix acting on column vectors.
  IntMatrix reflection(int i) const;
  /// ⟨λ, x⟩ for λ in fundamental-weight and x in fundamental-coweight coordinates.
  mpq_class pairing(const IntVector& weight, const IntVector& coweight) const;
};

CartanData cartan_data(const CartanType& t);
CartanData cartan_from_matrix(std::string name, IntMatrix cartan);
/// Langlands dual root datum: transpose Cartan matrix; its coweights are the original weights.
CartanData dual_cartan(const CartanData& c);

/// Q^∨ + span(extra), a lattice between the coroot and coweight lattices.
struct LatticeChoice {
  std::string name;
  std::vector<IntVector> extra;
};

/// Hermite basis (rows, coweight coordinates) of the lattice; throws if it leaves P^∨.
IntMatrix lattice_basis(const CartanData& c, const LatticeChoice& m);
bool same_lattice(const CartanData& c, const LatticeChoice& a, const LatticeChoice& b);
/// The character lattice M = {λ ∈ P : ⟨λ, M^*⟩ ⊂ Z} as a choice for dual_cartan(c).
LatticeChoice annihilator(const CartanData& c, const LatticeChoice& m);

/// Weyl group generators acting on a lattice through integer matrices in a chosen basis.
struct LatticeRealization {
  std::string name;
  int rank = 0;
  std::vector<IntMatrix> generators;
};

LatticeRealization realize(const CartanData& c, const LatticeChoice& m);
/// Z^k with the symmetric group (cocharacters of U(k)).
LatticeRealization unitary_realization(int k);

struct OrbitOptions {
  /// 0 keeps natural seed order; otherwise seeds are visited in a shuffled order.
  std::uint64_t shuffle_seed = 0;
  std::uint64_t max_points = 60'000'000;
};

/// Number of W-orbits on (Z/n)^rank, i.e. on (1/n)M^*/M^*.
mpz_class weyl_orbit_count(const LatticeRealization& r, int n, const OrbitOptions& opt = {});
mpz_class weyl_orbit_count(const CartanData& c, const LatticeChoice& m, int n, const OrbitOptions& opt = {});
/// (1/|W|) Σ_w |Fix(w)| by explicit enumeration of W (small groups only).
mpz_class burnside_orbit_count(const LatticeRealization& r, int n, std::size_t max_group_order = 100000);
std::vector<IntMatrix> weyl_group_elements(const LatticeRealization& r, std::size_t max_group_order);

struct DualPair {
  std::string name;
  CartanData g;
  LatticeChoice g_lattice;
  CartanData dual;
  LatticeChoice dual_lattice;
};

std::vector<DualPair> dual_pair_catalog(int max_rank);
DualPair make_dual_pair(std::string name, const CartanData& g, const LatticeChoice& m);

struct ZnDualityResult {
  mpz_class count;
  mpz_class dual_count;
  bool agree = false;
};
ZnDualityResult zn_duality(const DualPair& pair, int n);
bool verify_zn_duality(const DualPair& pair, int n);

/// W-orbits on (1/n)N^*/M^* graded by n×: (1/n)N^*/M^* → N^*/M^* = Z.
struct GradedOrbitSet {
  int n = 1;
  /// Elements of Z as Hermite-reduced vectors in coweight coordinates.
  std::vector<IntVector> z_elements;
  /// grade[k] indexes z_elements; orbit[k] lists points as indices into the point box.
  std::vector<int> grade;
  std::vector<std::vector<std::uint64_t>> orbits;
};

struct RefinedLatticeData {
  CartanData cartan;
  LatticeChoice inner;  // M^*
  LatticeChoice outer;  // N^* ⊇ M^*
};

GradedOrbitSet graded_orbits(const RefinedLatticeData& data, int n);

/// Character of F(Z_n; Z) on V_Z(Z_n, G) from the W-invariants of V((1/n)N^*/M^*), divided by |nZ|.
/// Rows are z ∈ Z[n] (coweight coordinates), columns b ∈ Z^∧[n] (weight coordinates of M/N).
struct LatticeFRep {
  std::vector<IntVector> h1;
  std::vector<IntVector> h2_dual;
  std::vector<std::vector<Cyclotomic>> value;
  /// One representative w̃ ∈ Z per class of Z/nZ, with the dimension of that sector.
  std::vector<IntVector> sectors;
  std::vector<mpz_class> sector_dims;
};
LatticeFRep refined_zn_characters(const RefinedLatticeData& data, int n);
/// Data for H̃ = dual of G/Z: inner N, outer M on the dual root datum.
RefinedLatticeData dual_refined_data(const RefinedLatticeData& data);

struct LatticeSwapReport {
  bool direct = false;
  bool inverse = false;
};
/// Compares χ_G(z, b) with χ_H̃(b, ±z).
LatticeSwapReport compare_swapped(const RefinedLatticeData& data, int n);

}  // namespace dualcount
