#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "dualcount/counting.hpp"
#include "dualcount/grouprep.hpp"

namespace dualcount {

/// Dominant level-n weights of the untwisted affine algebra of a simply-laced type, written as
/// Dynkin labels on the McKay nodes of the partner group (affine node included).
struct LevelWeights {
  std::string type;
  GroupSpec partner;
  int level = 0;
  std::vector<std::string> node_names;
  std::vector<int> comarks;
  int affine_node = 0;
  std::vector<MultiplicityVector> weights;

  int vacuum() const;
};

/// McKay partner of "A<k>", "D<k>", "E6", "E7", "E8".
GroupSpec mckay_partner(std::string_view type);
LevelWeights level_weights(std::string_view type, int n);

struct AffineOptions {
  bool allow_e7 = false;
};

struct SMatrix {
  LevelWeights weights;
  std::vector<std::vector<std::complex<double>>> s;
};

/// Kac–Peterson sum over the Weyl orbit of λ+ρ, normalized to be unitary with S_00 > 0.
SMatrix s_matrix(std::string_view type, int n, const AffineOptions& opt = {});

/// Element of A = Z^∧ carried by each weight (its class in P/Q).
std::vector<FiniteAbelianGroup::Element> det_prime(const LevelWeights& w);

struct ConjugationReport {
  std::string type;
  int level = 0;
  bool holds = false;
  /// Isomorphisms A → A^∧ (images of the coordinate generators) for which S P_a S^{-1} = D_a for all a.
  std::vector<std::string> identifications;
  double max_abs_error = 0;
};

ConjugationReport verify_s_conjugation(std::string_view type, int n, const AffineOptions& opt = {});

/// Exact check of S'P_a = D_a S' for A1 at level n in cyclotomic arithmetic (unnormalized S').
bool a1_exact_conjugation(int n);

double unitarity_error(const SMatrix& m);
double symmetry_error(const SMatrix& m);
/// Max distance of S² from a signed permutation matrix, together with whether (S²)² rounds to I.
double charge_conjugation_error(const SMatrix& m, bool& squares_to_identity);

}  // namespace dualcount
