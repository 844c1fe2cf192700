#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dualcount {

/// Finite abelian group Z_{d_1} x ... x Z_{d_k} with elements as coordinate vectors.
/// The Pontryagin dual uses the same coordinates with pairing exp(2πi Σ c_k x_k / d_k).
class FiniteAbelianGroup {
public:
  using Element = std::vector<int>;

  FiniteAbelianGroup() = default;
  explicit FiniteAbelianGroup(std::vector<int> factors);

  const std::vector<int>& factors() const { return factors_; }
  int rank() const { return static_cast<int>(factors_.size()); }
  std::size_t order() const;
  int exponent() const;

  Element zero() const { return Element(factors_.size(), 0); }
  Element normalize(Element a) const;
  Element add(const Element& a, const Element& b) const;
  Element neg(const Element& a) const;
  Element scale(const Element& a, long k) const;
  bool is_zero(const Element& a) const;
  int element_order(const Element& a) const;

  std::size_t index_of(const Element& a) const;
  Element element(std::size_t index) const;
  std::vector<Element> elements() const;

  /// A[r] = kernel of multiplication by r.
  std::vector<Element> torsion(int r) const;
  /// Invariant factors gcd(r, d_k) > 1 of A[r] (equivalently of A/rA).
  FiniteAbelianGroup torsion_structure(int r) const;
  /// Canonical representative of the class of a in A/rA: coordinate-wise residue mod gcd(r, d_k).
  Element quotient_representative(const Element& a, int r) const;
  std::vector<Element> quotient_representatives(int r) const;

  /// ⟨c, x⟩ = ζ_L^{result} with L = exponent().
  int pairing_exponent(const Element& character, const Element& x) const;

  /// Every isomorphism A → A^∧, each given by the images of the coordinate generators.
  std::vector<std::vector<Element>> isomorphisms_to_dual() const;
  Element apply_hom(const std::vector<Element>& generator_images, const Element& x) const;

  std::string to_string() const;
  std::string element_to_string(const Element& a) const;

  friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
  std::vector<int> factors_;
};

}  // namespace dualcount
