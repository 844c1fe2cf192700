#include <stdexcept>

#include "dualcount/counting.hpp"
#include "dualcount/errors.hpp"
#include "dualcount/lattice.hpp"

namespace dualcount {

namespace {

mpz_class count_with(const GroupData& d, Structure s, int dim, bool require_trivial_det) {
  mpz_class count = 0;
  enumerate_solutions(d, s, dim, [&](const MultiplicityVector& mv) {
    if (!require_trivial_det || d.abelian().is_zero(det_of(d, mv))) ++count;
  });
  return count;
}

// Orbits of A on U(n)-solutions by Burnside's lemma.
mpz_class count_projective_unitary(const GroupData& d, int n) {
  const auto elems = d.abelian().elements();
  mpz_class fixed_total = 0;
  enumerate_solutions(d, Structure::Unitary, n, [&](const MultiplicityVector& mv) {
    for (auto& a : elems)
      if (tensor_by(d, a, mv) == mv) ++fixed_total;
  });
  if (fixed_total % static_cast<unsigned long>(elems.size()) != 0)
    throw VerificationFailure("Burnside sum not divisible by |A|");
  return fixed_total / static_cast<unsigned long>(elems.size());
}

CartanType classical(RootType t, int n) { return CartanType{n == 1 ? RootType::A : t, n}; }

}  // namespace

mpz_class count_homs(const GroupSpec& g, const TargetFamily& t) {
  if (t.n < 0) throw std::invalid_argument("target rank must be nonnegative");
  auto d = group_data(g);
  switch (t.family) {
    case Family::U: return count_with(*d, Structure::Unitary, t.n, false);
    case Family::SU: return count_with(*d, Structure::Unitary, t.n, true);
    case Family::PU: return t.n == 0 ? mpz_class(1) : count_projective_unitary(*d, t.n);
    case Family::Sp: return count_with(*d, Structure::Symplectic, 2 * t.n, false);
    case Family::O_odd: return count_with(*d, Structure::Orthogonal, 2 * t.n + 1, false);
    case Family::SO_odd: return count_with(*d, Structure::Orthogonal, 2 * t.n + 1, true);
    case Family::Spin_odd:
    case Family::PSp: break;
  }
  const bool spin = t.family == Family::Spin_odd;
  switch (g.kind) {
    case GroupKind::BinaryTetrahedral:
    case GroupKind::BinaryIcosahedral:
      // no 2-torsion in the abelianization: every homomorphism lifts or descends uniquely
      return spin ? count_with(*d, Structure::Orthogonal, 2 * t.n + 1, true)
                  : count_with(*d, Structure::Symplectic, 2 * t.n, false);
    case GroupKind::BinaryOctahedral: {
      if (spin) {
        auto s = count_twisted(g, Family::Spin_odd, t.n, 0);
        return s.fixed + s.moved;
      }
      mpz_class total = 0;
      for (int w : {0, 1}) total += count_twisted(g, Family::Sp, t.n, w).dim_v0();
      return total;
    }
    case GroupKind::Cyclic: {
      if (t.n == 0) return 1;
      if (spin) return weyl_orbit_count(cartan_data(classical(RootType::B, t.n)), {"coroot", {}}, g.param);
      LatticeChoice coweights{"coweight", {}};
      for (int i = 0; i < t.n; ++i) {
        IntVector e(t.n, 0);
        e[i] = 1;
        coweights.extra.push_back(e);
      }
      return weyl_orbit_count(cartan_data(classical(RootType::C, t.n)), coweights, g.param);
    }
    case GroupKind::BinaryDihedral:
      throw Unsupported(t.to_string() + " counts for binary dihedral groups (refined lifting data not developed)");
  }
  throw std::logic_error("unreachable");
}

}  // namespace dualcount
