#include <functional>
#include <stdexcept>

#include "dualcount/counting.hpp"
#include "dualcount/errors.hpp"

namespace dualcount {

namespace {

void require_octahedral(const GroupSpec& g, const std::string& what) {
  if (g.kind != GroupKind::BinaryOctahedral)
    throw Unsupported(what + " is only developed for the binary octahedral group, got " + g.to_string());
}

FiniteAbelianGroup::Element sign_element() { return {1}; }

}  // namespace

SectorReport sector_report(const GroupSpec& g, const MultiplicityVector& mv) {
  require_octahedral(g, "sector assignment");
  auto d = group_data(g);
  if (static_cast<int>(mv.size()) != d->size()) throw std::invalid_argument("multiplicity vector has wrong length");
  SWClass w;
  for (int i = 0; i < d->size(); ++i) {
    if (mv[i] < 0) throw std::invalid_argument("negative multiplicity");
    const auto& r = d->irrep(i);
    if (r.reality == Reality::Pseudoreal) {
      if (mv[i] % 2) throw std::invalid_argument("pseudoreal irrep " + r.name + " needs even multiplicity");
      continue;
    }
    if (mv[i]) w = w * sw_class(g, r.name).pow(mv[i]);
  }
  if (w.w1) throw std::invalid_argument("representation has nontrivial determinant (not in SO)");
  const long N = mv[d->index_of("1'")] - mv[d->index_of("3'")] + mv[d->index_of("2''")];
  const long r4 = ((N % 4) + 4) % 4;
  if (r4 % 2) throw VerificationFailure("determinant congruence violated");
  return SectorReport{w.w2, r4 == 2 ? 1 : 0};
}

int sector_of_so_rep(const GroupSpec& g, const MultiplicityVector& mv) {
  const auto r = sector_report(g, mv);
  if (r.by_whitney != r.by_congruence)
    throw VerificationFailure("Whitney-class sector disagrees with the congruence sector");
  return r.by_whitney;
}

// The sign character fixes the lift when some element of the centralizer of the SO image has
// lifts anticommuting with the lift of a: -1 on an even-dimensional strictly real summand with
// det(a) = -1, or -1 on two odd-dimensional summands whose determinants at a differ.
bool spin_lift_fixed(const GroupData& d, const MultiplicityVector& mv) {
  const auto& A = d.abelian();
  bool odd_plus = false, odd_minus = false;
  for (int i = 0; i < d.size(); ++i) {
    const auto& r = d.irrep(i);
    if (mv[i] == 0 || r.reality != Reality::StrictlyReal) continue;
    const bool minus = !A.is_zero(r.det_char);
    if (r.dim % 2 == 0) {
      if (minus) return true;
    } else {
      (minus ? odd_minus : odd_plus) = true;
    }
  }
  return odd_plus && odd_minus;
}

bool spin_lift_fixed_explicit(const GroupData& d, const MultiplicityVector& mv) {
  auto n = [&](const char* name) { return mv[d.index_of(name)]; };
  return n("2''") > 0 || (n("1") + n("3") > 0 && n("1'") + n("3'") > 0);
}

SectorCount count_twisted(const GroupSpec& g, Family f, int n, int w) {
  require_octahedral(g, "twisted sector counting");
  if (w != 0 && w != 1) throw std::invalid_argument("sector must be 0 or 1");
  if (n < 0) throw std::invalid_argument("rank must be nonnegative");
  auto d = group_data(g);
  const auto x = sign_element();
  SectorCount s;
  s.w = w;
  if (f == Family::Sp) {
    auto tally = [&](const MultiplicityVector& mv) {
      if (tensor_by(*d, x, mv) == mv) ++s.fixed;
      else ++s.moved;
    };
    if (w == 0) {
      enumerate_solutions(*d, Structure::Symplectic, 2 * n, tally);
    } else {
      const auto tw = twisted_irreps(g);
      std::vector<int> dims, partner;
      std::vector<Reality> reality;
      for (auto& t : tw) {
        dims.push_back(t.dim);
        reality.push_back(t.reality);
        int p = static_cast<int>(dims.size()) - 1;
        if (t.partner)
          for (std::size_t j = 0; j < tw.size(); ++j)
            if (tw[j].name == *t.partner) p = static_cast<int>(j);
        partner.push_back(p);
      }
      // twisted irreps share the canonical order, and tensoring by 1' commutes with the twist
      enumerate_multiplicities(dims, reality, partner, Structure::Symplectic, 2 * n, tally);
    }
    return s;
  }
  if (f == Family::Spin_odd) {
    enumerate_solutions(*d, Structure::Orthogonal, 2 * n + 1, [&](const MultiplicityVector& mv) {
      if (!d->abelian().is_zero(det_of(*d, mv))) return;
      if (sector_of_so_rep(g, mv) != w) return;
      const bool fixed = spin_lift_fixed(*d, mv);
      if (fixed != spin_lift_fixed_explicit(*d, mv))
        throw VerificationFailure("Spin lift fixedness rules disagree");
      if (fixed) s.fixed += 1;
      else s.moved += 2;
    });
    return s;
  }
  throw std::invalid_argument("twisted counting needs the Sp or Spin_odd family");
}

namespace {

std::string element_label(const GroupData& d, const FiniteAbelianGroup::Element& a) {
  return d.irrep(d.one_dim_irrep(a)).name;
}

FRepCharacter su_side(const GroupSpec& g, int n) {
  if (n < 1) throw std::invalid_argument("SU side needs n >= 1");
  auto d = group_data(g);
  const auto& A = d->abelian();
  const auto reps = A.quotient_representatives(n);
  std::vector<std::vector<MultiplicityVector>> by_sector(reps.size());
  enumerate_solutions(*d, Structure::Unitary, n, [&](const MultiplicityVector& mv) {
    const auto det = det_of(*d, mv);
    for (std::size_t k = 0; k < reps.size(); ++k)
      if (det == reps[k]) {
        by_sector[k].push_back(mv);
        break;
      }
  });
  FRepCharacter f;
  f.gamma = g.to_string();
  f.side = "SU";
  f.n = n;
  f.z_group = A;
  f.w_group = A;
  f.h1 = A.torsion(n);
  f.h2_dual = A.torsion(n);
  for (auto& z : f.h1) f.h1_labels.push_back(element_label(*d, z));
  for (auto& c : f.h2_dual) f.h2_dual_labels.push_back("chi" + A.element_to_string(c));
  const int L = A.exponent();
  for (auto& z : f.h1) {
    std::vector<Cyclotomic> row;
    for (auto& c : f.h2_dual) {
      Cyclotomic v(L);
      for (std::size_t k = 0; k < reps.size(); ++k) {
        long fixed = 0;
        for (auto& mv : by_sector[k]) fixed += tensor_by(*d, z, mv) == mv;
        v += Cyclotomic::root(L, A.pairing_exponent(c, reps[k])) * fixed;
      }
      row.push_back(v);
    }
    f.value.push_back(row);
  }
  for (auto& s : by_sector) f.sector_dims.emplace_back(static_cast<unsigned long>(s.size()));
  return f;
}

FRepCharacter z2_side(const GroupSpec& g, FSide side, int n) {
  FRepCharacter f;
  f.gamma = g.to_string();
  f.side = side == FSide::Sp ? "Sp" : "Spin";
  f.n = n;
  const Family fam = side == FSide::Sp ? Family::Sp : Family::Spin_odd;
  if (g.kind == GroupKind::BinaryTetrahedral || g.kind == GroupKind::BinaryIcosahedral) {
    // H^1 and H^2 with Z_2 coefficients vanish: a single sector and trivial action
    const Family plain = side == FSide::Sp ? Family::Sp : Family::SO_odd;
    const mpz_class count = count_homs(g, {plain, n});
    f.h1 = {{}};
    f.h2_dual = {{}};
    f.h1_labels = {"e"};
    f.h2_dual_labels = {"e"};
    f.value = {{Cyclotomic::integer(1, count.get_si())}};
    f.sector_dims = {count};
    return f;
  }
  require_octahedral(g, "Z_2-refined characters");
  f.z_group = FiniteAbelianGroup({2});
  f.w_group = FiniteAbelianGroup({2});
  f.h1 = {{0}, {1}};
  f.h2_dual = {{0}, {1}};
  f.h1_labels = {"e", "x"};
  f.h2_dual_labels = {"e", "w^"};
  const SectorCount s[2] = {count_twisted(g, fam, n, 0), count_twisted(g, fam, n, 1)};
  for (int z = 0; z < 2; ++z) {
    std::vector<Cyclotomic> row;
    for (int wh = 0; wh < 2; ++wh) {
      mpz_class v = 0;
      for (int w = 0; w < 2; ++w) {
        const mpz_class trace = z == 0 ? mpz_class(s[w].fixed + s[w].moved) : s[w].fixed;
        v += (w * wh) % 2 ? -trace : trace;
      }
      row.push_back(Cyclotomic::integer(2, v.get_si()));
    }
    f.value.push_back(row);
  }
  f.sector_dims = {s[0].fixed + s[0].moved, s[1].fixed + s[1].moved};
  return f;
}

// All isomorphisms between two equal-size finite subsets of A closed under addition.
std::vector<std::vector<int>> subgroup_isomorphisms(const FiniteAbelianGroup& A,
                                                   const std::vector<FiniteAbelianGroup::Element>& src,
                                                   const std::vector<FiniteAbelianGroup::Element>& dst) {
  auto index_in = [&](const std::vector<FiniteAbelianGroup::Element>& set, const FiniteAbelianGroup::Element& e) {
    for (std::size_t i = 0; i < set.size(); ++i)
      if (set[i] == e) return static_cast<int>(i);
    return -1;
  };
  std::vector<int> gens;
  std::vector<bool> spanned(src.size(), false);
  spanned[index_in(src, A.zero())] = true;
  auto close = [&]() {
    bool grew = true;
    while (grew) {
      grew = false;
      for (std::size_t i = 0; i < src.size(); ++i)
        if (spanned[i])
          for (int gi : gens) {
            const int j = index_in(src, A.add(src[i], src[gi]));
            if (!spanned[j]) spanned[j] = grew = true;
          }
    }
  };
  for (std::size_t i = 0; i < src.size(); ++i)
    if (!spanned[i]) {
      gens.push_back(static_cast<int>(i));
      close();
    }
  std::vector<std::vector<int>> result;
  std::vector<int> images(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == gens.size()) {
      std::vector<int> map(src.size(), -1);
      map[index_in(src, A.zero())] = index_in(dst, A.zero());
      bool grew = true, ok = true;
      while (grew && ok) {
        grew = false;
        for (std::size_t i = 0; i < src.size() && ok; ++i) {
          if (map[i] < 0) continue;
          for (std::size_t t = 0; t < gens.size() && ok; ++t) {
            const int j = index_in(src, A.add(src[i], src[gens[t]]));
            const int img = index_in(dst, A.add(dst[map[i]], dst[images[t]]));
            if (img < 0) ok = false;
            else if (map[j] < 0) {
              map[j] = img;
              grew = true;
            } else if (map[j] != img) {
              ok = false;
            }
          }
        }
      }
      if (!ok) return;
      std::vector<bool> hit(dst.size(), false);
      for (int m : map) {
        if (m < 0 || hit[m]) return;
        hit[m] = true;
      }
      result.push_back(map);
      return;
    }
    for (std::size_t c = 0; c < dst.size(); ++c) {
      images[k] = static_cast<int>(c);
      rec(k + 1);
    }
  };
  rec(0);
  return result;
}

}  // namespace

FRepCharacter f_rep_character(const GroupSpec& g, FSide side, int n) {
  if (side == FSide::SU) return su_side(g, n);
  return z2_side(g, side, n);
}

SwapReport verify_swap_equivalence(const GroupSpec& g, DualPairKind pair, int n) {
  SwapReport report;
  if (pair == DualPairKind::SU_PU) {
    const auto f = su_side(g, n);
    const auto& A = f.z_group;
    const auto isos = subgroup_isomorphisms(A, f.h1, f.h2_dual);
    for (const auto& iota : isos) {
      std::vector<int> inv(iota.size());
      for (std::size_t i = 0; i < iota.size(); ++i) inv[iota[i]] = static_cast<int>(i);
      bool ok = true;
      for (std::size_t z = 0; z < f.h1.size() && ok; ++z)
        for (std::size_t c = 0; c < f.h2_dual.size() && ok; ++c)
          ok = f.value[z][c] == f.value[inv[c]][iota[z]];
      if (!ok) continue;
      bool canonical = true, inverse = true;
      std::string desc;
      for (std::size_t z = 0; z < f.h1.size(); ++z) {
        canonical = canonical && f.h2_dual[iota[z]] == f.h1[z];
        inverse = inverse && f.h2_dual[iota[z]] == A.neg(f.h1[z]);
        desc += (z ? "," : "") + f.h1_labels[z] + "->" + f.h2_dual_labels[iota[z]];
      }
      report.identifications.push_back(canonical ? "canonical" : inverse ? "inverse" : "map{" + desc + "}");
    }
    report.equivalent = !report.identifications.empty();
    report.detail = std::to_string(isos.size()) + " identifications tried on a " + std::to_string(f.h1.size()) +
                    "x" + std::to_string(f.h2_dual.size()) + " table";
    return report;
  }
  const auto sp = z2_side(g, FSide::Sp, n);
  const auto spin = z2_side(g, FSide::Spin, n);
  bool ok = sp.value.size() == spin.value.size();
  for (std::size_t z = 0; z < sp.value.size() && ok; ++z)
    for (std::size_t c = 0; c < sp.value[z].size() && ok; ++c) ok = sp.value[z][c] == spin.value[c][z];
  report.equivalent = ok;
  if (ok) report.identifications.push_back("canonical");
  report.detail = "Sp(" + std::to_string(n) + ") vs Spin(" + std::to_string(2 * n + 1) + ") on a " +
                  std::to_string(sp.value.size()) + "x" + std::to_string(sp.value.size()) + " table";
  return report;
}

}  // namespace dualcount
