#include <map>

#include "dualcount/errors.hpp"
#include "dualcount/grouprep.hpp"

namespace dualcount {

SWClass SWClass::pow(long e) const {
  SWClass base = e < 0 ? inverse() : *this;
  long k = e < 0 ? -e : e;
  SWClass r;
  while (k-- > 0) r = r * base;
  return r;
}

std::string SWClass::to_string() const {
  std::string s = "1";
  if (w1) s += "+y";
  if (w2) s += "+y^2";
  return s;
}

namespace {

void require_octahedral(const GroupSpec& g, const char* what) {
  if (g.kind != GroupKind::BinaryOctahedral)
    throw Unsupported(std::string(what) + " is only developed for the binary octahedral group, got " + g.to_string());
}

}  // namespace

// A twisted representation is (iρ(a), ρ(b)) for an ordinary ρ. Its conjugate is the twist of
// conj(ρ) ⊗ 1' because the factor i conjugates to -i = i·(-1) and 1'(a) = -1.
std::vector<TwistedIrrepInfo> twisted_irreps(const GroupSpec& g) {
  require_octahedral(g, "twisted irreducible representations");
  auto d = group_data(g);
  const int sign = d->one_dim_irrep({1});
  std::vector<TwistedIrrepInfo> out;
  for (int i = 0; i < d->size(); ++i) {
    const auto& r = d->irrep(i);
    TwistedIrrepInfo t;
    t.name = "t" + r.name;
    t.dim = r.dim;
    t.untwisted = r.name;
    int conj = r.partner ? d->index_of(*r.partner) : i;
    conj = d->tensor_one_dim(d->one_dim_element(sign), conj);
    if (conj != i) {
      t.reality = Reality::ComplexPair;
      t.partner = "t" + d->irrep(conj).name;
    } else {
      // Self-conjugate twisted irreps: 2'' has explicit matrices inside SU(2); 4 follows from
      // 4~ ⊗ 2 = 3~ + 3'~ + 2''~ containing a single pseudoreal summand.
      t.reality = r.name == "2''" ? Reality::Pseudoreal : Reality::StrictlyReal;
    }
    out.push_back(std::move(t));
  }
  return out;
}

// Whitney classes of strictly real irreps, derived from three base values and the rule that a
// tensor product of two pseudoreal representations has trivial total class.
SWClass sw_class(const GroupSpec& g, std::string_view irrep) {
  require_octahedral(g, "Stiefel-Whitney classes");
  auto d = group_data(g);
  std::map<int, SWClass> known;
  known[d->index_of("1")] = {0, 0};
  known[d->index_of("1'")] = {1, 0};  // w1 detects the nontrivial determinant
  known[d->index_of("3")] = {0, 0};   // SO(3) image of SU(2) lifts to Spin(3)
  for (int i = 0; i < d->size(); ++i)
    if (d->irrep(i).reality == Reality::Pseudoreal) known[i] = {0, 0};

  const std::pair<const char*, const char*> relations[] = {{"2'", "2"}, {"4", "2"}};
  for (auto [p, q] : relations) {
    const auto mult = d->decompose(d->tensor_character(d->index_of(p), d->index_of(q)));
    SWClass acc;
    int unknown = -1;
    for (int i = 0; i < d->size(); ++i) {
      if (mult[i] == 0) continue;
      if (d->irrep(i).reality != Reality::StrictlyReal)
        throw VerificationFailure("unexpected non-real summand in a quaternionic tensor product");
      if (known.count(i)) {
        acc = acc * known[i].pow(mult[i]);
      } else {
        if (unknown >= 0 || mult[i] != 1) throw VerificationFailure("Whitney relation has more than one unknown");
        unknown = i;
      }
    }
    if (unknown < 0) {
      if (!(acc == SWClass{})) throw VerificationFailure("Whitney relation violated");
      continue;
    }
    known[unknown] = acc.inverse();
  }
  const int i = d->index_of(irrep);
  auto it = known.find(i);
  if (it == known.end()) throw VerificationFailure("Whitney class of " + std::string(irrep) + " not determined");
  return it->second;
}

}  // namespace dualcount
