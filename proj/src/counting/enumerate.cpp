#include <stdexcept>

#include "dualcount/counting.hpp"

namespace dualcount {

std::string to_string(Family f) {
  switch (f) {
    case Family::U: return "U";
    case Family::SU: return "SU";
    case Family::PU: return "PU";
    case Family::Sp: return "Sp";
    case Family::O_odd: return "O_odd";
    case Family::SO_odd: return "SO_odd";
    case Family::Spin_odd: return "Spin_odd";
    case Family::PSp: return "PSp";
  }
  return "?";
}

Family parse_family(std::string_view text) {
  for (Family f : {Family::U, Family::SU, Family::PU, Family::Sp, Family::O_odd, Family::SO_odd, Family::Spin_odd,
                   Family::PSp})
    if (to_string(f) == text) return f;
  throw std::invalid_argument("unknown target family '" + std::string(text) + "'");
}

int TargetFamily::rep_dim() const {
  switch (family) {
    case Family::U:
    case Family::SU:
    case Family::PU: return n;
    case Family::Sp:
    case Family::PSp: return 2 * n;
    case Family::O_odd:
    case Family::SO_odd:
    case Family::Spin_odd: return 2 * n + 1;
  }
  return 0;
}

std::string TargetFamily::to_string() const {
  switch (family) {
    case Family::U: return "U(" + std::to_string(n) + ")";
    case Family::SU: return "SU(" + std::to_string(n) + ")";
    case Family::PU: return "PU(" + std::to_string(n) + ")";
    case Family::Sp: return "Sp(" + std::to_string(n) + ")";
    case Family::PSp: return "PSp(" + std::to_string(n) + ")";
    case Family::O_odd: return "O(" + std::to_string(2 * n + 1) + ")";
    case Family::SO_odd: return "SO(" + std::to_string(2 * n + 1) + ")";
    case Family::Spin_odd: return "Spin(" + std::to_string(2 * n + 1) + ")";
  }
  return "?";
}

std::map<std::string, int> named(const GroupData& d, const MultiplicityVector& mv) {
  std::map<std::string, int> out;
  for (int i = 0; i < d.size(); ++i)
    if (mv[i] != 0) out[d.irrep(i).name] = mv[i];
  return out;
}

namespace {
struct Slot {
  int weight;
  int first;
  int second;  // -1 when the slot touches one irrep
  int step;    // multiplicity added to each touched irrep per unit
};
}  // namespace

void enumerate_multiplicities(const std::vector<int>& dims, const std::vector<Reality>& reality,
                              const std::vector<int>& partner, Structure s, int dim,
                              const std::function<void(const MultiplicityVector&)>& visit) {
  if (dim < 0) return;
  const int k = static_cast<int>(dims.size());
  std::vector<Slot> slots;
  for (int i = 0; i < k; ++i) {
    if (s == Structure::Unitary) {
      slots.push_back({dims[i], i, -1, 1});
      continue;
    }
    if (reality[i] == Reality::ComplexPair) {
      if (i < partner[i]) slots.push_back({2 * dims[i], i, partner[i], 1});
      continue;
    }
    const bool doubled = (s == Structure::Symplectic) == (reality[i] == Reality::StrictlyReal);
    slots.push_back(doubled ? Slot{2 * dims[i], i, -1, 2} : Slot{dims[i], i, -1, 1});
  }
  // suffix gcds prune infeasible remainders
  std::vector<int> suffix_gcd(slots.size() + 1, 0);
  for (std::size_t j = slots.size(); j-- > 0;) {
    int a = suffix_gcd[j + 1], b = slots[j].weight;
    while (b) {
      a %= b;
      std::swap(a, b);
    }
    suffix_gcd[j] = a;
  }
  MultiplicityVector mv(k, 0);
  auto rec = [&](auto& self, std::size_t j, int remaining) -> void {
    if (j == slots.size()) {
      if (remaining == 0) visit(mv);
      return;
    }
    if (suffix_gcd[j] == 0 ? remaining != 0 : remaining % suffix_gcd[j] != 0) return;
    const Slot& sl = slots[j];
    for (int c = 0; c * sl.weight <= remaining; ++c) {
      mv[sl.first] = c * sl.step;
      if (sl.second >= 0) mv[sl.second] = c * sl.step;
      self(self, j + 1, remaining - c * sl.weight);
    }
    mv[sl.first] = 0;
    if (sl.second >= 0) mv[sl.second] = 0;
  };
  rec(rec, 0, dim);
}

void enumerate_solutions(const GroupData& d, Structure s, int dim,
                         const std::function<void(const MultiplicityVector&)>& visit) {
  std::vector<int> dims, partner;
  std::vector<Reality> reality;
  for (int i = 0; i < d.size(); ++i) {
    const auto& r = d.irrep(i);
    dims.push_back(r.dim);
    reality.push_back(r.reality);
    partner.push_back(r.partner ? d.index_of(*r.partner) : i);
  }
  enumerate_multiplicities(dims, reality, partner, s, dim, visit);
}

FiniteAbelianGroup::Element det_of(const GroupData& d, const MultiplicityVector& mv) {
  const auto& A = d.abelian();
  auto det = A.zero();
  for (int i = 0; i < d.size(); ++i)
    if (mv[i]) det = A.add(det, A.scale(d.irrep(i).det_char, mv[i]));
  return det;
}

MultiplicityVector tensor_by(const GroupData& d, const FiniteAbelianGroup::Element& a, const MultiplicityVector& mv) {
  MultiplicityVector out(mv.size(), 0);
  for (int i = 0; i < d.size(); ++i) out[d.tensor_one_dim(a, i)] = mv[i];
  return out;
}

}  // namespace dualcount
