#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>

#include "dualcount/affine.hpp"
#include "dualcount/errors.hpp"
#include "dualcount/intmat.hpp"
#include "dualcount/kernels.hpp"
#include "dualcount/mckay.hpp"

namespace dualcount {

namespace {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

int type_rank(std::string_view type, char& letter) {
  if (type.size() < 2) throw std::invalid_argument("bad affine type '" + std::string(type) + "'");
  letter = type[0];
  try {
    return std::stoi(std::string(type.substr(1)));
  } catch (const std::exception&) {
    throw std::invalid_argument("bad affine type '" + std::string(type) + "'");
  }
}

void check_supported(std::string_view type, const AffineOptions& opt) {
  char letter = 0;
  const int r = type_rank(type, letter);
  if (letter == 'D' && r > 6) throw Unsupported("S-matrices of type D" + std::to_string(r) + " (rank above 6)");
  if (letter == 'E' && r == 8) throw Unsupported("S-matrices of type E8 (Weyl group too large)");
  if (letter == 'E' && r == 7 && !opt.allow_e7) throw Unsupported("S-matrices of type E7 without the enable-E7 option");
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Matrix adjoint(const Matrix& a) {
  const std::size_t n = a.size();
  Matrix c(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i][j] = std::conj(a[j][i]);
  return c;
}

struct FiniteData {
  IntMatrix cartan;
  std::vector<int> nodes;
  std::int64_t det = 1;
  IntMatrix adj;  // det · C^{-1}
  int coxeter = 0;
};

FiniteData finite_data(const LevelWeights& w) {
  const auto graph = mckay_graph(w.partner);
  FiniteData f;
  f.cartan = graph.finite_cartan();
  f.nodes = graph.finite_nodes();
  for (int c : w.comarks) f.coxeter += c;
  if (f.cartan.empty()) return f;
  const RatMatrix c = to_rational(f.cartan);
  f.det = determinant(c).get_num().get_si();
  auto inv = inverse(c);
  RatMatrix scaled = *inv;
  for (auto& row : scaled)
    for (auto& x : row) x *= f.det;
  f.adj = *to_integer(scaled);
  return f;
}

IntVector shifted_finite(const FiniteData& f, const MultiplicityVector& lambda) {
  IntVector v(f.nodes.size());
  for (std::size_t j = 0; j < f.nodes.size(); ++j) v[j] = lambda[f.nodes[j]] + 1;
  return v;
}

/// W-orbit of a dominant regular weight with the sign of the Weyl element reaching each point.
/// Each non-dominant point has a unique parent: reflect in its first negative coordinate. Walking that
/// tree downward visits the orbit once with no visited set.
void weyl_orbit(const IntMatrix& cartan, const IntVector& start, std::vector<std::int32_t>& cols,
                std::vector<std::int32_t>& signs, std::size_t& count) {
  const std::size_t r = start.size();
  std::vector<std::pair<IntVector, int>> points;
  std::vector<std::pair<IntVector, int>> stack{{start, 1}};
  while (!stack.empty()) {
    auto [v, sign] = std::move(stack.back());
    stack.pop_back();
    for (std::size_t i = 0; i < r; ++i) {
      if (v[i] <= 0) continue;
      bool first_negative = true;
      for (std::size_t j = 0; j < i && first_negative; ++j)
        if (v[j] - v[i] * cartan[i][j] < 0) first_negative = false;
      if (!first_negative) continue;
      IntVector w = v;
      for (std::size_t j = 0; j < r; ++j) w[j] -= v[i] * cartan[i][j];
      stack.emplace_back(std::move(w), -sign);
    }
    points.emplace_back(std::move(v), sign);
  }
  count = points.size();
  cols.assign(r * count, 0);
  signs.resize(count);
  for (std::size_t k = 0; k < count; ++k) {
    for (std::size_t j = 0; j < r; ++j) cols[j * count + k] = static_cast<std::int32_t>(points[k].first[j]);
    signs[k] = points[k].second;
  }
}

Matrix permutation_matrix(const LevelWeights& w, const std::vector<int>& sigma) {
  std::map<MultiplicityVector, std::size_t> index;
  for (std::size_t i = 0; i < w.weights.size(); ++i) index[w.weights[i]] = i;
  const std::size_t n = w.weights.size();
  Matrix p(n, std::vector<Complex>(n));
  for (std::size_t i = 0; i < n; ++i) {
    MultiplicityVector image(w.weights[i].size());
    for (std::size_t node = 0; node < image.size(); ++node) image[sigma[node]] = w.weights[i][node];
    p[index.at(image)][i] = 1;
  }
  return p;
}

}  // namespace

int LevelWeights::vacuum() const {
  for (std::size_t i = 0; i < weights.size(); ++i)
    if (weights[i][affine_node] == level) return static_cast<int>(i);
  return 0;
}

GroupSpec mckay_partner(std::string_view type) {
  char letter = 0;
  const int r = type_rank(type, letter);
  switch (letter) {
    case 'A':
      if (r >= 1) return GroupSpec::cyclic(r + 1);
      break;
    case 'D':
      if (r >= 4) return GroupSpec::binary_dihedral(r - 2);
      break;
    case 'E':
      if (r == 6) return GroupSpec::tetrahedral();
      if (r == 7) return GroupSpec::octahedral();
      if (r == 8) return GroupSpec::icosahedral();
      break;
    default: break;
  }
  throw Unsupported("affine type " + std::string(type) + " is not simply laced ADE");
}

LevelWeights level_weights(std::string_view type, int n) {
  if (n < 1) throw std::invalid_argument("level must be positive");
  LevelWeights w;
  w.type = std::string(type);
  w.partner = mckay_partner(type);
  w.level = n;
  const auto graph = mckay_graph(w.partner);
  w.node_names = graph.node_names;
  w.comarks = graph.comarks;
  w.affine_node = graph.affine_node;
  MultiplicityVector current(graph.size(), 0);
  auto rec = [&](auto&& self, int node, int remaining) -> void {
    if (node == graph.size()) {
      if (remaining == 0) w.weights.push_back(current);
      return;
    }
    for (int k = 0; k * w.comarks[node] <= remaining; ++k) {
      current[node] = k;
      self(self, node + 1, remaining - k * w.comarks[node]);
    }
    current[node] = 0;
  };
  rec(rec, 0, n);
  return w;
}

SMatrix s_matrix(std::string_view type, int n, const AffineOptions& opt) {
  check_supported(type, opt);
  SMatrix out{level_weights(type, n), {}};
  const auto& w = out.weights;
  const FiniteData f = finite_data(w);
  const std::size_t size = w.weights.size();
  const int modulus = static_cast<int>(f.det * (n + f.coxeter));
  const auto table = kernels::make_phase_table(modulus);

  std::vector<IntVector> duals;
  for (auto& mu : w.weights) {
    const IntVector v = shifted_finite(f, mu);
    IntVector y(v.size(), 0);
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) y[i] += f.adj[i][j] * v[j];
    duals.push_back(y);
  }
  Matrix raw(size, std::vector<Complex>(size));
  for (std::size_t a = 0; a < size; ++a) {
    std::vector<std::int32_t> cols, signs;
    std::size_t count = 0;
    weyl_orbit(f.cartan, shifted_finite(f, w.weights[a]), cols, signs, count);
    for (std::size_t b = 0; b < size; ++b) {
      std::vector<std::int32_t> y(duals[b].begin(), duals[b].end());
      raw[a][b] = kernels::phase_sum(cols, signs, count, y, table);
    }
  }
  const std::size_t v = static_cast<std::size_t>(w.vacuum());
  double norm = 0;
  for (auto& x : raw[v]) norm += std::norm(x);
  const Complex scale = std::conj(raw[v][v]) / std::abs(raw[v][v]) / std::sqrt(norm);
  for (auto& row : raw)
    for (auto& x : row) x *= scale;
  out.s = std::move(raw);
  return out;
}

std::vector<FiniteAbelianGroup::Element> det_prime(const LevelWeights& w) {
  const auto classes = center_classes(w.partner);
  const auto& A = group_data(w.partner)->abelian();
  std::vector<FiniteAbelianGroup::Element> out;
  for (auto& lambda : w.weights) {
    auto d = A.zero();
    for (std::size_t i = 0; i < lambda.size(); ++i) d = A.add(d, A.scale(classes[i], lambda[i]));
    out.push_back(d);
  }
  return out;
}

ConjugationReport verify_s_conjugation(std::string_view type, int n, const AffineOptions& opt) {
  const SMatrix s = s_matrix(type, n, opt);
  ConjugationReport r{std::string(type), n, false, {}, 0};
  const auto action = a_action_from_diagram(s.weights.partner);
  const auto& A = action.group;
  const auto dets = det_prime(s.weights);
  const Matrix s_inv = adjoint(s.s);
  std::vector<Matrix> conjugated;
  for (auto& sigma : action.permutation) conjugated.push_back(multiply(multiply(s.s, permutation_matrix(s.weights, sigma)), s_inv));

  const double two_pi = 2 * std::numbers::pi;
  double best = std::numeric_limits<double>::infinity();
  for (auto& iso : A.isomorphisms_to_dual()) {
    double worst = 0;
    for (std::size_t k = 0; k < action.elements.size(); ++k) {
      const auto character = A.apply_hom(iso, action.elements[k]);
      const Matrix& m = conjugated[k];
      for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) {
          Complex expected = 0;
          if (i == j) expected = std::polar(1.0, two_pi * A.pairing_exponent(character, dets[i]) / A.exponent());
          worst = std::max(worst, std::abs(m[i][j] - expected));
        }
    }
    best = std::min(best, worst);
    if (worst < 1e-9) {
      std::string label = "{";
      for (std::size_t g = 0; g < iso.size(); ++g) label += (g ? "," : "") + A.element_to_string(iso[g]);
      r.identifications.push_back(label + "}");
    }
  }
  if (A.order() == 1) {
    // Trivial A: the single identity conjugation holds iff S is unitary.
    best = unitarity_error(s);
    r.identifications.push_back("{}");
  }
  r.max_abs_error = best;
  r.holds = !r.identifications.empty() && best < 1e-9;
  return r;
}

bool a1_exact_conjugation(int n) {
  const int modulus = 2 * (n + 2);
  auto raw = [&](int a, int b) {
    const int p = (a + 1) * (b + 1);
    return Cyclotomic::root(modulus, -p) - Cyclotomic::root(modulus, p);
  };
  // P: λ ↦ n - λ; D: (-1)^λ. Check (S'P)_{ab} = S'_{a, n-b} against (D S')_{ab} = (-1)^a S'_{ab}.
  for (int a = 0; a <= n; ++a)
    for (int b = 0; b <= n; ++b) {
      const Cyclotomic lhs = raw(a, n - b);
      const Cyclotomic rhs = raw(a, b) * (a % 2 == 0 ? 1 : -1);
      if (!(lhs == rhs)) return false;
    }
  return true;
}

double unitarity_error(const SMatrix& m) {
  const Matrix p = multiply(m.s, adjoint(m.s));
  double e = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j) e = std::max(e, std::abs(p[i][j] - Complex(i == j ? 1.0 : 0.0)));
  return e;
}

double symmetry_error(const SMatrix& m) {
  double e = 0;
  for (std::size_t i = 0; i < m.s.size(); ++i)
    for (std::size_t j = 0; j < m.s.size(); ++j) e = std::max(e, std::abs(m.s[i][j] - m.s[j][i]));
  return e;
}

double charge_conjugation_error(const SMatrix& m, bool& squares_to_identity) {
  const Matrix s2 = multiply(m.s, m.s);
  const std::size_t n = s2.size();
  std::vector<std::vector<int>> rounded(n, std::vector<int>(n, 0));
  double e = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = std::round(s2[i][j].real());
      rounded[i][j] = static_cast<int>(re);
      e = std::max(e, std::abs(s2[i][j] - Complex(re, 0)));
    }
  squares_to_identity = true;
  for (std::size_t i = 0; i < n; ++i) {
    int nonzero = 0;
    for (std::size_t j = 0; j < n; ++j) nonzero += rounded[i][j] != 0;
    if (nonzero != 1) squares_to_identity = false;
    for (std::size_t j = 0; j < n; ++j) {
      long acc = 0;
      for (std::size_t k = 0; k < n; ++k) acc += static_cast<long>(rounded[i][k]) * rounded[k][j];
      if (acc != (i == j ? 1 : 0)) squares_to_identity = false;
    }
  }
  return e;
}

}  // namespace dualcount
