#include "dualcount/mckay.hpp"

#include <functional>
#include <queue>
#include <stdexcept>

#include "dualcount/errors.hpp"

namespace dualcount {

std::vector<std::pair<int, int>> McKayGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i; j < size(); ++j)
      for (int m = 0; m < adjacency[i][j]; ++m) out.emplace_back(i, j);
  return out;
}

std::vector<int> McKayGraph::finite_nodes() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (i != affine_node) out.push_back(i);
  return out;
}

IntMatrix McKayGraph::finite_cartan() const {
  const auto nodes = finite_nodes();
  IntMatrix c(nodes.size(), IntVector(nodes.size(), 0));
  for (std::size_t a = 0; a < nodes.size(); ++a)
    for (std::size_t b = 0; b < nodes.size(); ++b)
      c[a][b] = (a == b ? 2 : 0) - adjacency[nodes[a]][nodes[b]];
  return c;
}

McKayGraph mckay_graph(const GroupSpec& g) {
  auto d = group_data(g);
  McKayGraph graph;
  graph.ade_type = g.ade_type();
  const int k = d->size();
  graph.adjacency.assign(k, std::vector<int>(k, 0));
  for (int i = 0; i < k; ++i) {
    graph.node_names.push_back(d->irrep(i).name);
    graph.comarks.push_back(d->irrep(i).dim);
    std::vector<Cyclotomic> chi = d->table().chi[i];
    for (std::size_t c = 0; c < chi.size(); ++c) chi[c] *= d->defining_character()[c];
    const auto mult = d->decompose(chi);
    for (int j = 0; j < k; ++j) graph.adjacency[i][j] = static_cast<int>(mult[j]);
  }
  graph.affine_node = d->index_of(d->irrep(0).name);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (graph.adjacency[i][j] != graph.adjacency[j][i]) throw VerificationFailure("McKay graph is not symmetric");
  return graph;
}

std::vector<std::vector<int>> graph_automorphisms(const McKayGraph& graph) {
  const int k = graph.size();
  std::vector<std::vector<int>> result;
  std::vector<int> perm(k, -1);
  std::vector<bool> used(k, false);
  std::function<void(int)> rec = [&](int i) {
    if (i == k) {
      result.push_back(perm);
      return;
    }
    for (int j = 0; j < k; ++j) {
      if (used[j] || graph.comarks[j] != graph.comarks[i] || graph.adjacency[j][j] != graph.adjacency[i][i]) continue;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p) ok = graph.adjacency[i][p] == graph.adjacency[j][perm[p]];
      if (!ok) continue;
      perm[i] = j;
      used[j] = true;
      rec(i + 1);
      used[j] = false;
    }
    perm[i] = -1;
  };
  rec(0);
  return result;
}

bool isomorphic_graphs(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b) {
  if (a.size() != b.size()) return false;
  const int k = static_cast<int>(a.size());
  std::vector<int> perm(k, -1);
  std::vector<bool> used(k, false);
  auto degree = [](const std::vector<std::vector<int>>& m, int i) {
    int s = 0;
    for (int x : m[i]) s += x;
    return s;
  };
  std::function<bool(int)> rec = [&](int i) {
    if (i == k) return true;
    for (int j = 0; j < k; ++j) {
      if (used[j] || degree(a, i) != degree(b, j) || a[i][i] != b[j][j]) continue;
      bool ok = true;
      for (int p = 0; p < i && ok; ++p) ok = a[i][p] == b[j][perm[p]];
      if (!ok) continue;
      perm[i] = j;
      used[j] = true;
      if (rec(i + 1)) return true;
      used[j] = false;
    }
    return false;
  };
  return rec(0);
}

AAction a_action(const GroupSpec& g) {
  auto d = group_data(g);
  AAction act;
  act.group = d->abelian();
  for (auto& a : act.group.elements()) {
    act.elements.push_back(a);
    act.labels.push_back(d->irrep(d->one_dim_irrep(a)).name);
    std::vector<int> perm;
    for (int i = 0; i < d->size(); ++i) perm.push_back(d->tensor_one_dim(a, i));
    act.permutation.push_back(perm);
  }
  return act;
}

std::vector<FiniteAbelianGroup::Element> center_classes(const GroupSpec& g) {
  auto d = group_data(g);
  const auto graph = mckay_graph(g);
  const auto nodes = graph.finite_nodes();
  const int r = static_cast<int>(nodes.size());
  std::vector<std::vector<mpq_class>> rows(graph.size(), std::vector<mpq_class>(r, 0));
  if (r > 0) {
    auto inv = inverse(to_rational(graph.finite_cartan()));
    if (!inv) throw VerificationFailure("finite Cartan matrix is singular");
    for (int a = 0; a < r; ++a) rows[nodes[a]] = (*inv)[a];
  }
  std::vector<int> comark_one;
  for (int i = 0; i < graph.size(); ++i)
    if (graph.comarks[i] == 1) comark_one.push_back(i);

  std::vector<FiniteAbelianGroup::Element> out;
  for (int i = 0; i < graph.size(); ++i) {
    int found = -1;
    for (int j : comark_one) {
      bool integral = true;
      for (int c = 0; c < r && integral; ++c) integral = mpq_class(rows[i][c] - rows[j][c]).get_den() == 1;
      if (!integral) continue;
      if (found >= 0) throw VerificationFailure("center class of a node is ambiguous");
      found = j;
    }
    if (found < 0) throw VerificationFailure("center class of a node not represented by a comark-one node");
    out.push_back(d->one_dim_element(found));
  }
  return out;
}

AAction a_action_from_diagram(const GroupSpec& g) {
  auto d = group_data(g);
  const auto graph = mckay_graph(g);
  const auto classes = center_classes(g);
  const auto autos = graph_automorphisms(graph);
  const auto& A = d->abelian();
  AAction act;
  act.group = A;
  for (auto& a : A.elements()) {
    const int target = d->one_dim_irrep(a);
    std::vector<int> chosen;
    for (auto& sigma : autos) {
      if (sigma[graph.affine_node] != target) continue;
      bool ok = true;
      for (int i = 0; i < graph.size() && ok; ++i)
        ok = classes[sigma[i]] == A.add(classes[i], A.scale(a, graph.comarks[i]));
      if (!ok) continue;
      if (!chosen.empty() && chosen != sigma) throw VerificationFailure("diagram symmetry for an element of A is not unique");
      chosen = sigma;
    }
    if (chosen.empty()) throw VerificationFailure("no diagram symmetry realizes an element of A");
    act.elements.push_back(a);
    act.labels.push_back(d->irrep(target).name);
    act.permutation.push_back(chosen);
  }
  return act;
}

}  // namespace dualcount
