#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dualcount/grouprep.hpp"
#include "dualcount/intmat.hpp"

namespace dualcount {

/// Nodes are irreps in canonical order; adjacency[i][j] = multiplicity of ρ_j in ρ_i ⊗ V.
struct McKayGraph {
  std::string ade_type;
  std::vector<std::string> node_names;
  std::vector<int> comarks;
  std::vector<std::vector<int>> adjacency;
  int affine_node = 0;

  int size() const { return static_cast<int>(node_names.size()); }
  std::vector<std::pair<int, int>> edges() const;
  /// 2I - adjacency restricted to the non-affine nodes (in node order).
  IntMatrix finite_cartan() const;
  std::vector<int> finite_nodes() const;
};

McKayGraph mckay_graph(const GroupSpec& g);

/// Permutation action of A on nodes; permutation[k][i] is the image of node i under elements[k].
struct AAction {
  FiniteAbelianGroup group;
  std::vector<FiniteAbelianGroup::Element> elements;
  std::vector<std::string> labels;
  std::vector<std::vector<int>> permutation;
};

/// Tensoring by one-dimensional irreps.
AAction a_action(const GroupSpec& g);
/// Comark-preserving diagram automorphisms selected by the center-class shift rule.
AAction a_action_from_diagram(const GroupSpec& g);

/// Class of each node's fundamental weight in P/Q, named by the comark-one node in the same class
/// (the affine node stands for the trivial class). Returns the A-element of that node's irrep.
std::vector<FiniteAbelianGroup::Element> center_classes(const GroupSpec& g);

/// All adjacency- and comark-preserving node permutations.
std::vector<std::vector<int>> graph_automorphisms(const McKayGraph& graph);

/// True when the two multigraphs are isomorphic.
bool isomorphic_graphs(const std::vector<std::vector<int>>& a, const std::vector<std::vector<int>>& b);

}  // namespace dualcount
