#include <doctest.h>

#include <numeric>

#include "dualcount/lattice.hpp"
#include "dualcount/mckay.hpp"
#include "support.hpp"

using namespace dualcount;

namespace {

std::vector<GroupSpec> all_groups() {
  std::vector<GroupSpec> out;
  for (int n = 2; n <= 10; ++n) out.push_back(GroupSpec::cyclic(n));
  for (int m = 2; m <= 8; ++m) out.push_back(GroupSpec::binary_dihedral(m));
  out.push_back(GroupSpec::tetrahedral());
  out.push_back(GroupSpec::octahedral());
  out.push_back(GroupSpec::icosahedral());
  return out;
}

}  // namespace

TEST_SUITE("mckay") {
  TEST_CASE("McKay graph is the extended Dynkin diagram") {
    for (const auto& g : all_groups()) {
      CAPTURE(g.to_string());
      const auto graph = mckay_graph(g);
      CHECK(graph.ade_type == g.ade_type());
      CHECK(isomorphic_graphs(graph.adjacency, testing_support::extended_dynkin(graph.ade_type)));
      CHECK(graph.node_names[graph.affine_node] == irreps(g)[0].name);
    }
  }

  TEST_CASE("comarks are dimensions and form the null vector of the affine Cartan matrix") {
    for (const auto& g : all_groups()) {
      const auto graph = mckay_graph(g);
      int sq = 0;
      for (int i = 0; i < graph.size(); ++i) {
        sq += graph.comarks[i] * graph.comarks[i];
        int s = 2 * graph.comarks[i];
        for (int j = 0; j < graph.size(); ++j) s -= graph.adjacency[i][j] * graph.comarks[j];
        CHECK(s == 0);
      }
      CHECK(sq == g.order());
    }
  }

  TEST_CASE("finite part is a Cartan matrix with the right discriminant") {
    for (const auto& g : all_groups()) {
      const auto graph = mckay_graph(g);
      const auto c = graph.finite_cartan();
      const auto A = group_data(g)->abelian();
      CHECK(determinant(to_rational(c)) == static_cast<long>(A.order()));
      CHECK(smith_invariants(c, static_cast<int>(c.size())) == A.factors());
    }
  }

  TEST_CASE("A acts by diagram automorphisms, matching the tensor action") {
    for (const auto& g : all_groups()) {
      CAPTURE(g.to_string());
      const auto graph = mckay_graph(g);
      const auto tensor = a_action(g);
      const auto diagram = a_action_from_diagram(g);
      REQUIRE(tensor.elements.size() == diagram.elements.size());
      for (std::size_t k = 0; k < tensor.elements.size(); ++k) {
        const auto& p = tensor.permutation[k];
        for (int i = 0; i < graph.size(); ++i)
          for (int j = 0; j < graph.size(); ++j) CHECK(graph.adjacency[p[i]][p[j]] == graph.adjacency[i][j]);
        for (std::size_t l = 0; l < diagram.elements.size(); ++l)
          if (diagram.elements[l] == tensor.elements[k]) CHECK(diagram.permutation[l] == p);
      }
    }
  }

  TEST_CASE("center classes are compatible with determinants") {
    for (const auto& g : all_groups()) {
      CAPTURE(g.to_string());
      const auto classes = center_classes(g);
      const auto d = group_data(g);
      for (int i = 0; i < d->size(); ++i) CHECK(classes[i] == d->irrep(i).det_char);
    }
  }

  TEST_CASE("graph automorphisms of the E6 diagram") {
    const auto graph = mckay_graph(GroupSpec::tetrahedral());
    CHECK(graph_automorphisms(graph).size() == 6);
  }
}
