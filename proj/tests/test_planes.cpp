#include "deplab/planes.hpp"

#include <optional>
#include <queue>

#include "deplab/testkit.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace deplab;

namespace {

// Independent bipartiteness check: BFS 2-coloring of the crossings graph.
bool bipartite(const CrossingsGraph& g) {
  const int n = static_cast<int>(g.arcs.size());
  std::vector<int> color(n, -1);
  for (int s = 0; s < n; ++s) {
    if (color[s] != -1) continue;
    color[s] = 0;
    std::queue<int> queue;
    queue.push(s);
    while (!queue.empty()) {
      const int v = queue.front();
      queue.pop();
      for (int nb : g.adj[v]) {
        if (color[nb - 1] == -1) {
          color[nb - 1] = 1 - color[v];
          queue.push(nb - 1);
        } else if (color[nb - 1] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool has_edge(const CrossingsGraph& g, int dep_a, int dep_b) {
  for (int nb : g.adj[dep_a - 1])
    if (nb == dep_b) return true;
  return false;
}

}  // namespace

TEST_CASE("projective trees have an empty crossings graph") {
  CHECK(crossings_graph(fixtures::defanged()).edge_count() == 0);
}

TEST_CASE("the non-projective sample crosses through its long arc") {
  const auto g = crossings_graph(fixtures::country());
  CHECK(g.edge_count() == 2);
  CHECK(has_edge(g, 6, 5));  // (2,6) x (0,5)
  CHECK(has_edge(g, 6, 7));  // (2,6) x (5,7)
}

TEST_CASE("crossings graph of a chained crossing pattern") {
  const auto g = crossings_graph(DepTree({0, 4, 1, 1, 3}));
  CHECK(g.edge_count() == 3);
  CHECK(has_edge(g, 3, 2));  // (1,3) x (2,4)
  CHECK(has_edge(g, 2, 5));  // (2,4) x (3,5)
  CHECK(has_edge(g, 4, 5));  // (1,4) x (3,5)
  CHECK_THROWS_AS(crossings_graph(DepTree({2, 1})), InvalidTreeError);
}

TEST_CASE("assignment refuses head cycles") {
  CHECK_THROWS_AS(assign_planes(DepTree({2, 1})), InvalidTreeError);
}

TEST_CASE("a projective tree stays entirely on the first plane") {
  const auto pa = assign_planes(fixtures::defanged());
  CHECK(pa.fully_assigned());
  for (int i = 1; i <= 7; ++i) CHECK(pa.plane_of(i) == 0);
}

TEST_CASE("the sample crossing is pushed to the second plane") {
  const auto pa = assign_planes(fixtures::country());
  CHECK(pa.fully_assigned());
  for (int i = 1; i <= 7; ++i) CHECK(pa.plane_of(i) == (i == 6 ? 1 : 0));
}

TEST_CASE("restriction propagation resolves the chained crossing pattern") {
  const auto pa = assign_planes(DepTree({0, 4, 1, 1, 3}));
  CHECK(pa.fully_assigned());
  CHECK(pa.plane_of(1) == 0);
  CHECK(pa.plane_of(3) == 0);
  CHECK(pa.plane_of(2) == 1);
  CHECK(pa.plane_of(4) == 1);
  CHECK(pa.plane_of(5) == 0);
}

TEST_CASE("an odd crossing cycle leaves arcs unassigned") {
  // Dummy-root arc (0,3), (4,1) and (5,2) cross pairwise; both parities
  // reach everything in the component, so only the crossing-free (3,4)
  // and the first-visited (0,3) get a plane.
  const auto pa = assign_planes(DepTree({4, 5, 0, 3, 3}));
  CHECK_FALSE(pa.fully_assigned());
  CHECK(pa.unassigned_count() == 3);
  CHECK(pa.plane_of(3) == 0);
  CHECK(pa.plane_of(4) == 0);
}

TEST_CASE("assignment properties over all small trees") {
  for (int n = 1; n <= 5; ++n) {
    testkit::for_each_single_root_tree(n, [](const DepTree& t) {
      const auto g = crossings_graph(t);
      const auto pa = assign_planes(t);

      // Crossing arcs never share a plane once both are assigned.
      for (int d = 1; d <= t.size(); ++d)
        for (int nb : g.adj[d - 1]) {
          if (pa.plane_of(d) == kNoPlane || pa.plane_of(nb) == kNoPlane) continue;
          CHECK(pa.plane_of(d) != pa.plane_of(nb));
        }

      // A bipartite crossings graph is always fully assigned, and such
      // trees are two-plane partitionable by brute force as well.
      if (bipartite(g)) {
        CHECK(pa.fully_assigned());
        CHECK(testkit::brute_two_plane(t));
      }

      // No crossings at all: plane 1 stays unused.
      if (g.edge_count() == 0)
        for (int d = 1; d <= t.size(); ++d) CHECK(pa.plane_of(d) == 0);

      // Deterministic.
      CHECK(assign_planes(t).plane == pa.plane);
    });
  }
}
