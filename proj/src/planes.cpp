#include "deplab/planes.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace deplab {

std::size_t CrossingsGraph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& nbrs : adj) twice += nbrs.size();
  return twice / 2;
}

CrossingsGraph crossings_graph(const DepTree& tree) {
  tree.ensure_forest();
  CrossingsGraph g;
  g.arcs = tree.arcs();
  g.adj.assign(g.arcs.size(), {});
  for (std::size_t a = 0; a < g.arcs.size(); ++a)
    for (std::size_t b = a + 1; b < g.arcs.size(); ++b)
      if (cross(g.arcs[a], g.arcs[b])) {
        g.adj[a].push_back(static_cast<int>(b) + 1);
        g.adj[b].push_back(static_cast<int>(a) + 1);
      }
  return g;
}

bool PlaneAssignment::fully_assigned() const {
  return std::none_of(plane.begin(), plane.end(),
                      [](signed char p) { return p == kNoPlane; });
}

int PlaneAssignment::unassigned_count() const {
  return static_cast<int>(
      std::count(plane.begin(), plane.end(), static_cast<signed char>(kNoPlane)));
}

PlaneAssignment assign_planes(const DepTree& tree) {
  const CrossingsGraph graph = crossings_graph(tree);
  const int n = tree.size();

  PlaneAssignment pa;
  pa.plane.assign(n, static_cast<signed char>(kNoPlane));
  pa.allowed.assign(n, 0b11);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    const Arc& x = graph.arcs[a - 1];
    const Arc& y = graph.arcs[b - 1];
    if (x.right() != y.right()) return x.right() < y.right();
    return x.right() - x.left() < y.right() - y.left();
  });

  // visited[(d-1)*2 + p] marks that plane p was already forbidden for arc d
  // during the current propagation.
  std::vector<unsigned char> visited(static_cast<std::size_t>(n) * 2);

  for (int d : order) {
    const unsigned char allowed = pa.allowed[d - 1];
    const int p = (allowed & 0b01) ? 0 : (allowed & 0b10) ? 1 : kNoPlane;
    pa.plane[d - 1] = static_cast<signed char>(p);
    if (p == kNoPlane) continue;

    std::fill(visited.begin(), visited.end(), 0);
    std::deque<std::pair<int, int>> queue;  // (dependent, plane to forbid)
    for (int nb : graph.adj[d - 1]) queue.emplace_back(nb, p);
    while (!queue.empty()) {
      const auto [v, forbid] = queue.front();
      queue.pop_front();
      unsigned char& seen = visited[static_cast<std::size_t>(v - 1) * 2 + forbid];
      if (seen) continue;
      seen = 1;
      pa.allowed[v - 1] &= static_cast<unsigned char>(~(1u << forbid));
      for (int nb : graph.adj[v - 1]) queue.emplace_back(nb, 1 - forbid);
    }
  }
  return pa;
}

}  // namespace deplab
