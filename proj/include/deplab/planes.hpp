#pragma once

#include <vector>

#include "deplab/tree.hpp"

namespace deplab {

/// Crossings graph of a forest: one node per arc and an edge between every
/// crossing pair. Since each word has exactly one incoming arc, arcs are
/// identified by their dependent (root words stand for their dummy-root
/// arc), so node d-1 is the arc ending at word d.
struct CrossingsGraph {
  std::vector<Arc> arcs;              // arcs[d-1] == (head(d), d)
  std::vector<std::vector<int>> adj;  // adj[d-1] = dependents of crossing arcs
  std::size_t edge_count() const;
};

CrossingsGraph crossings_graph(const DepTree& tree);

inline constexpr int kNoPlane = -1;

struct PlaneAssignment {
  std::vector<signed char> plane;      // per dependent: 0, 1, or kNoPlane
  std::vector<unsigned char> allowed;  // per dependent: bit p set = plane p allowed

  int plane_of(int dep) const { return plane[dep - 1]; }
  bool fully_assigned() const;
  int unassigned_count() const;
};

/// Second-plane-averse assignment by restriction propagation. Arcs are
/// visited by right endpoint, shorter arcs first on ties; each takes plane 0
/// if still allowed, else plane 1, else none. Every assignment propagates
/// breadth-first through the crossings graph, forbidding the taken plane for
/// neighbors, the other plane for their neighbors, and so on to the fixed
/// point; an (arc, plane) pair is never forbidden twice in one propagation.
/// Restrictions reaching an already-assigned arc are recorded but do not
/// change its plane.
PlaneAssignment assign_planes(const DepTree& tree);

}  // namespace deplab
