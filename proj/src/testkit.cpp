#include "deplab/testkit.hpp"

#include <algorithm>
#include <string>

namespace deplab::testkit {
namespace {

bool acyclic(const std::vector<int>& heads) {
  const int n = static_cast<int>(heads.size());
  std::vector<unsigned char> state(n + 1, 0);
  state[0] = 2;
  for (int i = 1; i <= n; ++i) {
    if (state[i] != 0) continue;
    int w = i;
    while (state[w] == 0) {
      state[w] = 1;
      w = heads[w - 1];
    }
    if (state[w] == 1) return false;
    for (int v = i; state[v] == 1; v = heads[v - 1]) state[v] = 2;
  }
  return true;
}

void check_bound(int n) {
  if (n < 1 || n > kMaxEnumerationLength)
    throw BoundError("enumeration length " + std::to_string(n) + " outside 1.." +
                     std::to_string(kMaxEnumerationLength));
}

// Odometer over head vectors; `accept` filters raw vectors before a DepTree
// is built.
void for_each_head_vector(int n, const std::function<bool(const std::vector<int>&)>& accept,
                          const std::function<void(const DepTree&)>& fn) {
  std::vector<int> heads(n, 0);
  while (true) {
    bool self_loop = false;
    for (int i = 1; i <= n && !self_loop; ++i) self_loop = heads[i - 1] == i;
    if (!self_loop && accept(heads)) fn(DepTree(heads));
    int pos = n - 1;
    while (pos >= 0 && heads[pos] == n) heads[pos--] = 0;
    if (pos < 0) return;
    ++heads[pos];
  }
}

}  // namespace

void for_each_single_root_tree(int n, const std::function<void(const DepTree&)>& fn) {
  check_bound(n);
  for_each_head_vector(
      n,
      [](const std::vector<int>& heads) {
        return std::count(heads.begin(), heads.end(), 0) == 1 && acyclic(heads);
      },
      fn);
}

void for_each_forest(int n, const std::function<void(const DepTree&)>& fn) {
  check_bound(n);
  for_each_head_vector(n, [](const std::vector<int>& heads) { return acyclic(heads); }, fn);
}

std::vector<DepTree> enumerate(int n, TreeConstraint constraint) {
  std::vector<DepTree> out;
  for_each_single_root_tree(n, [&](const DepTree& t) {
    switch (constraint) {
      case TreeConstraint::all_single_root_trees: break;
      case TreeConstraint::projective:
        if (!is_projective(t)) return;
        break;
      case TreeConstraint::covered_4bit:
        if (!covered_by_4bit(t)) return;
        break;
      case TreeConstraint::covered_7bit:
        if (!brute_two_plane(t)) return;
        break;
    }
    out.push_back(t);
  });
  return out;
}

bool brute_two_plane(const DepTree& tree) {
  tree.ensure_forest();
  const auto arcs = tree.arcs();
  const int m = static_cast<int>(arcs.size());
  // Only same-direction crossing pairs constrain the partition.
  std::vector<std::pair<int, int>> conflicts;
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b)
      if (arcs[a].rightward() == arcs[b].rightward() && cross(arcs[a], arcs[b]))
        conflicts.emplace_back(a, b);
  if (conflicts.empty()) return true;
  for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
    bool ok = true;
    for (const auto& [a, b] : conflicts)
      if (((mask >> a) & 1) == ((mask >> b) & 1)) {
        ok = false;
        break;
      }
    if (ok) return true;
  }
  return false;
}

}  // namespace deplab::testkit
