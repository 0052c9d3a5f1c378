#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "deplab/tree.hpp"

namespace deplab::testkit {

struct BoundError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Enumeration is intended for exhaustive small-scale checks only.
inline constexpr int kMaxEnumerationLength = 7;

enum class TreeConstraint {
  all_single_root_trees,
  projective,
  covered_4bit,
  covered_7bit,  // brute-force two-plane partition exists
};

/// Calls fn for every single-root tree of n words, i.e. every head vector
/// h1..hn with hi in {0..n}\{i}, exactly one hi = 0, and an acyclic head
/// relation. Duplicate-free and exhaustive.
void for_each_single_root_tree(int n, const std::function<void(const DepTree&)>& fn);

/// Every acyclic head vector (any number of roots).
void for_each_forest(int n, const std::function<void(const DepTree&)>& fn);

std::vector<DepTree> enumerate(int n, TreeConstraint constraint);

/// True iff some assignment of every arc (dummy-root arcs included) to the
/// two planes leaves no two same-direction same-plane arcs crossing.
/// Exhaustive over all 2^arcs partitions.
bool brute_two_plane(const DepTree& tree);

}  // namespace deplab::testkit
