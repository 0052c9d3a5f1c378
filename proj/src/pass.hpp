#pragma once

#include <vector>

#include "deplab/decoding.hpp"

namespace deplab::detail {

// Shared stack scan behind every decode pass. Right passes walk the sentence
// left to right with the dummy root pre-pushed; left passes walk right to
// left starting from an empty stack. At each word the arc step runs first:
// if the word's label claims an incoming arc for this pass, it links to the
// stack top (or logs an empty-stack skip) and pops when the label marks the
// word outermost. The push step then registers the word as a pending head if
// the label claims outgoing arcs for this pass.
template <class ArcAt, class PopAt, class PushAt>
PassResult run_pass(int n, bool rightward, ArcAt arc_at, PopAt pop_at, PushAt push_at) {
  PassResult r;
  std::vector<int> stack;
  stack.reserve(static_cast<std::size_t>(n) + 1);
  if (rightward) stack.push_back(0);
  int i = rightward ? 1 : n;
  const int step = rightward ? 1 : -1;
  for (int k = 0; k < n; ++k, i += step) {
    if (arc_at(i)) {
      if (stack.empty()) {
        r.events.push_back({RepairKind::empty_stack_skip, i,
                            rightward ? "no pending head to the left"
                                      : "no pending head to the right"});
      } else {
        r.arcs.push_back({stack.back(), i});
        if (pop_at(i)) {
          stack.pop_back();
          ++r.pops;
        }
      }
    }
    if (push_at(i)) {
      stack.push_back(i);
      ++r.pushes;
    }
  }
  for (int w : stack)
    if (w != 0) r.events.push_back({RepairKind::leftover_stack, w, "unmatched head marker"});
  return r;
}

}  // namespace deplab::detail
