#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "deplab/tree.hpp"

namespace deplab {

enum class RepairKind {
  empty_stack_skip,     // a decode pass hit an empty stack; arc skipped
  leftover_stack,       // unmatched head marker left on a pass stack
  dropped_arc,          // encoder dropped an arc that got no plane
  attach_headless,      // repair attached a word no pass gave a head
  cycle_break,          // repair reattached a word to cut a head cycle
  extra_root_reattach,  // repair moved a surplus root under the first root
};

const char* to_string(RepairKind kind);

struct RepairEvent {
  RepairKind kind;
  int word = 0;
  std::string detail;
};

struct RepairLog {
  std::vector<RepairEvent> events;

  bool empty() const { return events.empty(); }
  std::size_t count(RepairKind kind) const;
  void add(RepairKind kind, int word, std::string detail);
  void append(const std::vector<RepairEvent>& more);
  void append(const RepairLog& other) { append(other.events); }
};

struct RepairOptions {
  bool enforce_single_root = false;
};

struct RepairResult {
  DepTree tree;
  RepairLog log;
};

/// Marks a word no decode pass attached.
inline constexpr int kNoHead = -1;

/// Turns a partial head map (kNoHead for missing entries) into a valid
/// forest, or a single-root tree when requested. Headless words attach to
/// the dummy root while no root word exists, otherwise to their left
/// neighbor; each head cycle is cut at its smallest-index word. Attachments
/// that would themselves close a cycle fall back to the dummy root, so no
/// word with a sound incoming arc is ever touched.
RepairResult repair(const std::vector<int>& raw_heads, const RepairOptions& options = {});

}  // namespace deplab
