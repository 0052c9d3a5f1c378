#include "deplab/repair.hpp"

#include <algorithm>
#include <stdexcept>

namespace deplab {

const char* to_string(RepairKind kind) {
  switch (kind) {
    case RepairKind::empty_stack_skip: return "empty_stack_skip";
    case RepairKind::leftover_stack: return "leftover_stack";
    case RepairKind::dropped_arc: return "dropped_arc";
    case RepairKind::attach_headless: return "attach_headless";
    case RepairKind::cycle_break: return "cycle_break";
    case RepairKind::extra_root_reattach: return "extra_root_reattach";
  }
  return "unknown";
}

std::size_t RepairLog::count(RepairKind kind) const {
  return static_cast<std::size_t>(std::count_if(
      events.begin(), events.end(), [kind](const RepairEvent& e) { return e.kind == kind; }));
}

void RepairLog::add(RepairKind kind, int word, std::string detail) {
  events.push_back({kind, word, std::move(detail)});
}

void RepairLog::append(const std::vector<RepairEvent>& more) {
  events.insert(events.end(), more.begin(), more.end());
}

namespace {

// True iff `target` lies on the head chain starting at `from` in the current
// map. Walks at most n steps so a foreign cycle cannot hang it; a headless
// word ends the chain.
bool on_head_chain(const std::vector<int>& heads, int from, int target) {
  const int n = static_cast<int>(heads.size());
  int w = from;
  for (int steps = 0; steps <= n && w > 0; ++steps) {
    if (w == target) return true;
    w = heads[w - 1] == kNoHead ? 0 : heads[w - 1];
  }
  return false;
}

// Cycles of a completed head map, each reported once, ordered by smallest
// member.
std::vector<std::vector<int>> find_cycles(const std::vector<int>& heads) {
  const int n = static_cast<int>(heads.size());
  std::vector<unsigned char> state(n + 1, 0);  // 0 new, 1 on chain, 2 done
  state[0] = 2;
  std::vector<std::vector<int>> cycles;
  for (int i = 1; i <= n; ++i) {
    if (state[i] != 0) continue;
    int w = i;
    while (state[w] == 0) {
      state[w] = 1;
      w = heads[w - 1];
    }
    if (state[w] == 1) {
      std::vector<int> cyc;
      int v = w;
      do {
        cyc.push_back(v);
        v = heads[v - 1];
      } while (v != w);
      cycles.push_back(std::move(cyc));
    }
    for (int v = i; state[v] == 1; v = heads[v - 1]) state[v] = 2;
  }
  std::sort(cycles.begin(), cycles.end(), [](const auto& a, const auto& b) {
    return *std::min_element(a.begin(), a.end()) < *std::min_element(b.begin(), b.end());
  });
  return cycles;
}

}  // namespace

RepairResult repair(const std::vector<int>& raw_heads, const RepairOptions& options) {
  const int n = static_cast<int>(raw_heads.size());
  std::vector<int> heads = raw_heads;
  RepairLog log;

  for (int i = 1; i <= n; ++i) {
    const int h = heads[i - 1];
    if (h != kNoHead && (h < 0 || h > n || h == i))
      throw std::invalid_argument("raw head of word " + std::to_string(i) + " is invalid");
  }

  // 1. Attach headless words. The first one becomes the root while no word
  //    has head 0 yet; the rest take their left neighbor, falling back to
  //    the dummy root when the neighbor sits inside the word's own subtree.
  bool have_root = std::find(heads.begin(), heads.end(), 0) != heads.end();
  for (int i = 1; i <= n; ++i) {
    if (heads[i - 1] != kNoHead) continue;
    int target;
    std::string detail;
    if (!have_root) {
      target = 0;
      detail = "attached to dummy root (sentence had no root)";
    } else if (i == 1) {
      target = 0;
      detail = "attached to dummy root (no left neighbor)";
    } else if (on_head_chain(heads, i - 1, i)) {
      target = 0;
      detail = "left neighbor is a descendant; attached to dummy root";
    } else {
      target = i - 1;
      detail = "attached to left neighbor";
    }
    heads[i - 1] = target;
    if (target == 0) have_root = true;
    log.add(RepairKind::attach_headless, i, std::move(detail));
  }

  // 2. Cut every head cycle at its smallest member. The reattachment uses
  //    the same guarded neighbor rule, so it cannot close a new cycle.
  for (auto cycles = find_cycles(heads); !cycles.empty(); cycles = find_cycles(heads)) {
    for (const auto& cyc : cycles) {
      const int victim = *std::min_element(cyc.begin(), cyc.end());
      int target;
      std::string detail;
      if (!have_root) {
        target = 0;
        detail = "reattached to dummy root (sentence had no root)";
      } else if (victim == 1) {
        target = 0;
        detail = "reattached to dummy root (no left neighbor)";
      } else if (on_head_chain(heads, victim - 1, victim)) {
        target = 0;
        detail = "left neighbor is a descendant; reattached to dummy root";
      } else {
        target = victim - 1;
        detail = "reattached to left neighbor";
      }
      heads[victim - 1] = target;
      if (target == 0) have_root = true;
      log.add(RepairKind::cycle_break, victim, std::move(detail));
    }
  }

  // 3. Optionally collapse surplus roots. The keeper is the first root the
  //    input already had, so repair-created roots never displace a sound
  //    one; without any original root the first repaired root wins.
  if (options.enforce_single_root) {
    int keeper = 0;
    for (int i = 1; i <= n && keeper == 0; ++i)
      if (heads[i - 1] == 0 && raw_heads[i - 1] == 0) keeper = i;
    for (int i = 1; i <= n && keeper == 0; ++i)
      if (heads[i - 1] == 0) keeper = i;
    for (int i = 1; i <= n; ++i) {
      if (heads[i - 1] != 0 || i == keeper) continue;
      heads[i - 1] = keeper;
      log.add(RepairKind::extra_root_reattach, i,
              "reattached to root word " + std::to_string(keeper));
    }
  }

  return {DepTree(std::move(heads)), std::move(log)};
}

}  // namespace deplab
