#pragma once

#include <vector>

#include "deplab/repair.hpp"
#include "deplab/tree.hpp"

namespace deplab {

/// Arcs recovered by one stack pass, the anomalies it logged, and its stack
/// traffic (the dummy-root seed push is not counted).
struct PassResult {
  std::vector<Arc> arcs;
  std::vector<RepairEvent> events;
  int pushes = 0;
  int pops = 0;
};

/// Union of all decode passes before repair: heads[i-1] is the decoded head
/// of word i, or kNoHead when no pass attached it. pushes/pops sum the stack
/// traffic of every pass.
struct RawDecode {
  std::vector<int> heads;
  RepairLog log;  // pass anomalies only
  int pushes = 0;
  int pops = 0;
};

struct DecodeResult {
  DepTree tree;
  RepairLog log;  // pass anomalies plus repair interventions
};

}  // namespace deplab
