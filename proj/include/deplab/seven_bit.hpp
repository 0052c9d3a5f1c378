#pragma once

#include <vector>

#include "deplab/decoding.hpp"
#include "deplab/labels.hpp"
#include "deplab/planes.hpp"
#include "deplab/tree.hpp"

namespace deplab::bits7 {

struct EncodeResult {
  std::vector<Label7> labels;
  RepairLog log;  // one dropped_arc event per arc left without a plane
};

/// Runs assign_planes and computes each word's bits from its incoming arc's
/// direction and plane, its outermostness among the head's same-side
/// same-plane dependents, and its per-plane child flags. An arc the
/// assignment could not place is dropped: it sets no child flag and its
/// dependent gets the default incoming bits (right, plane 0, not outermost),
/// with the loss logged.
EncodeResult encode(const DepTree& tree);

/// Four stack passes, one per direction and plane, each the exact analog of
/// the 4-bit pass restricted to that plane's symbols. Both right passes seed
/// their stack with the dummy root, since the dummy-root arc may sit on
/// either plane.
RawDecode decode_raw(const std::vector<Label7>& labels);

DecodeResult decode(const std::vector<Label7>& labels, const RepairOptions& options = {});

}  // namespace deplab::bits7
