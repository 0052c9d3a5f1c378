#pragma once

#include <vector>

#include "deplab/decoding.hpp"
#include "deplab/labels.hpp"
#include "deplab/tree.hpp"

namespace deplab::bits4 {

/// One label per word, straight from the bit definitions. Total on every
/// valid forest; a word with head 0 counts as a right dependent of the dummy
/// root, and the last head-0 word is its outermost one.
std::vector<Label4> encode(const DepTree& tree);

/// Left-to-right scan, stack seeded with the dummy root: a '>' word links to
/// the stack top (popping when starred), a '/' word then pushes itself.
PassResult decode_right_arcs(const std::vector<Label4>& labels);

/// Mirror image over '<' and '\', scanning right to left from an empty
/// stack.
PassResult decode_left_arcs(const std::vector<Label4>& labels);

/// Both passes merged, before repair.
RawDecode decode_raw(const std::vector<Label4>& labels);

/// Both passes plus repair; total on every label sequence.
DecodeResult decode(const std::vector<Label4>& labels, const RepairOptions& options = {});

}  // namespace deplab::bits4
