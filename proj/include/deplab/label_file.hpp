#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "deplab/conllu.hpp"

namespace deplab {

/// One sentence of the label TSV exchanged with taggers. The three lists are
/// index-aligned; labels are stored as strings (bit or bracket syntax) and
/// parsed by the codec that consumes them.
struct LabeledSentence {
  std::vector<std::string> forms;
  std::vector<std::string> labels;
  std::vector<std::string> deprels;
};

enum class LabelSyntax { bits, brackets };

/// Reads "INDEX\tFORM\tLABEL\tDEPREL" lines, one token per line, sentences
/// separated by blank lines. Throws FormatError on ragged lines or broken
/// token numbering. '_' in the DEPREL column reads back as an empty string.
std::vector<LabeledSentence> read_labels(std::istream& in);

void write_labels(const std::vector<LabeledSentence>& sentences, std::ostream& out);

}  // namespace deplab
