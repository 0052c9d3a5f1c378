#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "deplab/tree.hpp"

namespace deplab {

struct FormatError : std::runtime_error {
  FormatError(int line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}
  int line;
};

struct Sentence {
  DepTree tree;
  std::vector<std::string> comments;  // verbatim '#' lines, in order
};

struct ParseDiagnostic {
  int line = 0;  // line where the problem was detected
  std::string message;
};

struct Treebank {
  std::vector<Sentence> sentences;
  std::vector<ParseDiagnostic> diagnostics;  // one per skipped sentence
  int skipped_sentences = 0;
};

/// Reads CoNLL-U: sentences separated by blank lines, ten tab-separated
/// columns per token, '#' comment lines kept as metadata. Multiword-token
/// ("a-b") and empty-node ("a.b") lines are skipped and occupy no word
/// index. A sentence with a malformed line, a non-integer head, or a head
/// out of range is skipped and counted, with a diagnostic; parsing always
/// continues with the next sentence.
Treebank parse_conllu(std::istream& in);

/// Ten-column output, '_' for unknown columns, one blank line after each
/// sentence. Every sentence must validate as a forest. Reparsing the output
/// reproduces forms, heads, deprels, and sentence boundaries.
void write_conllu(const Treebank& treebank, std::ostream& out);

std::string to_conllu(const Treebank& treebank);

}  // namespace deplab
