#pragma once

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

#include "deplab/conllu.hpp"
#include "deplab/repair.hpp"

namespace deplab {

enum class Encoding { bits4, bits7 };

const char* to_string(Encoding encoding);

/// Capacity metrics of one encoding over one treebank: how many distinct
/// labels the gold trees need, and how many heads survive an encode-decode
/// round trip before any repair. A word left headless or reattached by
/// repair counts as a miss.
struct CoverageReport {
  std::string treebank;
  Encoding encoding = Encoding::bits4;

  long sentences = 0;  // sentences measured
  long skipped = 0;    // parse-skipped plus non-tree sentences
  long words = 0;
  long arcs_recovered = 0;
  long trees_recovered = 0;

  int label_inventory = 0;     // distinct syntactic labels
  int combined_inventory = 0;  // distinct (label, dependency type) pairs

  long sentences_with_events = 0;
  std::array<long, 6> event_counts{};  // indexed by RepairKind

  double arc_coverage() const {
    return words > 0 ? static_cast<double>(arcs_recovered) / static_cast<double>(words) : 1.0;
  }
  double tree_coverage() const {
    return sentences > 0
               ? static_cast<double>(trees_recovered) / static_cast<double>(sentences)
               : 1.0;
  }
  long events(RepairKind kind) const { return event_counts[static_cast<std::size_t>(kind)]; }
};

/// Encodes and raw-decodes every sentence that validates as a tree. Repair
/// runs afterwards (single root enforced) only to count interventions; it
/// never contributes recovered heads.
CoverageReport measure(const Treebank& treebank, Encoding encoding, std::string name);

enum class ReportFormat { text, tsv, json };

/// One row per report. Text shows percentages; tsv and json carry raw
/// fractions. With two or more treebanks a macro-average row per encoding is
/// appended: inventories and coverages are averaged, counts are summed.
void render_report(const std::vector<CoverageReport>& reports, ReportFormat format,
                   std::ostream& out);

}  // namespace deplab
