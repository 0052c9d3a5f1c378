#include "deplab/stats.hpp"

#include <iomanip>
#include <map>
#include <ostream>
#include <set>

#include "json.hpp"

#include "deplab/four_bit.hpp"
#include "deplab/seven_bit.hpp"

namespace deplab {

const char* to_string(Encoding encoding) {
  return encoding == Encoding::bits4 ? "4bit" : "7bit";
}

CoverageReport measure(const Treebank& treebank, Encoding encoding, std::string name) {
  CoverageReport rep;
  rep.treebank = std::move(name);
  rep.encoding = encoding;
  rep.skipped = treebank.skipped_sentences;

  std::set<std::string> labels, combined;
  for (const Sentence& sentence : treebank.sentences) {
    const DepTree& gold = sentence.tree;
    if (!gold.is_tree()) {
      ++rep.skipped;
      continue;
    }
    ++rep.sentences;
    rep.words += gold.size();

    std::vector<int> decoded;
    RepairLog log;
    if (encoding == Encoding::bits4) {
      const auto encoded = bits4::encode(gold);
      for (int i = 1; i <= gold.size(); ++i) {
        const std::string bits = encoded[i - 1].bits();
        labels.insert(bits);
        combined.insert(bits + '\t' + gold.deprel(i));
      }
      auto raw = bits4::decode_raw(encoded);
      decoded = std::move(raw.heads);
      log = std::move(raw.log);
    } else {
      auto encoded = bits7::encode(gold);
      for (int i = 1; i <= gold.size(); ++i) {
        const std::string bits = encoded.labels[i - 1].bits();
        labels.insert(bits);
        combined.insert(bits + '\t' + gold.deprel(i));
      }
      log = std::move(encoded.log);
      auto raw = bits7::decode_raw(encoded.labels);
      decoded = std::move(raw.heads);
      log.append(raw.log);
    }

    int hits = 0;
    for (int i = 1; i <= gold.size(); ++i)
      if (decoded[i - 1] == gold.head(i)) ++hits;
    rep.arcs_recovered += hits;
    if (hits == gold.size()) ++rep.trees_recovered;

    log.append(repair(decoded, {.enforce_single_root = true}).log);
    for (const RepairEvent& e : log.events)
      ++rep.event_counts[static_cast<std::size_t>(e.kind)];
    if (!log.empty()) ++rep.sentences_with_events;
  }
  rep.label_inventory = static_cast<int>(labels.size());
  rep.combined_inventory = static_cast<int>(combined.size());
  return rep;
}

namespace {

constexpr std::array<RepairKind, 6> kAllKinds = {
    RepairKind::empty_stack_skip, RepairKind::leftover_stack,
    RepairKind::dropped_arc,      RepairKind::attach_headless,
    RepairKind::cycle_break,      RepairKind::extra_root_reattach,
};

struct MacroRow {
  Encoding encoding;
  double label_inventory = 0, combined_inventory = 0;
  double arc_coverage = 0, tree_coverage = 0;
  long sentences = 0, skipped = 0, words = 0, sentences_with_events = 0;
  std::array<long, 6> event_counts{};
  int rows = 0;
};

std::vector<MacroRow> macro_rows(const std::vector<CoverageReport>& reports) {
  std::set<std::string> names;
  for (const auto& r : reports) names.insert(r.treebank);
  if (names.size() < 2) return {};
  std::map<Encoding, MacroRow> by_enc;
  for (const auto& r : reports) {
    MacroRow& m = by_enc.try_emplace(r.encoding, MacroRow{r.encoding}).first->second;
    m.label_inventory += r.label_inventory;
    m.combined_inventory += r.combined_inventory;
    m.arc_coverage += r.arc_coverage();
    m.tree_coverage += r.tree_coverage();
    m.sentences += r.sentences;
    m.skipped += r.skipped;
    m.words += r.words;
    m.sentences_with_events += r.sentences_with_events;
    for (std::size_t k = 0; k < m.event_counts.size(); ++k)
      m.event_counts[k] += r.event_counts[k];
    ++m.rows;
  }
  std::vector<MacroRow> out;
  for (auto& [enc, m] : by_enc) {
    m.label_inventory /= m.rows;
    m.combined_inventory /= m.rows;
    m.arc_coverage /= m.rows;
    m.tree_coverage /= m.rows;
    out.push_back(m);
  }
  return out;
}

void render_text(const std::vector<CoverageReport>& reports, std::ostream& out) {
  const auto line = [&](const std::string& treebank, const char* enc, double labels,
                        double combined, double arc, double tree, long sents, long words,
                        long skipped, long repaired, long dropped, bool averaged) {
    out << std::left << std::setw(28) << treebank << std::right << std::setw(6) << enc;
    out << std::fixed;
    if (averaged)
      out << std::setw(8) << std::setprecision(1) << labels << std::setw(8) << combined;
    else
      out << std::setw(8) << static_cast<long>(labels) << std::setw(8)
          << static_cast<long>(combined);
    out << std::setw(10) << std::setprecision(4) << arc * 100.0 << std::setw(10)
        << tree * 100.0 << std::setw(10) << sents << std::setw(10) << words << std::setw(7)
        << skipped << std::setw(10) << repaired << std::setw(9) << dropped << '\n';
  };
  out << std::left << std::setw(28) << "treebank" << std::right << std::setw(6) << "enc"
      << std::setw(8) << "L" << std::setw(8) << "L+rel" << std::setw(10) << "arc%"
      << std::setw(10) << "tree%" << std::setw(10) << "sents" << std::setw(10) << "words"
      << std::setw(7) << "skip" << std::setw(10) << "repaired" << std::setw(9) << "dropped"
      << '\n';
  for (const auto& r : reports)
    line(r.treebank, to_string(r.encoding), r.label_inventory, r.combined_inventory,
         r.arc_coverage(), r.tree_coverage(), r.sentences, r.words, r.skipped,
         r.sentences_with_events, r.events(RepairKind::dropped_arc), false);
  for (const auto& m : macro_rows(reports))
    line("macro-average", to_string(m.encoding), m.label_inventory, m.combined_inventory,
         m.arc_coverage, m.tree_coverage, m.sentences, m.words, m.skipped,
         m.sentences_with_events, m.event_counts[static_cast<std::size_t>(RepairKind::dropped_arc)],
         true);
}

void render_tsv(const std::vector<CoverageReport>& reports, std::ostream& out) {
  out << "treebank\tencoding\tlabel_inventory\tcombined_inventory\tarc_coverage\t"
         "tree_coverage\tsentences\twords\tskipped\tsentences_with_events";
  for (RepairKind kind : kAllKinds) out << '\t' << to_string(kind);
  out << '\n';
  out << std::setprecision(10);
  for (const auto& r : reports) {
    out << r.treebank << '\t' << to_string(r.encoding) << '\t' << r.label_inventory << '\t'
        << r.combined_inventory << '\t' << r.arc_coverage() << '\t' << r.tree_coverage()
        << '\t' << r.sentences << '\t' << r.words << '\t' << r.skipped << '\t'
        << r.sentences_with_events;
    for (RepairKind kind : kAllKinds) out << '\t' << r.events(kind);
    out << '\n';
  }
  for (const auto& m : macro_rows(reports)) {
    out << "macro-average\t" << to_string(m.encoding) << '\t' << m.label_inventory << '\t'
        << m.combined_inventory << '\t' << m.arc_coverage << '\t' << m.tree_coverage << '\t'
        << m.sentences << '\t' << m.words << '\t' << m.skipped << '\t'
        << m.sentences_with_events;
    for (RepairKind kind : kAllKinds)
      out << '\t' << m.event_counts[static_cast<std::size_t>(kind)];
    out << '\n';
  }
}

void render_json(const std::vector<CoverageReport>& reports, std::ostream& out) {
  nlohmann::json rows = nlohmann::json::array();
  const auto counts = [](const std::array<long, 6>& events) {
    nlohmann::json c;
    for (RepairKind kind : kAllKinds)
      c[to_string(kind)] = events[static_cast<std::size_t>(kind)];
    return c;
  };
  for (const auto& r : reports) {
    rows.push_back({{"treebank", r.treebank},
                    {"encoding", to_string(r.encoding)},
                    {"label_inventory", r.label_inventory},
                    {"combined_inventory", r.combined_inventory},
                    {"arc_coverage", r.arc_coverage()},
                    {"tree_coverage", r.tree_coverage()},
                    {"sentences", r.sentences},
                    {"words", r.words},
                    {"skipped", r.skipped},
                    {"sentences_with_events", r.sentences_with_events},
                    {"events", counts(r.event_counts)}});
  }
  for (const auto& m : macro_rows(reports)) {
    rows.push_back({{"treebank", "macro-average"},
                    {"encoding", to_string(m.encoding)},
                    {"label_inventory", m.label_inventory},
                    {"combined_inventory", m.combined_inventory},
                    {"arc_coverage", m.arc_coverage},
                    {"tree_coverage", m.tree_coverage},
                    {"sentences", m.sentences},
                    {"words", m.words},
                    {"skipped", m.skipped},
                    {"sentences_with_events", m.sentences_with_events},
                    {"events", counts(m.event_counts)}});
  }
  out << rows.dump(2) << '\n';
}

}  // namespace

void render_report(const std::vector<CoverageReport>& reports, ReportFormat format,
                   std::ostream& out) {
  switch (format) {
    case ReportFormat::text: render_text(reports, out); break;
    case ReportFormat::tsv: render_tsv(reports, out); break;
    case ReportFormat::json: render_json(reports, out); break;
  }
}

}  // namespace deplab
