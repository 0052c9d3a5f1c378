#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "deplab/conllu.hpp"
#include "deplab/four_bit.hpp"
#include "deplab/label_file.hpp"
#include "deplab/seven_bit.hpp"
#include "deplab/stats.hpp"

namespace {

using namespace deplab;

enum LogLevel { kQuiet = 0, kWarn = 1, kInfo = 2 };

int log_level() {
  static const int level = [] {
    const char* env = std::getenv("DEPLAB_LOG");
    if (env == nullptr) return kWarn;
    const std::string v(env);
    if (v == "quiet") return kQuiet;
    if (v == "info") return kInfo;
    return kWarn;
  }();
  return level;
}

void warn(const std::string& message) {
  if (log_level() >= kWarn) std::cerr << "deplab: warning: " << message << '\n';
}

void info(const std::string& message) {
  if (log_level() >= kInfo) std::cerr << "deplab: " << message << '\n';
}

std::string basename_of(const std::string& path) {
  const std::size_t slash = path.find_last_of('/');
  std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
  const std::size_t dot = name.rfind(".conllu");
  if (dot != std::string::npos && dot == name.size() - 7) name.resize(dot);
  return name.empty() ? "stdin" : name;
}

// Runs fn over every input path, or over stdin when none are given.
// Returns false when a file cannot be opened.
bool for_each_input(const std::vector<std::string>& paths,
                    const std::function<void(std::istream&, const std::string&)>& fn) {
  if (paths.empty()) {
    fn(std::cin, "stdin");
    return true;
  }
  for (const std::string& path : paths) {
    std::ifstream in(path);
    if (!in) {
      std::cerr << "deplab: error: cannot open '" << path << "'\n";
      return false;
    }
    fn(in, path);
  }
  return true;
}

struct OutputStream {
  explicit OutputStream(const std::string& path) {
    if (!path.empty()) {
      file.open(path);
      ok = static_cast<bool>(file);
      if (!ok) std::cerr << "deplab: error: cannot write '" << path << "'\n";
    }
  }
  std::ostream& stream() { return file.is_open() ? file : std::cout; }
  std::ofstream file;
  bool ok = true;
};

void report_diagnostics(const Treebank& tb, const std::string& name) {
  for (const ParseDiagnostic& d : tb.diagnostics)
    warn(name + ":" + std::to_string(d.line) + ": " + d.message + " (sentence skipped)");
}

std::string summarize(const RepairLog& log) {
  std::ostringstream out;
  bool first = true;
  for (RepairKind kind :
       {RepairKind::empty_stack_skip, RepairKind::leftover_stack, RepairKind::dropped_arc,
        RepairKind::attach_headless, RepairKind::cycle_break,
        RepairKind::extra_root_reattach}) {
    const std::size_t n = log.count(kind);
    if (n == 0) continue;
    if (!first) out << ", ";
    out << to_string(kind) << " " << n;
    first = false;
  }
  return first ? "none" : out.str();
}

struct EncodeCommand {
  std::string encoding = "4bit";
  std::string syntax = "bits";
  std::string output;
  std::vector<std::string> inputs;

  int run() const {
    OutputStream out(output);
    if (!out.ok) return 1;
    std::vector<LabeledSentence> sentences;
    long skipped = 0;
    RepairLog drops;
    const bool ok = for_each_input(inputs, [&](std::istream& in, const std::string& name) {
      Treebank tb = parse_conllu(in);
      report_diagnostics(tb, name);
      skipped += tb.skipped_sentences;
      for (const Sentence& sentence : tb.sentences) {
        if (!sentence.tree.is_forest()) {
          warn(name + ": sentence is not a forest; skipped");
          ++skipped;
          continue;
        }
        LabeledSentence ls;
        ls.forms = sentence.tree.forms();
        ls.deprels = sentence.tree.deprels();
        if (encoding == "4bit") {
          for (const Label4& l : bits4::encode(sentence.tree))
            ls.labels.push_back(syntax == "brackets" ? l.brackets() : l.bits());
        } else {
          bits7::EncodeResult encoded = bits7::encode(sentence.tree);
          drops.append(encoded.log);
          for (const Label7& l : encoded.labels)
            ls.labels.push_back(syntax == "brackets" ? l.brackets() : l.bits());
        }
        sentences.push_back(std::move(ls));
      }
    });
    if (!ok) return 1;
    write_labels(sentences, out.stream());
    if (drops.count(RepairKind::dropped_arc) > 0)
      warn(std::to_string(drops.count(RepairKind::dropped_arc)) +
           " arcs had no usable plane and were dropped");
    info("encoded " + std::to_string(sentences.size()) + " sentences (" +
         std::to_string(skipped) + " skipped)");
    return 0;
  }
};

struct DecodeCommand {
  std::string encoding = "4bit";
  std::string output;
  bool forest = false;
  std::vector<std::string> inputs;

  int run() const {
    OutputStream out(output);
    if (!out.ok) return 1;
    Treebank decoded;
    RepairLog all;
    long repaired_sentences = 0, skipped = 0, index = 0;
    const bool ok = for_each_input(inputs, [&](std::istream& in, const std::string& name) {
      for (LabeledSentence& ls : read_labels(in)) {
        ++index;
        DecodeResult result;
        try {
          const RepairOptions options{.enforce_single_root = !forest};
          if (encoding == "4bit") {
            std::vector<Label4> labels;
            labels.reserve(ls.labels.size());
            for (const std::string& s : ls.labels) labels.push_back(Label4::parse(s));
            result = bits4::decode(labels, options);
          } else {
            std::vector<Label7> labels;
            labels.reserve(ls.labels.size());
            for (const std::string& s : ls.labels) labels.push_back(Label7::parse(s));
            result = bits7::decode(labels, options);
          }
        } catch (const LabelSyntaxError& e) {
          warn(name + ": sentence " + std::to_string(index) + ": " + e.what() +
               " (sentence skipped)");
          ++skipped;
          continue;
        }
        for (const RepairEvent& e : result.log.events)
          info("sentence " + std::to_string(index) + ", word " + std::to_string(e.word) +
               ": " + to_string(e.kind) + ": " + e.detail);
        if (!result.log.empty()) ++repaired_sentences;
        all.append(result.log);
        decoded.sentences.push_back({DepTree(result.tree.heads(), std::move(ls.deprels),
                                             std::move(ls.forms)),
                                     {}});
      }
    });
    if (!ok) return 1;
    write_conllu(decoded, out.stream());
    warn("decoded " + std::to_string(decoded.sentences.size()) + " sentences (" +
         std::to_string(skipped) + " skipped), " + std::to_string(repaired_sentences) +
         " needed repairs: " + summarize(all));
    return 0;
  }
};

struct RoundtripCommand {
  std::string encoding = "4bit";
  std::string output;
  bool forest = false;
  std::vector<std::string> inputs;

  int run() const {
    OutputStream out(output);
    if (!out.ok) return 1;
    Treebank result;
    long words = 0, hits = 0, sentences = 0, exact = 0, skipped = 0;
    const bool ok = for_each_input(inputs, [&](std::istream& in, const std::string& name) {
      Treebank tb = parse_conllu(in);
      report_diagnostics(tb, name);
      skipped += tb.skipped_sentences;
      for (Sentence& sentence : tb.sentences) {
        if (!sentence.tree.is_forest()) {
          warn(name + ": sentence is not a forest; skipped");
          ++skipped;
          continue;
        }
        const DepTree& gold = sentence.tree;
        RawDecode raw;
        if (encoding == "4bit") {
          raw = bits4::decode_raw(bits4::encode(gold));
        } else {
          raw = bits7::decode_raw(bits7::encode(gold).labels);
        }
        ++sentences;
        words += gold.size();
        int sentence_hits = 0;
        for (int i = 1; i <= gold.size(); ++i)
          if (raw.heads[i - 1] == gold.head(i)) ++sentence_hits;
        hits += sentence_hits;
        if (sentence_hits == gold.size()) ++exact;
        const RepairResult fixed =
            repair(raw.heads, {.enforce_single_root = !forest});
        result.sentences.push_back(
            {DepTree(fixed.tree.heads(), gold.deprels(), gold.forms()), sentence.comments});
      }
    });
    if (!ok) return 1;
    write_conllu(result, out.stream());
    std::ostringstream summary;
    summary.precision(4);
    summary << std::fixed << "roundtrip (" << encoding << "): arc coverage "
            << (words > 0 ? 100.0 * hits / words : 100.0) << "% (" << hits << "/" << words
            << "), tree coverage " << (sentences > 0 ? 100.0 * exact / sentences : 100.0)
            << "% (" << exact << "/" << sentences << "), skipped " << skipped;
    std::cerr << summary.str() << '\n';
    return 0;
  }
};

struct StatsCommand {
  std::vector<std::string> encodings;
  std::string format = "text";
  std::string output;
  std::vector<std::string> inputs;

  int run() const {
    OutputStream out(output);
    if (!out.ok) return 1;
    std::vector<CoverageReport> reports;
    const bool ok = for_each_input(inputs, [&](std::istream& in, const std::string& name) {
      const Treebank tb = parse_conllu(in);
      report_diagnostics(tb, name);
      for (const std::string& enc : encodings)
        reports.push_back(measure(tb, enc == "4bit" ? Encoding::bits4 : Encoding::bits7,
                                  basename_of(name)));
    });
    if (!ok) return 1;
    const ReportFormat fmt = format == "tsv"    ? ReportFormat::tsv
                             : format == "json" ? ReportFormat::json
                                                : ReportFormat::text;
    render_report(reports, fmt, out.stream());
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dependency trees as per-word labels: 4-bit projective and 7-bit two-plane codecs"};
  app.set_version_flag("--version", "deplab 0.1.0");
  app.require_subcommand(1);

  EncodeCommand encode;
  auto* enc = app.add_subcommand("encode", "CoNLL-U in, label TSV out");
  enc->add_option("--encoding", encode.encoding, "Label codec")
      ->check(CLI::IsMember({"4bit", "7bit"}))
      ->capture_default_str();
  enc->add_option("--syntax", encode.syntax, "Label syntax to write")
      ->check(CLI::IsMember({"bits", "brackets"}))
      ->capture_default_str();
  enc->add_option("-o,--output", encode.output, "Output file (default stdout)");
  enc->add_option("inputs", encode.inputs, "CoNLL-U files (default stdin)");

  DecodeCommand decode;
  auto* dec = app.add_subcommand("decode", "Label TSV in, CoNLL-U out");
  dec->add_option("--encoding", decode.encoding, "Label codec")
      ->check(CLI::IsMember({"4bit", "7bit"}))
      ->capture_default_str();
  dec->add_flag("--forest", decode.forest,
                "Keep multiple roots instead of enforcing a single root");
  dec->add_option("-o,--output", decode.output, "Output file (default stdout)");
  dec->add_option("inputs", decode.inputs, "Label TSV files (default stdin)");

  RoundtripCommand roundtrip;
  auto* rt = app.add_subcommand("roundtrip", "CoNLL-U through encode and decode");
  rt->add_option("--encoding", roundtrip.encoding, "Label codec")
      ->check(CLI::IsMember({"4bit", "7bit"}))
      ->capture_default_str();
  rt->add_flag("--forest", roundtrip.forest,
               "Keep multiple roots instead of enforcing a single root");
  rt->add_option("-o,--output", roundtrip.output, "Output file (default stdout)");
  rt->add_option("inputs", roundtrip.inputs, "CoNLL-U files (default stdin)");

  StatsCommand stats;
  auto* st = app.add_subcommand("stats", "Coverage and label-inventory report");
  st->add_option("--encoding", stats.encodings, "Codec to measure (repeatable)")
      ->check(CLI::IsMember({"4bit", "7bit"}))
      ->allow_extra_args(false)
      ->take_all();
  st->add_option("--format", stats.format, "Report format")
      ->check(CLI::IsMember({"text", "tsv", "json"}))
      ->capture_default_str();
  st->add_option("-o,--output", stats.output, "Output file (default stdout)");
  st->add_option("inputs", stats.inputs, "CoNLL-U files (default stdin)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
  }

  if (stats.encodings.empty()) stats.encodings = {"4bit", "7bit"};

  try {
    if (enc->parsed()) return encode.run();
    if (dec->parsed()) return decode.run();
    if (rt->parsed()) return roundtrip.run();
    if (st->parsed()) return stats.run();
  } catch (const std::exception& e) {
    std::cerr << "deplab: error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
