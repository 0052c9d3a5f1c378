#include "deplab/conllu.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace deplab {
namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> cols;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      cols.push_back(line.substr(start));
      return cols;
    }
    cols.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
}

bool parse_int(const std::string& s, int& value) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc() && ptr == last && !s.empty();
}

bool is_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

// Multiword tokens ("a-b") and empty nodes ("a.b") occupy no word index.
bool is_range_or_empty_id(const std::string& id) {
  for (char sep : {'-', '.'}) {
    const std::size_t pos = id.find(sep);
    if (pos != std::string::npos)
      return is_digits(id.substr(0, pos)) && is_digits(id.substr(pos + 1));
  }
  return false;
}

struct PendingSentence {
  std::vector<std::string> comments;
  std::vector<std::string> forms, deprels;
  std::vector<int> heads;
  bool bad = false;       // first error already recorded; keep consuming lines
  bool any_line = false;  // saw a comment or token line
  int first_line = 0;

  void clear() { *this = PendingSentence{}; }
};

void finalize(PendingSentence& pending, Treebank& tb, int line_no) {
  if (!pending.any_line) return;
  if (!pending.bad && pending.heads.empty()) {
    tb.diagnostics.push_back({pending.first_line, "sentence has no token lines"});
    ++tb.skipped_sentences;
  } else if (!pending.bad) {
    const int n = static_cast<int>(pending.heads.size());
    bool ok = true;
    for (int i = 1; i <= n && ok; ++i) {
      const int h = pending.heads[i - 1];
      if (h < 0 || h > n) {
        tb.diagnostics.push_back(
            {line_no, "head " + std::to_string(h) + " of word " + std::to_string(i) +
                          " out of range 0.." + std::to_string(n)});
        ok = false;
      } else if (h == i) {
        tb.diagnostics.push_back({line_no, "word " + std::to_string(i) + " is its own head"});
        ok = false;
      }
    }
    if (ok) {
      tb.sentences.push_back({DepTree(std::move(pending.heads), std::move(pending.deprels),
                                      std::move(pending.forms)),
                              std::move(pending.comments)});
    } else {
      ++tb.skipped_sentences;
    }
  } else {
    ++tb.skipped_sentences;
  }
  pending.clear();
}

}  // namespace

Treebank parse_conllu(std::istream& in) {
  Treebank tb;
  PendingSentence pending;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line_no == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      finalize(pending, tb, line_no);
      continue;
    }
    if (!pending.any_line) pending.first_line = line_no;
    pending.any_line = true;
    if (line[0] == '#') {
      pending.comments.push_back(line);
      continue;
    }
    if (pending.bad) continue;

    const auto cols = split_tabs(line);
    if (cols.size() != 10) {
      tb.diagnostics.push_back({line_no, "expected 10 tab-separated columns, got " +
                                             std::to_string(cols.size())});
      pending.bad = true;
      continue;
    }
    if (is_range_or_empty_id(cols[0])) continue;
    int id = 0;
    if (!parse_int(cols[0], id) || id != static_cast<int>(pending.heads.size()) + 1) {
      tb.diagnostics.push_back({line_no, "unexpected token id '" + cols[0] + "'"});
      pending.bad = true;
      continue;
    }
    int head = 0;
    if (!parse_int(cols[6], head)) {
      tb.diagnostics.push_back({line_no, "non-integer head '" + cols[6] + "'"});
      pending.bad = true;
      continue;
    }
    pending.forms.push_back(cols[1]);
    pending.heads.push_back(head);
    pending.deprels.push_back(cols[7] == "_" ? std::string() : cols[7]);
  }
  finalize(pending, tb, line_no + 1);
  return tb;
}

void write_conllu(const Treebank& treebank, std::ostream& out) {
  for (const Sentence& sentence : treebank.sentences) {
    sentence.tree.ensure_forest();
    for (const std::string& comment : sentence.comments) out << comment << '\n';
    for (int i = 1; i <= sentence.tree.size(); ++i) {
      const std::string& form = sentence.tree.form(i);
      const std::string& deprel = sentence.tree.deprel(i);
      out << i << '\t' << (form.empty() ? "_" : form) << "\t_\t_\t_\t_\t"
          << sentence.tree.head(i) << '\t' << (deprel.empty() ? "_" : deprel) << "\t_\t_\n";
    }
    out << '\n';
  }
}

std::string to_conllu(const Treebank& treebank) {
  std::ostringstream out;
  write_conllu(treebank, out);
  return out.str();
}

}  // namespace deplab
