#include "deplab/label_file.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <stdexcept>

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

}  // namespace

std::vector<LabeledSentence> read_labels(std::istream& in) {
  std::vector<LabeledSentence> sentences;
  LabeledSentence current;
  std::string line;
  int line_no = 0;
  auto flush = [&] {
    if (!current.forms.empty()) sentences.push_back(std::move(current));
    current = LabeledSentence{};
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) {
      flush();
      continue;
    }
    const auto cols = split_tabs(line);
    if (cols.size() != 4)
      throw FormatError(line_no,
                        "expected 4 tab-separated columns, got " + std::to_string(cols.size()));
    int index = 0;
    const auto [ptr, ec] = std::from_chars(cols[0].data(), cols[0].data() + cols[0].size(), index);
    if (ec != std::errc() || ptr != cols[0].data() + cols[0].size() ||
        index != static_cast<int>(current.forms.size()) + 1)
      throw FormatError(line_no, "unexpected token index '" + cols[0] + "'");
    current.forms.push_back(cols[1]);
    current.labels.push_back(cols[2]);
    current.deprels.push_back(cols[3] == "_" ? std::string() : cols[3]);
  }
  flush();
  return sentences;
}

void write_labels(const std::vector<LabeledSentence>& sentences, std::ostream& out) {
  for (const LabeledSentence& sentence : sentences) {
    if (sentence.labels.size() != sentence.forms.size() ||
        sentence.deprels.size() != sentence.forms.size())
      throw std::invalid_argument("labeled sentence lists have unequal lengths");
    for (std::size_t i = 0; i < sentence.forms.size(); ++i) {
      const std::string& form = sentence.forms[i];
      const std::string& deprel = sentence.deprels[i];
      out << i + 1 << '\t' << (form.empty() ? "_" : form) << '\t' << sentence.labels[i] << '\t'
          << (deprel.empty() ? "_" : deprel) << '\n';
    }
    out << '\n';
  }
}

}  // namespace deplab
