#include "deplab/labels.hpp"

#include <algorithm>

namespace deplab {
namespace {

bool all_binary(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return c == '0' || c == '1'; });
}

bool bit_at(std::string_view s, std::size_t i) { return s[i] == '1'; }

[[noreturn]] void bad_label(std::string_view s, const char* what) {
  throw LabelSyntaxError(std::string(what) + ": '" + std::string(s) + "'");
}

// Consumes `token` at the cursor if present.
bool eat(std::string_view s, std::size_t& k, std::string_view token) {
  if (s.substr(k, token.size()) == token) {
    k += token.size();
    return true;
  }
  return false;
}

}  // namespace

std::string Label4::bits() const {
  std::string s(4, '0');
  s[0] = right_dep ? '1' : '0';
  s[1] = outermost ? '1' : '0';
  s[2] = has_left ? '1' : '0';
  s[3] = has_right ? '1' : '0';
  return s;
}

std::string Label4::brackets() const {
  std::string s;
  if (has_left) s += '\\';
  s += right_dep ? '>' : '<';
  if (outermost) s += '*';
  if (has_right) s += '/';
  return s;
}

Label4 Label4::from_bits(std::string_view s) {
  if (s.size() != 4 || !all_binary(s)) bad_label(s, "4-bit label needs 4 binary digits");
  return {bit_at(s, 0), bit_at(s, 1), bit_at(s, 2), bit_at(s, 3)};
}

Label4 Label4::from_brackets(std::string_view s) {
  Label4 l;
  std::size_t k = 0;
  l.has_left = eat(s, k, "\\");
  if (eat(s, k, ">"))
    l.right_dep = true;
  else if (!eat(s, k, "<"))
    bad_label(s, "expected '<' or '>' in 4-bit bracket label");
  l.outermost = eat(s, k, "*");
  l.has_right = eat(s, k, "/");
  if (k != s.size()) bad_label(s, "trailing characters in 4-bit bracket label");
  return l;
}

Label4 Label4::parse(std::string_view s) {
  if (all_binary(s)) return from_bits(s);
  return from_brackets(s);
}

std::string Label7::bits() const {
  std::string s(7, '0');
  const bool b[7] = {right_dep, plane1, outermost, left_p0, right_p0, left_p1, right_p1};
  for (int i = 0; i < 7; ++i) s[i] = b[i] ? '1' : '0';
  return s;
}

std::string Label7::brackets() const {
  std::string s;
  if (left_p0) s += "\\0";
  s += right_dep ? '>' : '<';
  s += plane1 ? '1' : '0';
  if (outermost) s += '*';
  if (right_p0) s += "/0";
  if (left_p1) s += "\\1";
  if (right_p1) s += "/1";
  return s;
}

Label7 Label7::from_bits(std::string_view s) {
  if (s.size() != 7 || !all_binary(s)) bad_label(s, "7-bit label needs 7 binary digits");
  return {bit_at(s, 0), bit_at(s, 1), bit_at(s, 2), bit_at(s, 3),
          bit_at(s, 4), bit_at(s, 5), bit_at(s, 6)};
}

Label7 Label7::from_brackets(std::string_view s) {
  Label7 l;
  std::size_t k = 0;
  l.left_p0 = eat(s, k, "\\0");
  if (eat(s, k, ">"))
    l.right_dep = true;
  else if (!eat(s, k, "<"))
    bad_label(s, "expected '<' or '>' in 7-bit bracket label");
  if (eat(s, k, "1"))
    l.plane1 = true;
  else if (!eat(s, k, "0"))
    bad_label(s, "expected plane digit after direction");
  l.outermost = eat(s, k, "*");
  l.right_p0 = eat(s, k, "/0");
  l.left_p1 = eat(s, k, "\\1");
  l.right_p1 = eat(s, k, "/1");
  if (k != s.size()) bad_label(s, "trailing characters in 7-bit bracket label");
  return l;
}

Label7 Label7::parse(std::string_view s) {
  if (all_binary(s)) return from_bits(s);
  return from_brackets(s);
}

}  // namespace deplab
