#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace deplab {

struct LabelSyntaxError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Per-word label of the 4-bit projective codec. Bit order in the string
/// form is b0 b1 b2 b3, leftmost first; bracket form is the concatenation
/// backslash, direction, star, slash (e.g. "\>*/").
struct Label4 {
  bool right_dep = false;  // b0: the word lies to the right of its head
  bool outermost = false;  // b1: farthest same-side dependent of its head
  bool has_left = false;   // b2: has at least one left dependent
  bool has_right = false;  // b3: has at least one right dependent

  std::string bits() const;
  std::string brackets() const;

  static Label4 from_bits(std::string_view s);
  static Label4 from_brackets(std::string_view s);
  /// Auto-detects the syntax: a string of 0/1 digits is a bit string,
  /// anything else is bracket syntax.
  static Label4 parse(std::string_view s);

  friend bool operator==(const Label4&, const Label4&) = default;
};

/// Per-word label of the 7-bit two-plane codec. Bit order is b0..b6; the
/// bracket form is backslash-0, direction+plane, star, slash-0, backslash-1,
/// slash-1 in that order (e.g. "\0<0*/1").
struct Label7 {
  bool right_dep = false;  // b0
  bool plane1 = false;     // b1: the incoming arc lies on plane 1
  bool outermost = false;  // b2: farthest dependent among the head's
                           //     same-side, same-plane dependents
  bool left_p0 = false;    // b3: has a left dependent on plane 0
  bool right_p0 = false;   // b4
  bool left_p1 = false;    // b5
  bool right_p1 = false;   // b6

  std::string bits() const;
  std::string brackets() const;

  static Label7 from_bits(std::string_view s);
  static Label7 from_brackets(std::string_view s);
  static Label7 parse(std::string_view s);

  friend bool operator==(const Label7&, const Label7&) = default;
};

}  // namespace deplab
