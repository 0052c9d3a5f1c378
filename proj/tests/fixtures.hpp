#pragma once

#include <string>
#include <vector>

#include "deplab/tree.hpp"

// Two hand-checked sentences used across the suite: a projective one and a
// non-projective one whose single crossing needs the second plane.
namespace fixtures {

inline deplab::DepTree defanged() {
  return deplab::DepTree({3, 3, 0, 6, 6, 3, 3},
                         {"nsubj", "aux", "root", "mark", "aux", "xcomp", "punct"},
                         {"It", "should", "continue", "to", "be", "defanged", "."});
}

inline const std::vector<std::string>& defanged_bits4() {
  static const std::vector<std::string> bits = {"0100", "0000", "1111", "0100",
                                                "0000", "1010", "1100"};
  return bits;
}

inline const std::vector<std::string>& defanged_brackets4() {
  static const std::vector<std::string> brackets = {"<*", "<", "\\>*/", "<*",
                                                    "<",  "\\>", ">*"};
  return brackets;
}

inline deplab::DepTree country() {
  return deplab::DepTree({2, 5, 5, 5, 0, 2, 5},
                         {"det", "obl", "aux", "nsubj", "root", "case", "punct"},
                         {"What", "country", "are", "we", "talking", "about", "?"});
}

inline const std::vector<std::string>& country_bits7() {
  static const std::vector<std::string> bits = {"0010000", "0011001", "0000000", "0000000",
                                                "1011100", "1110000", "1010000"};
  return bits;
}

inline const std::vector<std::string>& country_brackets7() {
  static const std::vector<std::string> brackets = {"<0*", "\\0<0*/1", "<0",  "<0",
                                                    "\\0>0*/0", ">1*", ">0*"};
  return brackets;
}

}  // namespace fixtures
