#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace deplab {

struct InvalidTreeError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A single dependency arc. Word indices are 1-based; index 0 is the dummy
/// root placed to the left of the sentence. An arc is rightward iff its head
/// precedes its dependent, so dummy-root arcs are always rightward.
struct Arc {
  int head = 0;
  int dep = 0;

  bool rightward() const { return head < dep; }
  int left() const { return head < dep ? head : dep; }
  int right() const { return head < dep ? dep : head; }

  friend bool operator==(const Arc&, const Arc&) = default;
};

/// True iff the endpoint spans strictly interleave. Arcs sharing an endpoint
/// never cross.
bool cross(const Arc& a, const Arc& b);

/// A sentence's dependency structure: one head per word plus dependency-type
/// and surface strings. Words are numbered 1..n; head value 0 is the dummy
/// root. Construction rejects out-of-range heads and self-loops; acyclicity
/// is checked by is_forest / is_tree. Immutable after construction.
class DepTree {
 public:
  DepTree() = default;
  explicit DepTree(std::vector<int> heads, std::vector<std::string> deprels = {},
                   std::vector<std::string> forms = {});

  int size() const { return static_cast<int>(heads_.size()); }
  int head(int word) const { return heads_[index(word)]; }
  const std::string& deprel(int word) const { return deprels_[index(word)]; }
  const std::string& form(int word) const { return forms_[index(word)]; }

  const std::vector<int>& heads() const { return heads_; }
  const std::vector<std::string>& deprels() const { return deprels_; }
  const std::vector<std::string>& forms() const { return forms_; }

  /// Words attached to the dummy root, in sentence order.
  std::vector<int> roots() const;

  /// Acyclic head relation; any number of head-0 words.
  bool is_forest(std::string* reason = nullptr) const;
  /// Forest with exactly one head-0 word.
  bool is_tree(std::string* reason = nullptr) const;

  void ensure_forest() const;
  void ensure_tree() const;

  /// All arcs (head(i), i) in dependent order; root words contribute their
  /// dummy-root arc (0, i).
  std::vector<Arc> arcs() const;

  friend bool operator==(const DepTree&, const DepTree&) = default;

 private:
  int index(int word) const;

  std::vector<int> heads_;
  std::vector<std::string> deprels_;
  std::vector<std::string> forms_;
};

/// No two arcs cross, with the dummy-root arc included in the arc set: a tree
/// whose syntactic root is covered by an arc is not projective. Requires a
/// single-root tree.
bool is_projective(const DepTree& tree);

/// No two rightward arcs cross and no two leftward arcs cross, where the
/// dummy-root arcs of all root words count as rightward arcs. This is the
/// exact class of forests the 4-bit codec round-trips losslessly.
bool covered_by_4bit(const DepTree& tree);

}  // namespace deplab
