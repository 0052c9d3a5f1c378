#include "deplab/tree.hpp"

#include <utility>

namespace deplab {

bool cross(const Arc& a, const Arc& b) {
  const int al = a.left(), ar = a.right();
  const int bl = b.left(), br = b.right();
  return (al < bl && bl < ar && ar < br) || (bl < al && al < br && br < ar);
}

DepTree::DepTree(std::vector<int> heads, std::vector<std::string> deprels,
                 std::vector<std::string> forms)
    : heads_(std::move(heads)), deprels_(std::move(deprels)), forms_(std::move(forms)) {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    const int h = heads_[i - 1];
    if (h < 0 || h > n)
      throw InvalidTreeError("head of word " + std::to_string(i) +
                             " out of range: " + std::to_string(h));
    if (h == i)
      throw InvalidTreeError("word " + std::to_string(i) + " is its own head");
  }
  if (deprels_.empty()) deprels_.resize(n);
  if (forms_.empty()) forms_.resize(n);
  if (static_cast<int>(deprels_.size()) != n || static_cast<int>(forms_.size()) != n)
    throw InvalidTreeError("annotation length does not match word count");
}

int DepTree::index(int word) const {
  if (word < 1 || word > size())
    throw std::out_of_range("word index " + std::to_string(word) + " out of 1.." +
                            std::to_string(size()));
  return word - 1;
}

std::vector<int> DepTree::roots() const {
  std::vector<int> r;
  for (int i = 1; i <= size(); ++i)
    if (heads_[i - 1] == 0) r.push_back(i);
  return r;
}

bool DepTree::is_forest(std::string* reason) const {
  const int n = size();
  // Walk head chains; every chain must reach the dummy root without
  // revisiting a node that is still on the current chain.
  std::vector<unsigned char> state(n + 1, 0);  // 0 new, 1 on chain, 2 done
  state[0] = 2;
  for (int i = 1; i <= n; ++i) {
    if (state[i] != 0) continue;
    int w = i;
    while (state[w] == 0) {
      state[w] = 1;
      w = heads_[w - 1];
    }
    if (state[w] == 1) {
      if (reason) *reason = "head cycle through word " + std::to_string(w);
      return false;
    }
    for (int v = i; state[v] == 1; v = heads_[v - 1]) state[v] = 2;
  }
  return true;
}

bool DepTree::is_tree(std::string* reason) const {
  if (!is_forest(reason)) return false;
  const auto r = roots();
  if (size() > 0 && r.size() != 1) {
    if (reason)
      *reason = r.empty() ? std::string("no word is attached to the dummy root")
                          : std::to_string(r.size()) + " words attached to the dummy root";
    return false;
  }
  return true;
}

void DepTree::ensure_forest() const {
  std::string reason;
  if (!is_forest(&reason)) throw InvalidTreeError("not a valid forest: " + reason);
}

void DepTree::ensure_tree() const {
  std::string reason;
  if (!is_tree(&reason)) throw InvalidTreeError("not a valid tree: " + reason);
}

std::vector<Arc> DepTree::arcs() const {
  std::vector<Arc> out;
  out.reserve(heads_.size());
  for (int i = 1; i <= size(); ++i) out.push_back({heads_[i - 1], i});
  return out;
}

bool is_projective(const DepTree& tree) {
  tree.ensure_tree();
  const auto arcs = tree.arcs();
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = a + 1; b < arcs.size(); ++b)
      if (cross(arcs[a], arcs[b])) return false;
  return true;
}

bool covered_by_4bit(const DepTree& tree) {
  tree.ensure_forest();
  std::vector<Arc> rights, lefts;
  for (const Arc& arc : tree.arcs())
    (arc.rightward() ? rights : lefts).push_back(arc);
  for (const auto& dir : {rights, lefts})
    for (std::size_t a = 0; a < dir.size(); ++a)
      for (std::size_t b = a + 1; b < dir.size(); ++b)
        if (cross(dir[a], dir[b])) return false;
  return true;
}

}  // namespace deplab
