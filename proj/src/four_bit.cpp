#include "deplab/four_bit.hpp"

#include "pass.hpp"

namespace deplab::bits4 {

std::vector<Label4> encode(const DepTree& tree) {
  tree.ensure_forest();
  const int n = tree.size();
  // Outermost = smallest left dependent / largest right dependent per head.
  std::vector<int> first_left(n + 1, 0), last_right(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    const int h = tree.head(i);
    if (i < h) {
      if (first_left[h] == 0 || i < first_left[h]) first_left[h] = i;
    } else {
      if (i > last_right[h]) last_right[h] = i;
    }
  }
  std::vector<Label4> labels(n);
  for (int i = 1; i <= n; ++i) {
    const int h = tree.head(i);
    Label4& l = labels[i - 1];
    l.right_dep = h < i;
    l.outermost = l.right_dep ? last_right[h] == i : first_left[h] == i;
    l.has_left = first_left[i] != 0;
    l.has_right = last_right[i] != 0;
  }
  return labels;
}

PassResult decode_right_arcs(const std::vector<Label4>& labels) {
  const int n = static_cast<int>(labels.size());
  auto at = [&](int i) -> const Label4& { return labels[i - 1]; };
  return detail::run_pass(
      n, /*rightward=*/true, [&](int i) { return at(i).right_dep; },
      [&](int i) { return at(i).outermost; }, [&](int i) { return at(i).has_right; });
}

PassResult decode_left_arcs(const std::vector<Label4>& labels) {
  const int n = static_cast<int>(labels.size());
  auto at = [&](int i) -> const Label4& { return labels[i - 1]; };
  return detail::run_pass(
      n, /*rightward=*/false, [&](int i) { return !at(i).right_dep; },
      [&](int i) { return at(i).outermost; }, [&](int i) { return at(i).has_left; });
}

RawDecode decode_raw(const std::vector<Label4>& labels) {
  RawDecode out;
  out.heads.assign(labels.size(), kNoHead);
  for (auto* pass : {&decode_right_arcs, &decode_left_arcs}) {
    PassResult r = pass(labels);
    for (const Arc& arc : r.arcs) out.heads[arc.dep - 1] = arc.head;
    out.log.append(r.events);
    out.pushes += r.pushes;
    out.pops += r.pops;
  }
  return out;
}

DecodeResult decode(const std::vector<Label4>& labels, const RepairOptions& options) {
  RawDecode raw = decode_raw(labels);
  RepairResult fixed = repair(raw.heads, options);
  RepairLog log = std::move(raw.log);
  log.append(fixed.log);
  return {std::move(fixed.tree), std::move(log)};
}

}  // namespace deplab::bits4
