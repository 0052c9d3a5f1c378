#include "deplab/seven_bit.hpp"

#include "pass.hpp"

namespace deplab::bits7 {

EncodeResult encode(const DepTree& tree) {
  const PlaneAssignment pa = assign_planes(tree);  // validates the forest
  const int n = tree.size();

  EncodeResult out;
  // Outermost dependent per (head, side, plane), over assigned arcs only.
  std::vector<int> first_left[2] = {std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0)};
  std::vector<int> last_right[2] = {std::vector<int>(n + 1, 0), std::vector<int>(n + 1, 0)};
  for (int i = 1; i <= n; ++i) {
    const int p = pa.plane_of(i);
    if (p == kNoPlane) {
      out.log.add(RepairKind::dropped_arc, i, "arc had no usable plane; dropped");
      continue;
    }
    const int h = tree.head(i);
    if (i < h) {
      int& fl = first_left[p][h];
      if (fl == 0 || i < fl) fl = i;
    } else {
      int& lr = last_right[p][h];
      if (i > lr) lr = i;
    }
  }

  out.labels.resize(n);
  for (int i = 1; i <= n; ++i) {
    const int h = tree.head(i);
    const int p = pa.plane_of(i);
    Label7& l = out.labels[i - 1];
    if (p == kNoPlane) {
      l.right_dep = true;  // default incoming bits for a dropped arc
    } else {
      l.right_dep = h < i;
      l.plane1 = p == 1;
      l.outermost = l.right_dep ? last_right[p][h] == i : first_left[p][h] == i;
    }
    l.left_p0 = first_left[0][i] != 0;
    l.right_p0 = last_right[0][i] != 0;
    l.left_p1 = first_left[1][i] != 0;
    l.right_p1 = last_right[1][i] != 0;
  }
  return out;
}

RawDecode decode_raw(const std::vector<Label7>& labels) {
  const int n = static_cast<int>(labels.size());
  auto at = [&](int i) -> const Label7& { return labels[i - 1]; };

  RawDecode out;
  out.heads.assign(labels.size(), kNoHead);
  for (int plane = 0; plane < 2; ++plane) {
    const bool p1 = plane == 1;
    auto incoming = [&](int i, bool right) {
      const Label7& l = at(i);
      return l.right_dep == right && l.plane1 == p1;
    };
    PassResult right = detail::run_pass(
        n, /*rightward=*/true, [&](int i) { return incoming(i, true); },
        [&](int i) { return at(i).outermost; },
        [&](int i) { return p1 ? at(i).right_p1 : at(i).right_p0; });
    PassResult left = detail::run_pass(
        n, /*rightward=*/false, [&](int i) { return incoming(i, false); },
        [&](int i) { return at(i).outermost; },
        [&](int i) { return p1 ? at(i).left_p1 : at(i).left_p0; });
    for (const PassResult* pass : {&right, &left}) {
      for (const Arc& arc : pass->arcs) out.heads[arc.dep - 1] = arc.head;
      out.log.append(pass->events);
      out.pushes += pass->pushes;
      out.pops += pass->pops;
    }
  }
  return out;
}

DecodeResult decode(const std::vector<Label7>& labels, const RepairOptions& options) {
  RawDecode raw = decode_raw(labels);
  RepairResult fixed = repair(raw.heads, options);
  RepairLog log = std::move(raw.log);
  log.append(fixed.log);
  return {std::move(fixed.tree), std::move(log)};
}

}  // namespace deplab::bits7
