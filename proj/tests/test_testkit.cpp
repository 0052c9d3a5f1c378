#include "deplab/testkit.hpp"

#include <set>

#include "doctest.h"
#include "fixtures.hpp"

using namespace deplab;
using namespace deplab::testkit;

namespace {

std::set<std::vector<int>> head_set(const std::vector<DepTree>& trees) {
  std::set<std::vector<int>> out;
  for (const auto& t : trees) out.insert(t.heads());
  return out;
}

}  // namespace

TEST_CASE("tiny projective universes are exactly right") {
  CHECK(head_set(enumerate(1, TreeConstraint::projective)) ==
        std::set<std::vector<int>>{{0}});
  CHECK(head_set(enumerate(2, TreeConstraint::projective)) ==
        std::set<std::vector<int>>{{0, 1}, {2, 0}});
  CHECK(enumerate(3, TreeConstraint::projective).size() == 7);
  // The two excluded trees are the ones whose root is covered.
  CHECK(enumerate(3, TreeConstraint::all_single_root_trees).size() == 9);
}

TEST_CASE("single-root tree counts follow n^(n-1)") {
  long expected = 1;
  for (int n = 1; n <= 5; ++n) {
    expected = 1;
    for (int k = 1; k < n; ++k) expected *= n;
    long count = 0;
    for_each_single_root_tree(n, [&](const DepTree& t) {
      CHECK(t.is_tree());
      ++count;
    });
    CHECK(count == expected);
  }
}

TEST_CASE("forest counts follow (n+1)^(n-1)") {
  for (int n = 1; n <= 4; ++n) {
    long expected = 1;
    for (int k = 1; k < n; ++k) expected *= n + 1;
    long count = 0;
    for_each_forest(n, [&](const DepTree& t) {
      CHECK(t.is_forest());
      ++count;
    });
    CHECK(count == expected);
  }
}

TEST_CASE("enumeration bound is enforced") {
  CHECK_THROWS_AS(enumerate(kMaxEnumerationLength + 1, TreeConstraint::projective),
                  BoundError);
  CHECK_THROWS_AS(enumerate(0, TreeConstraint::projective), BoundError);
}

TEST_CASE("brute-force two-plane search on the samples") {
  CHECK(brute_two_plane(fixtures::defanged()));
  CHECK(brute_two_plane(fixtures::country()));
  CHECK(brute_two_plane(DepTree({0, 4, 1, 1, 3})));
}

TEST_CASE("coverage classes nest") {
  for (int n = 1; n <= 5; ++n) {
    const auto projective = head_set(enumerate(n, TreeConstraint::projective));
    const auto covered4 = head_set(enumerate(n, TreeConstraint::covered_4bit));
    const auto covered7 = head_set(enumerate(n, TreeConstraint::covered_7bit));
    for (const auto& h : projective) CHECK(covered4.count(h) == 1);
    for (const auto& h : covered4) CHECK(covered7.count(h) == 1);
    CHECK(covered7.size() >= covered4.size());
    CHECK(covered4.size() >= projective.size());
  }
}

TEST_CASE("every projective tree is 4-bit covered, exhaustively") {
  for (int n = 1; n <= 6; ++n)
    for_each_single_root_tree(n, [](const DepTree& t) {
      if (is_projective(t)) CHECK(covered_by_4bit(t));
    });
}
