#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wed/canonical.hpp"
#include "wed/errors.hpp"
#include "wed/structures.hpp"

using namespace wed;

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % kCanonicalMaxOrder;
    const Graph g = oracle::random_graph(rng, n, 0.2 + 0.05 * (trial % 12));
    const Graph h = oracle::shuffled(g, rng);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(is_isomorphic(g, h));
  }
}

TEST_CASE("canonical labeling reproduces the canonical form") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 9, 0.4);
    const Graph relabeled = relabel(g, canonical_labeling(g));
    CHECK(serialize_graph6(relabeled) == canonical_form(g));
  }
}

TEST_CASE("regular graphs with many automorphisms") {
  // Two non-isomorphic 3-regular graphs on 8 vertices: the cube and the
  // Wagner graph.
  const Graph cube = Graph::from_edge_list(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const Graph wagner = Graph::from_edge_list(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  CHECK_FALSE(is_isomorphic(cube, wagner));
  std::mt19937 rng(9);
  CHECK(canonical_form(cube) == canonical_form(oracle::shuffled(cube, rng)));
  CHECK(canonical_form(wagner) == canonical_form(oracle::shuffled(wagner, rng)));
  // C6 versus two triangles share a degree sequence.
  const Graph c6 = make_named({NamedKind::Cycle, 6});
  const Graph twoK3 = disjoint_union(make_named({NamedKind::K3}), make_named({NamedKind::K3}));
  CHECK_FALSE(is_isomorphic(c6, twoK3));
}

TEST_CASE("isomorphism classes agree with brute force") {
  // Count classes of all labeled graphs by both methods.
  for (int n = 1; n <= 5; ++n) {
    std::set<std::string> fast;
    std::set<std::string> brute;
    std::map<std::string, std::string> fastToBrute;
    bool consistent = true;
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      const auto f = canonical_form(g);
      const auto b = oracle::brute_canonical(g);
      fast.insert(f);
      brute.insert(b);
      auto [it, fresh] = fastToBrute.emplace(f, b);
      if (!fresh && it->second != b) consistent = false;
    });
    CHECK(consistent);
    CHECK(fast.size() == brute.size());
  }
}

TEST_CASE("order cap") {
  CHECK_THROWS_AS(canonical_form(make_named({NamedKind::Path, kCanonicalMaxOrder + 1})),
                  SizeLimitError);
}
