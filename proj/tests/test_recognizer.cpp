#include <doctest.h>

#include "oracles.hpp"
#include "wed/canonical.hpp"
#include "wed/corpus.hpp"
#include "wed/errors.hpp"
#include "wed/recognizer.hpp"
#include "wed/structures.hpp"

using namespace wed;

TEST_CASE("special graphs") {
  CHECK(classify_one_triangle(make_named({NamedKind::K3})).verdict == Verdict::SpecialK3);
  CHECK(classify_one_triangle(make_named({NamedKind::House})).verdict == Verdict::SpecialHouse);
  CHECK(classify_one_triangle(make_named({NamedKind::DreamHouse})).verdict ==
        Verdict::SpecialDreamHouse);
  CHECK(classify_one_triangle(make_named({NamedKind::Crystal})).verdict ==
        Verdict::SpecialCrystal);
}

TEST_CASE("triangle with a pendant path of length four") {
  // The triangle is {4, 6, 7}; the base is the tree on 0..5.
  const Graph g = Graph::from_edge_list(
      8, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {6, 7}, {7, 4}, {6, 4}});
  const auto c = classify_one_triangle(g);
  CHECK(c.verdict == Verdict::MemberT);
  CHECK(c.triangle == std::array<int, 3>{4, 6, 7});
  REQUIRE(c.witness);
  CHECK(c.witness->family == Family::T);
  CHECK(c.witness->base.order() == 6);
  CHECK(c.witness->bipartition.size_a() == 2);
  CHECK(oracle::wed(g));
}

TEST_CASE("triangle with leaves only") {
  const Graph paw = Graph::from_edge_list(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  const auto c = classify_one_triangle(paw);
  CHECK(c.verdict == Verdict::NotWED);
  CHECK(c.reason == "triangle with appended leaves");
  CHECK_FALSE(oracle::wed(paw));
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(classify_one_triangle(make_named({NamedKind::Cycle, 5})), PreconditionError);
  CHECK_THROWS_AS(classify_one_triangle(make_named({NamedKind::Complete, 4})), PreconditionError);
  const Graph split = disjoint_union(make_named({NamedKind::K3}), make_named({NamedKind::Path, 2}));
  CHECK_THROWS_AS(classify_one_triangle(split), PreconditionError);
  CHECK_THROWS_AS(recognize_girth5(make_named({NamedKind::Cycle, 4})), PreconditionError);
  CHECK_THROWS_AS(recognize_girth4_nonbipartite(make_named({NamedKind::Cycle, 6})),
                  PreconditionError);
}

TEST_CASE("one-triangle recognizer agrees with the oracle up to 7 vertices") {
  for (int n = 3; n <= 7; ++n) {
    CorpusSpec spec{.n = n, .filters = {Filter::Connected, Filter::ExactlyOneTriangle}};
    for (const Graph& g : enumerate_graphs(spec)) {
      const auto c = classify_one_triangle(g);
      CHECK_MESSAGE(c.is_wed() == oracle::wed(g), serialize_graph6(g));
      if (c.witness) CHECK(is_isomorphic(rebuild(*c.witness), g));
    }
  }
}

TEST_CASE("girth-5 recognizer agrees with the oracle up to 8 vertices") {
  int checked = 0;
  for (int n = 2; n <= 8; ++n) {
    CorpusSpec spec{.n = n, .filters = {Filter::Connected}, .minGirth = 5};
    for (const Graph& g : enumerate_graphs(spec)) {
      CHECK_MESSAGE(recognize_girth5(g) == oracle::wed(g), serialize_graph6(g));
      ++checked;
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("triangle-free non-bipartite recognizer agrees with the oracle up to 8 vertices") {
  int wedCount = 0;
  for (int n = 5; n <= 8; ++n) {
    CorpusSpec spec{.n = n, .filters = {Filter::Connected, Filter::TriangleFree, Filter::NonBipartite}};
    for (const Graph& g : enumerate_graphs(spec)) {
      const bool expected = oracle::wed(g);
      CHECK_MESSAGE(recognize_girth4_nonbipartite(g) == expected, serialize_graph6(g));
      wedCount += expected;
    }
  }
  CHECK(wedCount == 3);  // C5, C7, C7*
}
