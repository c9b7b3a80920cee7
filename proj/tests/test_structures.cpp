#include <doctest.h>

#include <set>

#include "oracles.hpp"
#include "wed/canonical.hpp"
#include "wed/corpus.hpp"
#include "wed/domination.hpp"
#include "wed/errors.hpp"
#include "wed/structures.hpp"

using namespace wed;

TEST_CASE("named graphs have the expected shape") {
  const Graph house = make_named({NamedKind::House});
  CHECK(house.order() == 5);
  CHECK(house.size() == 6);
  CHECK(triangles(house).size() == 1);
  CHECK(house.degree(kHouseApex) == 2);
  CHECK(triangles(house).front() == std::array<int, 3>{2, 3, 4});

  const Graph crystal = make_named({NamedKind::Crystal});
  CHECK(crystal.order() == 7);
  CHECK(crystal.degree_sequence() == std::vector<int>{3, 3, 3, 3, 3, 3, 2});
  CHECK(triangles(crystal).size() == 1);

  const Graph dream = make_named({NamedKind::DreamHouse});
  CHECK(triangles(dream).size() == 1);
  CHECK(is_connected(dream));

  const Graph c7star = make_named({NamedKind::C7Star});
  CHECK(c7star.size() == 8);
  CHECK(girth(c7star) == 4);

  const Graph fan = make_named({NamedKind::Fan, 5});
  CHECK(fan.degree(0) == 4);
  CHECK(fan.size() == 7);

  const Graph kbip = make_named({NamedKind::CompleteBipartite, 2, 3});
  CHECK(kbip.size() == 6);
}

TEST_CASE("name parsing") {
  CHECK(named_to_string(parse_named("house")) == "H");
  CHECK(named_to_string(parse_named("dreamhouse")) == "DH");
  CHECK(named_to_string(parse_named("crystal")) == "Cr");
  CHECK(named_to_string(parse_named("c7star")) == "C7*");
  CHECK(named_to_string(parse_named("cycle:6")) == "C6");
  CHECK(named_to_string(parse_named("fan:5")) == "F5");
  CHECK(named_to_string(parse_named("kbip:2,4")) == "K2,4");
  CHECK_THROWS_AS(parse_named("petersen"), PreconditionError);
  CHECK_THROWS_AS(parse_named("cycle:x"), PreconditionError);
  CHECK_THROWS_AS(make_named(parse_named("cycle:2")), PreconditionError);
}

TEST_CASE("detachability on a path") {
  const Graph p3 = make_named({NamedKind::Path, 3});
  const auto bip = *bipartition(p3);
  CHECK(is_detachable(p3, bip, 0));
  CHECK(is_strongly_detachable(p3, bip, 0));
  // Precondition violations are errors, not false.
  CHECK_THROWS_AS(is_detachable(p3, bip, 1), PreconditionError);
  const Graph p4 = make_named({NamedKind::Path, 4});
  CHECK_THROWS_AS(is_detachable(p4, *bipartition(p4), 0), PreconditionError);
  const Graph k24 = make_named({NamedKind::CompleteBipartite, 2, 4});
  CHECK_THROWS_AS(is_detachable(k24, *bipartition(k24), 2), PreconditionError);
}

TEST_CASE("family members built on a path") {
  const Graph p3 = make_named({NamedKind::Path, 3});
  const auto bip = *bipartition(p3);
  const Graph t = build_family_T(p3, bip, 0);
  CHECK(t.order() == 5);
  CHECK(triangles(t).size() == 1);
  CHECK(oracle::wed(t));
  CHECK(oracle::gamma_e(t) == bip.size_a() + 1);
  const Graph f = build_family_F(p3, bip, 0);
  CHECK(f.order() == 7);
  CHECK(triangles(f).size() == 1);
  CHECK(oracle::wed(f));
  CHECK(oracle::gamma_e(f) == bip.size_a() + 2);
  CHECK(is_isomorphic(rebuild({p3, bip, 0, Family::T}), t));
  CHECK(is_isomorphic(rebuild({p3, bip, 0, Family::F}), f));
}

TEST_CASE("bipartite WED bases and their detachable vertices") {
  const auto bases = find_bipartite_wed_bases(6);
  CHECK_FALSE(bases.empty());
  for (const auto& b : bases) {
    CHECK(oracle::wed(b.graph));
    CHECK(b.bipartition.size_a() < b.bipartition.size_b());
    CHECK((b.stronglyDetachable & ~b.detachable) == 0);
    for (int w = 0; w < b.graph.order(); ++w) {
      if (!b.bipartition.contains_b(w)) continue;
      const bool expected = oracle::wed(induced_delete(b.graph, bit(w)).graph);
      CHECK(((b.detachable & bit(w)) != 0) == expected);
    }
  }
  CHECK_THROWS_AS(find_bipartite_wed_bases(kNativeMaxOrder + 1), SizeLimitError);
}

TEST_CASE("house construction at a leaf can break well-edge-domination") {
  // Base: vertex 5 joined to 0..3, vertex 4 joined to 2 and 3. Vertex 0 is
  // strongly detachable, yet the glued graph has minimal edge dominating sets
  // of sizes 4 and 5.
  const Graph base = parse_graph6("E?No");
  const auto bip = *bipartition(base);
  REQUIRE(bip.size_a() == 2);
  REQUIRE(is_strongly_detachable(base, bip, 0));
  const Graph g = build_family_F(base, bip, 0);
  const auto scan = oracle::scan_subsets(g);
  CHECK(scan.minimalEdsSizes == std::set<int>{4, 5});
  CHECK_FALSE(is_well_edge_dominated(g));
}
