#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wed/errors.hpp"
#include "wed/graph.hpp"
#include "wed/structures.hpp"

using namespace wed;

TEST_CASE("graph6 known strings") {
  CHECK(serialize_graph6(Graph::from_edge_list(3, {{0, 1}, {0, 2}, {1, 2}})) == "Bw");
  CHECK(serialize_graph6(Graph::from_edge_list(2, {{0, 1}})) == "A_");
  CHECK(serialize_graph6(Graph::from_edge_list(3, {{0, 1}, {1, 2}})) == "Bg");
  CHECK(serialize_graph6(Graph::from_edge_list(1, {})) == "@");
  CHECK(serialize_graph6(Graph::from_edge_list(0, {})) == "?");
  const Graph k3 = parse_graph6("Bw");
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);
}

TEST_CASE("graph6 round trip on random graphs") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 20;
    const Graph g = oracle::random_graph(rng, n, 0.4);
    const Graph back = parse_graph6(serialize_graph6(g));
    CHECK(back == g);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(parse_graph6(""), FormatError);
  CHECK_THROWS_AS(parse_graph6("B"), FormatError);     // truncated
  CHECK_THROWS_AS(parse_graph6("Bww"), FormatError);   // trailing byte
  CHECK_THROWS_AS(parse_graph6("B\x01"), FormatError); // byte out of range
  CHECK_THROWS_AS(parse_graph6("~?@A"), FormatError);  // order beyond the cap
}

TEST_CASE("edge list format") {
  const Graph g = parse_edge_list("4 3\n0 1\n1 2\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 3);
  CHECK(parse_edge_list(serialize_edge_list(g)) == g);
  CHECK_THROWS_AS(parse_edge_list("3 2\n0 1\n"), FormatError);
  CHECK_THROWS_AS(parse_edge_list("3 1\n0 3\n"), FormatError);
}

TEST_CASE("construction preconditions") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), PreconditionError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 5}}), PreconditionError);
  CHECK_THROWS(Graph::from_edge_list(kMaxOrder + 1, {}));
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {1, 0}}), PreconditionError);
}

TEST_CASE("edges are sorted and indexable") {
  const Graph g = Graph::from_edge_list(4, {{2, 3}, {1, 0}, {0, 2}});
  REQUIRE(g.size() == 3);
  CHECK(g.edge(0) == Edge{0, 1});
  CHECK(g.edge(1) == Edge{0, 2});
  CHECK(g.edge(2) == Edge{2, 3});
  CHECK(g.edge_index(3, 2) == 2);
  CHECK(g.edge_index(1, 3) == -1);
}

TEST_CASE("bipartition normalization") {
  // Star K_{1,3} centered at 3: A is the center.
  const Graph star = Graph::from_edge_list(4, {{3, 0}, {3, 1}, {3, 2}});
  const auto bip = bipartition(star);
  REQUIRE(bip);
  CHECK(bip->sideA == bit(3));
  CHECK(is_valid_bipartition(star, *bip));
  // Balanced: the side holding vertex 0 is A.
  const auto c4 = bipartition(make_named({NamedKind::Cycle, 4}));
  REQUIRE(c4);
  CHECK(c4->contains_a(0));
  CHECK_FALSE(bipartition(make_named({NamedKind::Cycle, 5})));
}

TEST_CASE("girth and triangles") {
  CHECK(girth(make_named({NamedKind::Cycle, 5})) == 5);
  CHECK(girth(make_named({NamedKind::Complete, 4})) == 3);
  CHECK_FALSE(girth(make_named({NamedKind::Path, 6})).has_value());
  const Graph petersen = Graph::from_edge_list(
      10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  CHECK(girth(petersen) == 5);
  CHECK(triangles(make_named({NamedKind::Complete, 4})).size() == 4);

  std::mt19937 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(rng, 7, 0.45);
    std::size_t brute = 0;
    for (int a = 0; a < 7; ++a)
      for (int b = a + 1; b < 7; ++b)
        for (int c = b + 1; c < 7; ++c)
          if (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c)) ++brute;
    CHECK(triangles(g).size() == brute);
    CHECK((brute > 0) == (girth(g) == 3));
  }
}

TEST_CASE("cut vertices and biconnectivity") {
  const Graph bowtie = Graph::from_edge_list(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  CHECK(cut_vertices(bowtie) == bit(2));
  CHECK_FALSE(is_biconnected(bowtie));
  CHECK(is_biconnected(make_named({NamedKind::Cycle, 6})));
  CHECK_FALSE(is_biconnected(Graph::from_edge_list(2, {{0, 1}})));
  CHECK(cut_vertices(make_named({NamedKind::Path, 4})) == (bit(1) | bit(2)));
}

TEST_CASE("leaves and support vertices") {
  const Graph p4 = make_named({NamedKind::Path, 4});
  CHECK(leaves(p4) == (bit(0) | bit(3)));
  CHECK(support_vertices(p4) == (bit(1) | bit(2)));
}

TEST_CASE("induced deletion keeps order of survivors") {
  const Graph c5 = make_named({NamedKind::Cycle, 5});
  const auto sub = induced_delete(c5, bit(2));
  CHECK(sub.graph.order() == 4);
  CHECK(sub.graph.size() == 3);
  CHECK(sub.new_index[2] == -1);
  CHECK(sub.old_index == std::vector<int>{0, 1, 3, 4});
}

TEST_CASE("vertex identification") {
  const Graph k3 = make_named({NamedKind::K3});
  const Graph p3 = make_named({NamedKind::Path, 3});
  const auto id = identify_vertices_mapped(k3, 2, p3, 0);
  CHECK(id.graph.order() == 5);
  CHECK(id.graph.size() == 5);
  CHECK(id.from_second[0] == 2);
  CHECK(id.graph.adjacent(2, id.from_second[1]));
  const Graph two = disjoint_union(k3, p3);
  CHECK(two.order() == 6);
  CHECK(connected_components(two).size() == 2);
}
