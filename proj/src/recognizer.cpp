#include "wed/recognizer.hpp"

#include "wed/canonical.hpp"
#include "wed/domination.hpp"
#include "wed/errors.hpp"

namespace wed {

namespace {

bool is_cycle_of_order(const Graph& g, int n) {
  if (g.order() != n || g.size() != n || !is_connected(g)) return false;
  for (int v = 0; v < n; ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

// G' = g - removed must be a connected bipartite WED graph with |A| < |B|,
// z on the large side, and z detachable (strongly, for F).
std::optional<FamilyWitness> try_base(const Graph& g, VertexMask removed, int z, Family family) {
  const InducedSubgraph sub = induced_delete(g, removed);
  const Graph& base = sub.graph;
  const int w = sub.new_index[z];
  if (base.size() == 0 || !is_connected(base)) return std::nullopt;
  const auto bip = bipartition(base);
  if (!bip || bip->size_a() >= bip->size_b() || !bip->contains_b(w)) return std::nullopt;
  if (!is_well_edge_dominated(base)) return std::nullopt;
  const InducedSubgraph rest = induced_delete(base, bit(w));
  if (!is_well_edge_dominated(rest.graph)) return std::nullopt;
  if (family == Family::F) {
    const VertexMask support = support_vertices(rest.graph);
    for (VertexMask m = base.neighbors(w); m; m &= m - 1) {
      if (!(support & bit(rest.new_index[lowest(m)]))) return std::nullopt;
    }
  }
  return FamilyWitness{base, *bip, w, family};
}

// The neighbor of v outside the triangle, when v has exactly one.
int outside_neighbor(const Graph& g, int v, VertexMask triangle) {
  const VertexMask out = g.neighbors(v) & ~triangle;
  return popcount(out) == 1 ? lowest(out) : -1;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::SpecialK3: return "K3";
    case Verdict::SpecialHouse: return "house";
    case Verdict::SpecialDreamHouse: return "dream-house";
    case Verdict::SpecialCrystal: return "crystal";
    case Verdict::MemberT: return "member-T";
    case Verdict::MemberF: return "member-F";
    case Verdict::NotWED: return "not-wed";
  }
  return "?";
}

Classification classify_one_triangle(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("classify_one_triangle: graph is disconnected");
  const auto tris = triangles(g);
  if (tris.size() != 1) {
    throw PreconditionError("classify_one_triangle: graph has " + std::to_string(tris.size()) +
                            " triangles");
  }
  Classification c;
  c.triangle = tris.front();
  const VertexMask tri = bit(c.triangle[0]) | bit(c.triangle[1]) | bit(c.triangle[2]);

  if (g.order() == 3) {
    c.verdict = Verdict::SpecialK3;
    return c;
  }
  if (g.order() == 5 && is_isomorphic(g, make_named({NamedKind::House}))) {
    c.verdict = Verdict::SpecialHouse;
    return c;
  }
  if (g.order() == 7) {
    if (is_isomorphic(g, make_named({NamedKind::DreamHouse}))) {
      c.verdict = Verdict::SpecialDreamHouse;
      return c;
    }
    if (is_isomorphic(g, make_named({NamedKind::Crystal}))) {
      c.verdict = Verdict::SpecialCrystal;
      return c;
    }
  }

  // Triangle with only pendant leaves around it.
  const VertexMask rest = g.vertices() & ~tri;
  bool pendantOnly = true;
  for (VertexMask m = rest; m; m &= m - 1) {
    const int v = lowest(m);
    if (g.degree(v) != 1 || !(g.neighbors(v) & tri)) pendantOnly = false;
  }
  if (pendantOnly) {
    c.reason = "triangle with appended leaves";
    return c;
  }

  std::vector<int> degreeTwo;
  for (int v : c.triangle) {
    if (g.degree(v) == 2) degreeTwo.push_back(v);
  }
  if (degreeTwo.size() == 2) {
    int z = c.triangle[0];
    for (int v : c.triangle) {
      if (v != degreeTwo[0] && v != degreeTwo[1]) z = v;
    }
    if (auto w = try_base(g, bit(degreeTwo[0]) | bit(degreeTwo[1]), z, Family::T)) {
      c.verdict = Verdict::MemberT;
      c.witness = std::move(w);
      return c;
    }
  }

  for (int k = 0; k < 3; ++k) {
    const int z = c.triangle[k];
    const int x = c.triangle[(k + 1) % 3];
    const int y = c.triangle[(k + 2) % 3];
    if (g.degree(x) != 3 || g.degree(y) != 3) continue;
    const int t = outside_neighbor(g, x, tri);
    const int s = outside_neighbor(g, y, tri);
    if (t < 0 || s < 0 || t == s) continue;
    if (g.degree(s) != 2 || g.degree(t) != 2 || !g.adjacent(s, t)) continue;
    if (auto w = try_base(g, bit(x) | bit(y) | bit(s) | bit(t), z, Family::F)) {
      c.verdict = Verdict::MemberF;
      c.witness = std::move(w);
      return c;
    }
  }

  c.reason = "no T- or F-decomposition";
  return c;
}

bool recognize_girth5(const Graph& g) {
  if (!is_connected(g)) throw PreconditionError("recognize_girth5: graph is disconnected");
  const auto gi = girth(g);
  if (gi && *gi < 5) throw PreconditionError("recognize_girth5: girth below 5");
  if (g.order() == 2 && g.size() == 1) return true;
  if (is_cycle_of_order(g, 5) || is_cycle_of_order(g, 7)) return true;
  const auto bip = bipartition(g);
  if (!bip) return false;
  const VertexMask support = support_vertices(g);
  return support == bip->sideA || support == bip->sideB;
}

bool recognize_girth4_nonbipartite(const Graph& g) {
  if (!is_connected(g)) {
    throw PreconditionError("recognize_girth4_nonbipartite: graph is disconnected");
  }
  if (!triangles(g).empty()) {
    throw PreconditionError("recognize_girth4_nonbipartite: graph has a triangle");
  }
  if (bipartition(g)) throw PreconditionError("recognize_girth4_nonbipartite: graph is bipartite");
  if (is_cycle_of_order(g, 5) || is_cycle_of_order(g, 7)) return true;
  return g.order() == 7 && is_isomorphic(g, make_named({NamedKind::C7Star}));
}

}  // namespace wed
