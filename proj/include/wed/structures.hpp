// structures.hpp - named graphs, the families T and F, detachable vertices.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wed/graph.hpp"

namespace wed {

enum class NamedKind {
  K3,
  Complete,           // K_p
  Cycle,              // C_p
  Path,               // P_p, p vertices
  CompleteBipartite,  // K_{p,q}
  Fan,                // K1 joined to P_{p-1}
  House,
  DreamHouse,
  Crystal,
  C7Star,
};

struct NamedGraph {
  NamedKind kind = NamedKind::K3;
  int p = 0;
  int q = 0;
};

// Canonical labelings:
//   House      triangle {2,3,4}, apex 4 of degree 2, square 0-1-3-2.
//   DreamHouse triangle {4,5,6}.
//   Crystal    triangle {0,1,2}.
//   C7Star     C7 on 0..6 plus chord {0,3}.
//   Fan(p)     vertex 0 joined to the path 1-2-...-(p-1).
//   K_{p,q}    side {0..p-1} versus {p..p+q-1}.
Graph make_named(const NamedGraph& tag);

// "house", "dreamhouse", "crystal", "c7star", "k3", "cycle:N", "fan:N",
// "path:N", "complete:N", "kbip:R,S". Throws PreconditionError otherwise.
NamedGraph parse_named(const std::string& name);
std::string named_to_string(const NamedGraph& tag);

inline constexpr int kHouseApex = 4;
inline constexpr int kK3Identified = 2;

enum class Family { T, F };

struct FamilyWitness {
  Graph base;
  Bipartition bipartition;
  int w = 0;
  Family family = Family::T;
};

// Preconditions on (base, bip, w) are checked and reported with
// PreconditionError: base connected with an edge, bip a valid bipartition
// with |A| < |B|, base WED, w in B. Only the w-specific test returns false.
bool is_detachable(const Graph& base, const Bipartition& bip, int w);
bool is_strongly_detachable(const Graph& base, const Bipartition& bip, int w);

// K3 glued at one vertex to w; K3's free vertices are labels 0 and 1.
Graph build_family_T(const Graph& base, const Bipartition& bip, int w);
// House glued at its degree-2 apex to w; house labels 0..4 are kept.
Graph build_family_F(const Graph& base, const Bipartition& bip, int w);
Graph rebuild(const FamilyWitness& witness);

struct BipartiteBase {
  Graph graph;
  Bipartition bipartition;
  VertexMask detachable = 0;
  VertexMask stronglyDetachable = 0;
};

// Connected bipartite WED graphs with |A| < |B| and at least one edge, orders
// 2..nMax from the native corpus (nMax <= 8), each B-vertex annotated.
std::vector<BipartiteBase> find_bipartite_wed_bases(int nMax);
// Same scan over caller-supplied graphs.
std::vector<BipartiteBase> find_bipartite_wed_bases(const std::vector<Graph>& corpus);

}  // namespace wed
