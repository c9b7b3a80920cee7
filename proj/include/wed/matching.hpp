// matching.hpp - exact matching oracles for small graphs.
#pragma once

#include <functional>
#include <vector>

#include "wed/edge_set.hpp"
#include "wed/graph.hpp"

namespace wed {

inline constexpr int kMatchingMaxOrder = 14;

// F together with every edge sharing a vertex with a member of F.
EdgeSet closed_edge_neighborhood(const Graph& g, const EdgeSet& f);

bool is_matching(const Graph& g, const EdgeSet& f);
// Matching with no edge of g left between two unsaturated vertices.
bool is_maximal_matching(const Graph& g, const EdgeSet& f);

// G - N_e[M]: same vertex set, every edge touching a saturated vertex removed.
// Saturated vertices stay behind as isolated vertices.
Graph remove_edge_neighborhood(const Graph& g, const EdgeSet& matching);

struct MaximalMatchingSizes {
  std::vector<int> sizes;          // ascending
  std::vector<EdgeSet> witnesses;  // witnesses[i] has size sizes[i]
  bool exhausted = true;           // false if the early exit fired
};

// Branches on the lexicographically first free edge uv: every maximal
// matching extending the current one covers u or v. States are deduplicated
// by saturated-vertex set.
MaximalMatchingSizes enumerate_maximal_matchings(const Graph& g, bool earlyExitOnTwoSizes = false);

// Distinct vertex sets saturated by maximal matchings of g.
std::vector<VertexMask> maximal_matching_covers(const Graph& g);

// alpha'(G), by memoized search over remaining-vertex sets.
int matching_number(const Graph& g);

// Calls visit on every matching of g, the empty one included.
void for_each_matching(const Graph& g, const std::function<void(const EdgeSet&)>& visit);

bool is_equimatchable(const Graph& g);
// Equimatchable with a perfect matching.
bool is_randomly_matchable(const Graph& g);

}  // namespace wed
