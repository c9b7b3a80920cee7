// domination.hpp - edge dominating sets and the well-edge-dominated property.
#pragma once

#include "wed/edge_set.hpp"
#include "wed/graph.hpp"

namespace wed {

inline constexpr int kDominationMaxOrder = 12;

bool is_edge_dominating(const Graph& g, const EdgeSet& f);

// Edges of N_e[member] not dominated by F - {member}.
EdgeSet private_edge_neighbors(const Graph& g, const EdgeSet& f, int member);

// Dominating, and every member keeps a private edge neighbor.
bool is_minimal_eds(const Graph& g, const EdgeSet& f);

struct EdsSummary {
  int minSize = 0;
  int maxSize = 0;
  EdgeSet witnessMin;
  EdgeSet witnessMax;
  bool exhausted = true;  // false if the early exit fired
};

// Size range over all inclusion-minimal edge dominating sets.
//
// Depth-first: pick the undominated edge with the fewest remaining
// candidates, branch on each candidate in its closed edge neighborhood, and
// exclude earlier siblings from later branches so no set is produced twice.
// A branch dies as soon as some chosen edge has lost every private neighbor.
EdsSummary enumerate_minimal_eds(const Graph& g, bool earlyExitOnTwoSizes = false);

// gamma_e(G).
int edge_domination_number(const Graph& g);

// All minimal edge dominating sets share one size. Graphs that are not
// equimatchable are rejected without enumerating edge dominating sets.
bool is_well_edge_dominated(const Graph& g);

}  // namespace wed
