// outerplanar.hpp - outerplanarity via the two forbidden minors K4 and K_{2,3}.
#pragma once

#include "wed/graph.hpp"

namespace wed {

inline constexpr int kOuterplanarMaxOrder = 12;

// Both patterns have maximum degree 3, so minor containment coincides with
// containing a subdivision; each test is exact.

// Repeatedly deletes vertices of degree <= 1 and suppresses degree-2 vertices;
// a K4 minor exists iff something survives.
bool has_k4_minor(const Graph& g);

// Some pair a, b joined by three internally disjoint paths, none the edge ab.
bool has_k23_minor(const Graph& g);

bool is_outerplanar(const Graph& g);

}  // namespace wed
