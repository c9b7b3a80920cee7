// canonical.hpp - canonical labeling for desk-scale graphs (n <= 12).
#pragma once

#include <string>
#include <vector>

#include "wed/graph.hpp"

namespace wed {

inline constexpr int kCanonicalMaxOrder = 12;

// Lexicographically smallest graph6 string among the labelings reached by
// equitable refinement + individualization. Two graphs get the same string
// iff they are isomorphic.
std::string canonical_form(const Graph& g);

// labeling[v] = canonical position of vertex v.
std::vector<int> canonical_labeling(const Graph& g);

Graph relabel(const Graph& g, const std::vector<int>& labeling);

bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace wed
