// graph.hpp - immutable simple undirected graph on at most 62 vertices.
//
// Adjacency is one 64-bit mask per vertex; edges are kept as a sorted list of
// (u, v) pairs with u < v, so edge indices are deterministic for equal inputs.
#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace wed {

using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 62;

inline constexpr VertexMask bit(int v) { return VertexMask{1} << v; }
inline constexpr VertexMask full_mask(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}
inline int popcount(VertexMask m) { return std::popcount(m); }
inline int lowest(VertexMask m) { return std::countr_zero(m); }

std::vector<int> mask_to_vertices(VertexMask m);

struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

class Graph {
 public:
  Graph();

  // Throws PreconditionError on out-of-range index, self-loop or duplicate.
  static Graph from_edge_list(int n, std::span<const std::pair<int, int>> pairs);
  static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs);
  // Masks must be symmetric and loop-free.
  static Graph from_adjacency(std::vector<VertexMask> adj);

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }
  VertexMask vertices() const { return full_mask(n_); }
  VertexMask neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return popcount(adj_[v]); }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1U; }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }
  // -1 when {u, v} is not an edge.
  int edge_index(int u, int v) const;

  // Identity token shared by copies; distinguishes graphs for EdgeSet ownership.
  std::uint64_t id() const { return id_; }

  std::vector<int> degree_sequence() const;  // non-increasing

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.adj_ == b.adj_;
  }

 private:
  int n_ = 0;
  std::vector<VertexMask> adj_;
  std::vector<Edge> edges_;
  std::vector<int> edge_index_;  // n*n lookup
  std::uint64_t id_ = 0;

  void build_edges();
};

// ---- text formats ----------------------------------------------------------

Graph parse_graph6(std::string_view text);
std::string serialize_graph6(const Graph& g);

// "n m" followed by m lines "u v".
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

// ---- structure queries -----------------------------------------------------

struct Bipartition {
  VertexMask sideA = 0;
  VertexMask sideB = 0;
  int size_a() const { return popcount(sideA); }
  int size_b() const { return popcount(sideB); }
  bool contains_a(int v) const { return (sideA >> v) & 1U; }
  bool contains_b(int v) const { return (sideB >> v) & 1U; }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
};

bool is_valid_bipartition(const Graph& g, const Bipartition& bip);

bool is_connected(const Graph& g);
std::vector<VertexMask> connected_components(const Graph& g);
// Component of g containing v.
VertexMask component_of(const Graph& g, int v, VertexMask within);

// Each component's smaller side goes to A (ties: the side holding the
// component's smallest vertex), so |A| <= |B| always holds.
std::optional<Bipartition> bipartition(const Graph& g);

// nullopt means infinite girth (forest).
std::optional<int> girth(const Graph& g);
std::vector<std::array<int, 3>> triangles(const Graph& g);

VertexMask cut_vertices(const Graph& g);
bool is_biconnected(const Graph& g);

VertexMask leaves(const Graph& g);
VertexMask support_vertices(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> new_index;  // old -> new, -1 for deleted
  std::vector<int> old_index;  // new -> old
};

InducedSubgraph induced_delete(const Graph& g, VertexMask removed);

// Disjoint union of g1 and g2 with v2 merged into v1. Vertices of g1 keep
// their labels; g2's remaining vertices follow in order.
struct Identification {
  Graph graph;
  std::vector<int> from_second;  // g2 vertex -> merged label
};
Identification identify_vertices_mapped(const Graph& g1, int v1, const Graph& g2, int v2);
Graph identify_vertices(const Graph& g1, int v1, const Graph& g2, int v2);

Graph disjoint_union(const Graph& g1, const Graph& g2);

}  // namespace wed
