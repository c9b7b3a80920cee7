#include "wed/graph.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <sstream>

#include "wed/errors.hpp"

namespace wed {

namespace {

std::uint64_t next_graph_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

}  // namespace

std::vector<int> mask_to_vertices(VertexMask m) {
  std::vector<int> out;
  out.reserve(popcount(m));
  for (; m; m &= m - 1) out.push_back(lowest(m));
  return out;
}

Graph::Graph() : id_(next_graph_id()) {}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> pairs) {
  return from_edge_list(n, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
}

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> pairs) {
  if (n < 0 || n > kMaxOrder) {
    throw PreconditionError("vertex count " + std::to_string(n) + " outside 0.." +
                            std::to_string(kMaxOrder));
  }
  std::vector<VertexMask> adj(n, 0);
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw PreconditionError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ") has an index out of range");
    }
    if (a == b) throw PreconditionError("self-loop at vertex " + std::to_string(a));
    if (adj[a] & bit(b)) {
      throw PreconditionError("duplicate edge (" + std::to_string(a) + "," + std::to_string(b) +
                              ")");
    }
    adj[a] |= bit(b);
    adj[b] |= bit(a);
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(adj);
  g.build_edges();
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexMask> adj) {
  const int n = static_cast<int>(adj.size());
  if (n > kMaxOrder) throw PreconditionError("vertex count exceeds 62");
  for (int v = 0; v < n; ++v) {
    if (adj[v] & bit(v)) throw PreconditionError("self-loop at vertex " + std::to_string(v));
    if (adj[v] & ~full_mask(n)) throw PreconditionError("neighbor index out of range");
    for (VertexMask m = adj[v]; m; m &= m - 1) {
      if (!(adj[lowest(m)] & bit(v))) throw PreconditionError("adjacency is not symmetric");
    }
  }
  Graph g;
  g.n_ = n;
  g.adj_ = std::move(adj);
  g.build_edges();
  return g;
}

void Graph::build_edges() {
  edges_.clear();
  edge_index_.assign(static_cast<std::size_t>(n_) * n_, -1);
  for (int u = 0; u < n_; ++u) {
    for (VertexMask m = adj_[u] & ~full_mask(u + 1); m; m &= m - 1) {
      const int v = lowest(m);
      const int idx = static_cast<int>(edges_.size());
      edges_.push_back({u, v});
      edge_index_[u * n_ + v] = idx;
      edge_index_[v * n_ + u] = idx;
    }
  }
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  return edge_index_[u * n_ + v];
}

std::vector<int> Graph::degree_sequence() const {
  std::vector<int> d(n_);
  for (int v = 0; v < n_; ++v) d[v] = degree(v);
  std::sort(d.begin(), d.end(), std::greater<>());
  return d;
}

// ---- graph6 -----------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) throw FormatError("graph6: empty input");
  for (char c : text) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw FormatError("graph6: malformed byte " + std::to_string(static_cast<int>(b)));
    }
  }
  const int n = static_cast<unsigned char>(text[0]) - 63;
  if (n > kMaxOrder) throw FormatError("graph6: order above 62 is not supported");
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - 1 < bytes) throw FormatError("graph6: truncated bit vector");
  if (text.size() - 1 > bytes) throw FormatError("graph6: trailing bytes after bit vector");

  std::vector<VertexMask> adj(n, 0);
  std::size_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[1 + k / 6]) - 63;
      if ((byte >> (5 - k % 6)) & 1) {
        adj[i] |= bit(j);
        adj[j] |= bit(i);
      }
    }
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string serialize_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  out.push_back(static_cast<char>(n + 63));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// ---- edge list ----------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long n = 0;
  long long m = 0;
  if (!(in >> n >> m)) throw FormatError("edge list: expected header \"n m\"");
  if (n < 0 || n > kMaxOrder) throw FormatError("edge list: order outside 0..62");
  if (m < 0) throw FormatError("edge list: negative edge count");
  std::vector<std::pair<int, int>> pairs;
  for (long long i = 0; i < m; ++i) {
    long long u = 0;
    long long v = 0;
    if (!(in >> u >> v)) throw FormatError("edge list: expected " + std::to_string(m) + " edges");
    if (u < 0 || v < 0 || u >= n || v >= n) throw FormatError("edge list: index out of range");
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string rest;
  if (in >> rest) throw FormatError("edge list: trailing content");
  try {
    return Graph::from_edge_list(static_cast<int>(n), pairs);
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("edge list: ") + e.what());
  }
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

// ---- structure ----------------------------------------------------------------

bool is_valid_bipartition(const Graph& g, const Bipartition& bip) {
  if ((bip.sideA | bip.sideB) != g.vertices() || (bip.sideA & bip.sideB)) return false;
  for (const Edge& e : g.edges()) {
    const bool ua = bip.contains_a(e.u);
    const bool va = bip.contains_a(e.v);
    if (ua == va) return false;
  }
  return true;
}

VertexMask component_of(const Graph& g, int v, VertexMask within) {
  VertexMask seen = bit(v);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(lowest(m));
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

std::vector<VertexMask> connected_components(const Graph& g) {
  std::vector<VertexMask> out;
  VertexMask left = g.vertices();
  while (left) {
    const VertexMask c = component_of(g, lowest(left), left);
    out.push_back(c);
    left &= ~c;
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  return component_of(g, 0, g.vertices()) == g.vertices();
}

std::optional<Bipartition> bipartition(const Graph& g) {
  Bipartition bip;
  for (VertexMask comp : connected_components(g)) {
    const int root = lowest(comp);
    VertexMask sideRoot = bit(root);
    VertexMask sideOther = 0;
    VertexMask frontier = sideRoot;
    bool rootLayer = true;
    VertexMask seen = sideRoot;
    while (frontier) {
      VertexMask next = 0;
      for (VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(lowest(m));
      const VertexMask sameSide = rootLayer ? sideRoot : sideOther;
      if (next & sameSide) return std::nullopt;
      next &= ~seen;
      seen |= next;
      (rootLayer ? sideOther : sideRoot) |= next;
      rootLayer = !rootLayer;
      frontier = next;
    }
    // A seen vertex reached again from the wrong layer is an odd cycle.
    for (VertexMask m = comp; m; m &= m - 1) {
      const int v = lowest(m);
      const VertexMask own = (sideRoot & bit(v)) ? sideRoot : sideOther;
      if (g.neighbors(v) & own) return std::nullopt;
    }
    if (popcount(sideRoot) <= popcount(sideOther)) {
      bip.sideA |= sideRoot;
      bip.sideB |= sideOther;
    } else {
      bip.sideA |= sideOther;
      bip.sideB |= sideRoot;
    }
  }
  return bip;
}

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = -1;
  std::vector<int> dist(n);
  std::vector<int> parent(n);
  std::vector<int> queue(n);
  for (int root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[root] = 0;
    parent[root] = -1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      const int u = queue[head++];
      for (VertexMask m = g.neighbors(u); m; m &= m - 1) {
        const int v = lowest(m);
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue[tail++] = v;
        } else if (parent[u] != v) {
          const int len = dist[u] + dist[v] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

std::vector<std::array<int, 3>> triangles(const Graph& g) {
  std::vector<std::array<int, 3>> out;
  for (const Edge& e : g.edges()) {
    VertexMask common = g.neighbors(e.u) & g.neighbors(e.v) & ~full_mask(e.v + 1);
    for (; common; common &= common - 1) out.push_back({e.u, e.v, lowest(common)});
  }
  return out;
}

VertexMask cut_vertices(const Graph& g) {
  const std::size_t base = connected_components(g).size();
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v) {
    VertexMask left = g.vertices() & ~bit(v);
    std::size_t count = 0;
    while (left) {
      left &= ~component_of(g, lowest(left), left);
      ++count;
    }
    if (count > base) out |= bit(v);
  }
  return out;
}

bool is_biconnected(const Graph& g) {
  return g.order() >= 3 && is_connected(g) && cut_vertices(g) == 0;
}

VertexMask leaves(const Graph& g) {
  VertexMask out = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 1) out |= bit(v);
  }
  return out;
}

VertexMask support_vertices(const Graph& g) {
  VertexMask out = 0;
  for (VertexMask m = leaves(g); m; m &= m - 1) out |= g.neighbors(lowest(m));
  return out;
}

InducedSubgraph induced_delete(const Graph& g, VertexMask removed) {
  InducedSubgraph r;
  r.new_index.assign(g.order(), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (!(removed & bit(v))) {
      r.new_index[v] = static_cast<int>(r.old_index.size());
      r.old_index.push_back(v);
    }
  }
  std::vector<VertexMask> adj(r.old_index.size(), 0);
  for (std::size_t i = 0; i < r.old_index.size(); ++i) {
    for (VertexMask m = g.neighbors(r.old_index[i]) & ~removed; m; m &= m - 1) {
      adj[i] |= bit(r.new_index[lowest(m)]);
    }
  }
  r.graph = Graph::from_adjacency(std::move(adj));
  return r;
}

Identification identify_vertices_mapped(const Graph& g1, int v1, const Graph& g2, int v2) {
  if (v1 < 0 || v1 >= g1.order() || v2 < 0 || v2 >= g2.order()) {
    throw PreconditionError("identify_vertices: vertex out of range");
  }
  const int n = g1.order() + g2.order() - 1;
  if (n > kMaxOrder) throw SizeLimitError("identify_vertices: result exceeds 62 vertices");
  Identification r;
  r.from_second.assign(g2.order(), -1);
  int next = g1.order();
  for (int v = 0; v < g2.order(); ++v) r.from_second[v] = (v == v2) ? v1 : next++;
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g1.edges()) pairs.emplace_back(e.u, e.v);
  for (const Edge& e : g2.edges()) pairs.emplace_back(r.from_second[e.u], r.from_second[e.v]);
  r.graph = Graph::from_edge_list(n, pairs);
  return r;
}

Graph identify_vertices(const Graph& g1, int v1, const Graph& g2, int v2) {
  return identify_vertices_mapped(g1, v1, g2, v2).graph;
}

Graph disjoint_union(const Graph& g1, const Graph& g2) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g1.edges()) pairs.emplace_back(e.u, e.v);
  for (const Edge& e : g2.edges()) pairs.emplace_back(e.u + g1.order(), e.v + g1.order());
  return Graph::from_edge_list(g1.order() + g2.order(), pairs);
}

}  // namespace wed
