#include "wed/outerplanar.hpp"

#include <array>
#include <vector>

#include "wed/errors.hpp"

namespace wed {

namespace {

// Max number of internally vertex-disjoint a-b paths avoiding the edge ab,
// stopping once `enough` is reached. Unit vertex capacities via splitting:
// node 2v is v_in, 2v+1 is v_out.
int disjoint_paths(const Graph& g, int a, int b, int enough) {
  const int n = g.order();
  const int nodes = 2 * n;
  std::vector<std::array<int, 2 * kMaxOrder>> cap(nodes);
  for (auto& row : cap) row.fill(0);
  for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == a || v == b) ? enough : 1;
  for (const Edge& e : g.edges()) {
    if ((e.u == a && e.v == b) || (e.u == b && e.v == a)) continue;
    cap[2 * e.u + 1][2 * e.v] = 1;
    cap[2 * e.v + 1][2 * e.u] = 1;
  }
  const int source = 2 * a + 1;
  const int sink = 2 * b;
  int flow = 0;
  std::vector<int> prev(nodes);
  std::vector<int> queue(nodes);
  while (flow < enough) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[source] = source;
    int head = 0;
    int tail = 0;
    queue[tail++] = source;
    while (head < tail && prev[sink] < 0) {
      const int x = queue[head++];
      for (int y = 0; y < nodes; ++y) {
        if (prev[y] < 0 && cap[x][y] > 0) {
          prev[y] = x;
          queue[tail++] = y;
        }
      }
    }
    if (prev[sink] < 0) break;
    for (int y = sink; y != source; y = prev[y]) {
      --cap[prev[y]][y];
      ++cap[y][prev[y]];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool has_k4_minor(const Graph& g) {
  std::vector<VertexMask> adj(g.order());
  for (int v = 0; v < g.order(); ++v) adj[v] = g.neighbors(v);
  VertexMask alive = g.vertices();
  bool progress = true;
  while (alive && progress) {
    progress = false;
    for (VertexMask m = alive; m; m &= m - 1) {
      const int v = lowest(m);
      const int d = popcount(adj[v]);
      if (d > 2) continue;
      if (d == 2) {
        const int x = lowest(adj[v]);
        const int y = lowest(adj[v] & (adj[v] - 1));
        adj[x] |= bit(y);
        adj[y] |= bit(x);
      }
      for (VertexMask nb = adj[v]; nb; nb &= nb - 1) adj[lowest(nb)] &= ~bit(v);
      adj[v] = 0;
      alive &= ~bit(v);
      progress = true;
    }
  }
  return alive != 0;
}

bool has_k23_minor(const Graph& g) {
  if (g.order() < 5 || g.size() < 6) return false;
  for (int a = 0; a < g.order(); ++a) {
    if (g.degree(a) < 3) continue;
    for (int b = a + 1; b < g.order(); ++b) {
      if (g.degree(b) < 3) continue;
      if (disjoint_paths(g, a, b, 3) >= 3) return true;
    }
  }
  return false;
}

bool is_outerplanar(const Graph& g) {
  require_order_at_most(g.order(), kOuterplanarMaxOrder, "is_outerplanar");
  if (g.order() >= 2 && g.size() > 2 * g.order() - 3) return false;
  return !has_k4_minor(g) && !has_k23_minor(g);
}

}  // namespace wed
