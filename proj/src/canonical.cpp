#include "wed/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "wed/errors.hpp"

namespace wed {

namespace {

// Upper-triangle adjacency bits in graph6 column order, first bit most
// significant, so numeric order equals graph6 string order.
struct Code {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  friend auto operator<=>(const Code&, const Code&) = default;
};

using Cells = std::vector<VertexMask>;

Code code_of(const Graph& g, const std::vector<int>& order) {
  Code c;
  int k = 0;
  const int n = static_cast<int>(order.size());
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      if (g.adjacent(order[i], order[j])) {
        const int pos = 127 - k;
        if (pos >= 64) {
          c.hi |= std::uint64_t{1} << (pos - 64);
        } else {
          c.lo |= std::uint64_t{1} << pos;
        }
      }
    }
  }
  return c;
}

// Splits cells by neighbor counts into each splitter cell until stable.
// Fragment order depends only on counts, so the result is label-invariant.
void refine(const Graph& g, Cells& cells) {
  const int n = g.order();
  bool changed = true;
  while (changed && static_cast<int>(cells.size()) < n) {
    changed = false;
    for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
      const VertexMask splitter = cells[s];
      Cells next;
      next.reserve(n);
      for (VertexMask cell : cells) {
        if (popcount(cell) == 1) {
          next.push_back(cell);
          continue;
        }
        std::array<VertexMask, 64> byCount{};
        int lo = 64;
        int hi = -1;
        for (VertexMask m = cell; m; m &= m - 1) {
          const int v = lowest(m);
          const int c = popcount(g.neighbors(v) & splitter);
          byCount[c] |= bit(v);
          lo = std::min(lo, c);
          hi = std::max(hi, c);
        }
        if (lo != hi) changed = true;
        for (int c = lo; c <= hi; ++c) {
          if (byCount[c]) next.push_back(byCount[c]);
        }
      }
      cells.swap(next);
    }
  }
}

struct UnionFind {
  std::array<int, 64> parent{};
  explicit UnionFind(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

class Search {
 public:
  explicit Search(const Graph& g) : g_(g), n_(g.order()) {}

  std::vector<int> run() {
    Cells root;
    if (n_ > 0) root.push_back(g_.vertices());
    std::vector<int> fixed;
    descend(std::move(root), fixed);
    std::vector<int> labeling(n_);
    for (int pos = 0; pos < n_; ++pos) labeling[best_order_[pos]] = pos;
    return labeling;
  }

 private:
  static constexpr std::size_t kMaxStoredAutomorphisms = 256;

  const Graph& g_;
  int n_;
  bool haveBest_ = false;
  Code best_;
  std::vector<int> best_order_;
  std::vector<std::vector<int>> automorphisms_;

  bool twins(int v, int w) const {
    return (g_.neighbors(v) & ~bit(w)) == (g_.neighbors(w) & ~bit(v));
  }

  bool same_orbit_as_tried(int v, const std::vector<int>& tried,
                           const std::vector<int>& fixed) const {
    if (tried.empty() || automorphisms_.empty()) return false;
    UnionFind uf(n_);
    for (const auto& perm : automorphisms_) {
      const bool stabilizes =
          std::all_of(fixed.begin(), fixed.end(), [&](int f) { return perm[f] == f; });
      if (!stabilizes) continue;
      for (int x = 0; x < n_; ++x) uf.unite(x, perm[x]);
    }
    const int rv = uf.find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int w) { return uf.find(w) == rv; });
  }

  void leaf(const Cells& cells) {
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = lowest(cells[i]);
    const Code c = code_of(g_, order);
    if (!haveBest_ || c < best_) {
      haveBest_ = true;
      best_ = c;
      best_order_ = std::move(order);
    } else if (c == best_ && automorphisms_.size() < kMaxStoredAutomorphisms) {
      std::vector<int> perm(n_);
      for (int i = 0; i < n_; ++i) perm[order[i]] = best_order_[i];
      automorphisms_.push_back(std::move(perm));
    }
  }

  void descend(Cells cells, std::vector<int>& fixed) {
    refine(g_, cells);
    if (static_cast<int>(cells.size()) == n_) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      const int sz = popcount(cells[i]);
      if (sz > 1 && (target == cells.size() || sz < popcount(cells[target]))) target = i;
    }
    std::vector<int> tried;
    for (int v : mask_to_vertices(cells[target])) {
      const bool redundant =
          std::any_of(tried.begin(), tried.end(), [&](int w) { return twins(v, w); }) ||
          same_orbit_as_tried(v, tried, fixed);
      if (redundant) continue;
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i == target) {
          child.push_back(bit(v));
          child.push_back(cells[i] & ~bit(v));
        } else {
          child.push_back(cells[i]);
        }
      }
      fixed.push_back(v);
      descend(std::move(child), fixed);
      fixed.pop_back();
      tried.push_back(v);
    }
  }
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
  require_order_at_most(g.order(), kCanonicalMaxOrder, "canonical_form");
  return Search(g).run();
}

Graph relabel(const Graph& g, const std::vector<int>& labeling) {
  std::vector<VertexMask> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[labeling[e.u]] |= bit(labeling[e.v]);
    adj[labeling[e.v]] |= bit(labeling[e.u]);
  }
  return Graph::from_adjacency(std::move(adj));
}

std::string canonical_form(const Graph& g) {
  return serialize_graph6(relabel(g, canonical_labeling(g)));
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (g.degree_sequence() != h.degree_sequence()) return false;
  return canonical_form(g) == canonical_form(h);
}

}  // namespace wed
