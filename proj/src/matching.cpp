#include "wed/matching.hpp"

#include <map>

#include "wed/errors.hpp"

namespace wed {

namespace {

void check_owner(const Graph& g, const EdgeSet& f) {
  if (f.owner() != g.id()) throw PreconditionError("EdgeSet belongs to a different graph");
}

VertexMask endpoints(const Edge& e) { return bit(e.u) | bit(e.v); }

class MaximalMatchingSearch {
 public:
  MaximalMatchingSearch(const Graph& g, bool earlyExit)
      : g_(g), earlyExit_(earlyExit), visited_(std::size_t{1} << g.order(), false) {}

  void run() { dfs(0); }

  std::map<int, EdgeSet> found;
  std::vector<VertexMask> covers;
  bool stopped = false;

 private:
  const Graph& g_;
  bool earlyExit_;
  std::vector<bool> visited_;
  std::vector<int> path_;

  void dfs(VertexMask saturated) {
    if (stopped || visited_[saturated]) return;
    visited_[saturated] = true;
    const auto edges = g_.edges();
    int first = -1;
    for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
      if (!(saturated & endpoints(edges[i]))) {
        first = i;
        break;
      }
    }
    if (first < 0) {
      covers.push_back(saturated);
      const int size = popcount(saturated) / 2;
      if (!found.contains(size)) {
        found.emplace(size, EdgeSet::from_indices(g_, path_));
        if (earlyExit_ && found.size() >= 2) stopped = true;
      }
      return;
    }
    const VertexMask pivot = endpoints(edges[first]);
    for (int i = first; i < static_cast<int>(edges.size()); ++i) {
      const VertexMask ends = endpoints(edges[i]);
      if ((saturated & ends) || !(ends & pivot)) continue;
      path_.push_back(i);
      dfs(saturated | ends);
      path_.pop_back();
      if (stopped) return;
    }
  }
};

}  // namespace

EdgeSet closed_edge_neighborhood(const Graph& g, const EdgeSet& f) {
  check_owner(g, f);
  const VertexMask touched = f.saturated(g);
  EdgeSet out(g);
  for (int i = 0; i < g.size(); ++i) {
    if (touched & endpoints(g.edge(i))) out.insert(i);
  }
  return out;
}

bool is_matching(const Graph& g, const EdgeSet& f) {
  check_owner(g, f);
  VertexMask used = 0;
  for (int i : f.indices()) {
    const VertexMask ends = endpoints(g.edge(i));
    if (used & ends) return false;
    used |= ends;
  }
  return true;
}

bool is_maximal_matching(const Graph& g, const EdgeSet& f) {
  if (!is_matching(g, f)) return false;
  const VertexMask used = f.saturated(g);
  for (const Edge& e : g.edges()) {
    if (!(used & endpoints(e))) return false;
  }
  return true;
}

Graph remove_edge_neighborhood(const Graph& g, const EdgeSet& matching) {
  if (!is_matching(g, matching)) {
    throw PreconditionError("remove_edge_neighborhood: edge set is not a matching");
  }
  const VertexMask used = matching.saturated(g);
  std::vector<VertexMask> adj(g.order());
  for (int v = 0; v < g.order(); ++v) {
    adj[v] = (used & bit(v)) ? 0 : g.neighbors(v) & ~used;
  }
  return Graph::from_adjacency(std::move(adj));
}

MaximalMatchingSizes enumerate_maximal_matchings(const Graph& g, bool earlyExitOnTwoSizes) {
  require_order_at_most(g.order(), kMatchingMaxOrder, "enumerate_maximal_matchings");
  MaximalMatchingSearch search(g, earlyExitOnTwoSizes);
  search.run();
  MaximalMatchingSizes out;
  out.exhausted = !search.stopped;
  for (auto& [size, witness] : search.found) {
    out.sizes.push_back(size);
    out.witnesses.push_back(witness);
  }
  return out;
}

std::vector<VertexMask> maximal_matching_covers(const Graph& g) {
  require_order_at_most(g.order(), kMatchingMaxOrder, "maximal_matching_covers");
  MaximalMatchingSearch search(g, false);
  search.run();
  return search.covers;
}

int matching_number(const Graph& g) {
  require_order_at_most(g.order(), kMatchingMaxOrder, "matching_number");
  std::vector<signed char> memo(std::size_t{1} << g.order(), -1);
  auto best = [&](auto&& self, VertexMask remaining) -> int {
    if (!remaining) return 0;
    if (memo[remaining] >= 0) return memo[remaining];
    const int v = lowest(remaining);
    const VertexMask rest = remaining & ~bit(v);
    int result = self(self, rest);
    for (VertexMask m = g.neighbors(v) & rest; m; m &= m - 1) {
      result = std::max(result, 1 + self(self, rest & ~bit(lowest(m))));
    }
    memo[remaining] = static_cast<signed char>(result);
    return result;
  };
  return best(best, g.vertices());
}

void for_each_matching(const Graph& g, const std::function<void(const EdgeSet&)>& visit) {
  EdgeSet current(g);
  auto walk = [&](auto&& self, int from, VertexMask used) -> void {
    visit(current);
    for (int i = from; i < g.size(); ++i) {
      const VertexMask ends = endpoints(g.edge(i));
      if (used & ends) continue;
      current.insert(i);
      self(self, i + 1, used | ends);
      current.erase(i);
    }
  };
  walk(walk, 0, 0);
}

bool is_equimatchable(const Graph& g) {
  return enumerate_maximal_matchings(g, true).sizes.size() <= 1;
}

bool is_randomly_matchable(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  return is_equimatchable(g) && matching_number(g) == g.order() / 2;
}

}  // namespace wed
