#include "wed/domination.hpp"

#include <algorithm>
#include <array>
#include <optional>

#include "wed/errors.hpp"
#include "wed/matching.hpp"

namespace wed {

namespace {

using Words = std::array<std::uint64_t, 2>;

VertexMask endpoints(const Edge& e) { return bit(e.u) | bit(e.v); }

// Vertices covered by F - {member}, given per-vertex cover counts.
VertexMask covered_without(const Edge& member, VertexMask covered,
                           const std::array<int, 64>& count) {
  VertexMask out = covered;
  if (count[member.u] == 1) out &= ~bit(member.u);
  if (count[member.v] == 1) out &= ~bit(member.v);
  return out;
}

bool has_private_neighbor(const Graph& g, const Edge& member, VertexMask coveredByOthers) {
  for (int x : {member.u, member.v}) {
    if (coveredByOthers & bit(x)) continue;
    if (g.neighbors(x) & ~coveredByOthers) return true;
  }
  return false;
}

class EdsSearch {
 public:
  EdsSearch(const Graph& g, bool earlyExit) : g_(g), earlyExit_(earlyExit) {
    const int m = g.size();
    closedNbhd_.resize(m);
    for (int i = 0; i < m; ++i) {
      const VertexMask ends = endpoints(g.edge(i));
      for (int j = 0; j < m; ++j) {
        if (endpoints(g.edge(j)) & ends) closedNbhd_[i][j >> 6] |= std::uint64_t{1} << (j & 63);
      }
    }
    count_.fill(0);
  }

  void run() {
    Words excluded{};
    dfs(excluded);
  }

  std::optional<int> minSize;
  std::optional<int> maxSize;
  std::vector<int> witnessMin;
  std::vector<int> witnessMax;
  bool stopped = false;

 private:
  const Graph& g_;
  bool earlyExit_;
  std::vector<Words> closedNbhd_;
  std::array<int, 64> count_;
  VertexMask covered_ = 0;
  std::vector<int> chosen_;

  void add(int e) {
    const Edge& ed = g_.edge(e);
    ++count_[ed.u];
    ++count_[ed.v];
    covered_ |= endpoints(ed);
    chosen_.push_back(e);
  }

  void remove(int e) {
    const Edge& ed = g_.edge(e);
    if (--count_[ed.u] == 0) covered_ &= ~bit(ed.u);
    if (--count_[ed.v] == 0) covered_ &= ~bit(ed.v);
    chosen_.pop_back();
  }

  bool all_members_private() const {
    return std::all_of(chosen_.begin(), chosen_.end(), [&](int e) {
      const Edge& ed = g_.edge(e);
      return has_private_neighbor(g_, ed, covered_without(ed, covered_, count_));
    });
  }

  void record() {
    const int size = static_cast<int>(chosen_.size());
    if (!minSize || size < *minSize) {
      minSize = size;
      witnessMin = chosen_;
    }
    if (!maxSize || size > *maxSize) {
      maxSize = size;
      witnessMax = chosen_;
    }
    if (earlyExit_ && *minSize != *maxSize) stopped = true;
  }

  void dfs(Words excluded) {
    if (stopped) return;
    int pivot = -1;
    int fewest = 0;
    for (int i = 0; i < g_.size(); ++i) {
      if (covered_ & endpoints(g_.edge(i))) continue;
      const int candidates = std::popcount(closedNbhd_[i][0] & ~excluded[0]) +
                             std::popcount(closedNbhd_[i][1] & ~excluded[1]);
      if (pivot < 0 || candidates < fewest) {
        pivot = i;
        fewest = candidates;
      }
    }
    if (pivot < 0) {
      record();
      return;
    }
    for (int w = 0; w < 2; ++w) {
      for (std::uint64_t m = closedNbhd_[pivot][w] & ~excluded[w]; m; m &= m - 1) {
        const int f = 64 * w + std::countr_zero(m);
        add(f);
        if (all_members_private()) dfs(excluded);
        remove(f);
        if (stopped) return;
        excluded[f >> 6] |= std::uint64_t{1} << (f & 63);
      }
    }
  }
};

}  // namespace

bool is_edge_dominating(const Graph& g, const EdgeSet& f) {
  const VertexMask covered = f.saturated(g);
  return std::all_of(g.edges().begin(), g.edges().end(),
                     [&](const Edge& e) { return (covered & endpoints(e)) != 0; });
}

EdgeSet private_edge_neighbors(const Graph& g, const EdgeSet& f, int member) {
  if (!f.contains(member)) throw PreconditionError("private_edge_neighbors: not a member");
  EdgeSet rest = f;
  rest.erase(member);
  const VertexMask others = rest.saturated(g);
  const VertexMask ends = endpoints(g.edge(member));
  EdgeSet out(g);
  for (int i = 0; i < g.size(); ++i) {
    const VertexMask e = endpoints(g.edge(i));
    if ((e & ends) && !(e & others)) out.insert(i);
  }
  return out;
}

bool is_minimal_eds(const Graph& g, const EdgeSet& f) {
  if (!is_edge_dominating(g, f)) return false;
  for (int member : f.indices()) {
    if (private_edge_neighbors(g, f, member).empty()) return false;
  }
  return true;
}

EdsSummary enumerate_minimal_eds(const Graph& g, bool earlyExitOnTwoSizes) {
  require_order_at_most(g.order(), kDominationMaxOrder, "enumerate_minimal_eds");
  EdsSearch search(g, earlyExitOnTwoSizes);
  search.run();
  EdsSummary out{0, 0, EdgeSet(g), EdgeSet(g), !search.stopped};
  // An edgeless graph is dominated by the empty set alone.
  out.minSize = search.minSize.value_or(0);
  out.maxSize = search.maxSize.value_or(0);
  out.witnessMin = EdgeSet::from_indices(g, search.witnessMin);
  out.witnessMax = EdgeSet::from_indices(g, search.witnessMax);
  return out;
}

int edge_domination_number(const Graph& g) { return enumerate_minimal_eds(g, false).minSize; }

bool is_well_edge_dominated(const Graph& g) {
  require_order_at_most(g.order(), kDominationMaxOrder, "is_well_edge_dominated");
  if (!is_equimatchable(g)) return false;
  const EdsSummary s = enumerate_minimal_eds(g, true);
  return s.minSize == s.maxSize;
}

}  // namespace wed
