#include "wed/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "wed/canonical.hpp"
#include "wed/errors.hpp"
#include "wed/outerplanar.hpp"

namespace wed {

namespace {

bool has(const CorpusSpec& spec, Filter f) {
  return std::find(spec.filters.begin(), spec.filters.end(), f) != spec.filters.end();
}

// Canonical graph6 strings per order; index = n.
struct Levels {
  std::vector<std::vector<std::string>> all;
  std::vector<std::vector<std::string>> connected;
};

std::vector<std::string> extend(const std::vector<std::string>& previous, int n,
                                bool connectedOnly) {
  std::set<std::string> seen;
  const VertexMask subsets = full_mask(n - 1);
  for (const std::string& code : previous) {
    const Graph small = parse_graph6(code);
    std::vector<VertexMask> adj(n, 0);
    for (int v = 0; v < n - 1; ++v) adj[v] = small.neighbors(v);
    for (VertexMask nb = connectedOnly ? 1 : 0; nb <= subsets; ++nb) {
      std::vector<VertexMask> grown = adj;
      grown[n - 1] = nb;
      for (VertexMask m = nb; m; m &= m - 1) grown[lowest(m)] |= bit(n - 1);
      seen.insert(canonical_form(Graph::from_adjacency(std::move(grown))));
    }
  }
  return {seen.begin(), seen.end()};
}

const std::vector<std::string>& native_level(int n, bool connectedOnly) {
  static std::mutex mutex;
  static Levels levels;
  std::lock_guard<std::mutex> lock(mutex);
  auto& table = connectedOnly ? levels.connected : levels.all;
  if (table.empty()) {
    table.push_back({serialize_graph6(Graph())});
    table.push_back({serialize_graph6(Graph::from_edge_list(1, {}))});
  }
  while (static_cast<int>(table.size()) <= n) {
    const int next = static_cast<int>(table.size());
    table.push_back(extend(table[next - 1], next, connectedOnly));
  }
  return table[n];
}

bool chords_cross(std::pair<int, int> a, std::pair<int, int> b) {
  return (a.first < b.first && b.first < a.second && a.second < b.second) ||
         (b.first < a.first && a.first < b.second && b.second < a.second);
}

std::vector<Graph> parse_sorted(const std::set<std::string>& codes) {
  std::vector<Graph> out;
  out.reserve(codes.size());
  for (const std::string& c : codes) out.push_back(parse_graph6(c));
  return out;
}

}  // namespace

bool passes(const Graph& g, const CorpusSpec& spec) {
  for (Filter f : spec.filters) {
    switch (f) {
      case Filter::Connected:
        if (!is_connected(g)) return false;
        break;
      case Filter::Biconnected:
        if (!is_biconnected(g)) return false;
        break;
      case Filter::Bipartite:
        if (!bipartition(g)) return false;
        break;
      case Filter::NonBipartite:
        if (bipartition(g)) return false;
        break;
      case Filter::Outerplanar:
        if (!is_outerplanar(g)) return false;
        break;
      case Filter::ExactlyOneTriangle:
        if (triangles(g).size() != 1) return false;
        break;
      case Filter::TriangleFree:
        if (!triangles(g).empty()) return false;
        break;
    }
  }
  if (spec.minGirth) {
    const auto gi = girth(g);
    if (gi && *gi < *spec.minGirth) return false;
  }
  return true;
}

std::vector<Graph> enumerate_biconnected_outerplanar(int n) {
  if (n < 3) throw PreconditionError("biconnected outerplanar graphs need n >= 3");
  require_order_at_most(n, kOuterplanarMaxOrder, "enumerate_biconnected_outerplanar");
  std::vector<std::pair<int, int>> chords;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 2; j < n; ++j) {
      if (!(i == 0 && j == n - 1)) chords.emplace_back(i, j);
    }
  }
  std::vector<VertexMask> cycle(n, 0);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    cycle[i] |= bit(j);
    cycle[j] |= bit(i);
  }
  std::set<std::string> seen;
  std::vector<std::pair<int, int>> picked;
  auto walk = [&](auto&& self, std::size_t from) -> void {
    std::vector<VertexMask> adj = cycle;
    for (auto [a, b] : picked) {
      adj[a] |= bit(b);
      adj[b] |= bit(a);
    }
    seen.insert(canonical_form(Graph::from_adjacency(std::move(adj))));
    for (std::size_t k = from; k < chords.size(); ++k) {
      const bool ok = std::none_of(picked.begin(), picked.end(),
                                   [&](auto c) { return chords_cross(c, chords[k]); });
      if (!ok) continue;
      picked.push_back(chords[k]);
      self(self, k + 1);
      picked.pop_back();
    }
  };
  walk(walk, 0);
  return parse_sorted(seen);
}

std::vector<Graph> enumerate_graphs(const CorpusSpec& spec) {
  if (spec.n < 0) throw PreconditionError("negative order");
  std::vector<Graph> candidates;
  if (spec.source == Source::Graph6File) {
    require_order_at_most(spec.n, kFileMaxOrder, "graph6 corpus");
    std::set<std::string> codes;
    for (const Graph& g : read_graph6_file(spec.path)) {
      if (g.order() == spec.n) codes.insert(canonical_form(g));
    }
    candidates = parse_sorted(codes);
  } else if (has(spec, Filter::Biconnected) && has(spec, Filter::Outerplanar)) {
    if (spec.n < 3) return {};
    candidates = enumerate_biconnected_outerplanar(spec.n);
  } else {
    require_order_at_most(spec.n, kNativeMaxOrder, "native enumeration");
    const bool connectedOnly = has(spec, Filter::Connected) || has(spec, Filter::Biconnected);
    for (const std::string& code : native_level(spec.n, connectedOnly)) {
      candidates.push_back(parse_graph6(code));
    }
  }
  std::vector<Graph> out;
  for (Graph& g : candidates) {
    if (passes(g, spec)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  int lineNo = 0;
  while (std::getline(in, line)) {
    ++lineNo;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.rfind(">>graph6<<", 0) == 0) line.erase(0, 10);
    if (line.empty()) continue;
    try {
      out.push_back(parse_graph6(line));
    } catch (const FormatError& e) {
      throw FormatError("line " + std::to_string(lineNo) + ": " + e.what());
    }
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path);
  return read_graph6_stream(in);
}

std::vector<Graph> read_graphs_auto(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::istringstream probe(text);
  std::string first;
  probe >> first;
  if (first.empty()) throw FormatError("no graph in input");
  const bool numeric = std::all_of(first.begin(), first.end(), [](char c) {
    return c >= '0' && c <= '9';
  });
  if (numeric) return {parse_edge_list(text)};
  std::istringstream lines(text);
  return read_graph6_stream(lines);
}

}  // namespace wed
