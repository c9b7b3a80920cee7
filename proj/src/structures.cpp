#include "wed/structures.hpp"

#include <charconv>

#include "wed/corpus.hpp"
#include "wed/domination.hpp"
#include "wed/errors.hpp"

namespace wed {

namespace {

using Pairs = std::vector<std::pair<int, int>>;

Graph from_pairs(int n, const Pairs& pairs) { return Graph::from_edge_list(n, pairs); }

int parse_int(const std::string& text) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) throw PreconditionError("not an integer: " + text);
  return value;
}

void check_base(const Graph& base, const Bipartition& bip, int w) {
  if (base.size() == 0 || !is_connected(base)) {
    throw PreconditionError("base graph must be connected with at least one edge");
  }
  if (!is_valid_bipartition(base, bip)) throw PreconditionError("not a bipartition of the base");
  if (bip.size_a() >= bip.size_b()) throw PreconditionError("bipartition needs |A| < |B|");
  if (w < 0 || w >= base.order() || !bip.contains_b(w)) {
    throw PreconditionError("vertex " + std::to_string(w) + " is not in B");
  }
  if (!is_well_edge_dominated(base)) throw PreconditionError("base is not well-edge-dominated");
}

bool detachable_unchecked(const Graph& base, const Bipartition& bip, int w) {
  const Graph rest = induced_delete(base, bit(w)).graph;
  if (!is_well_edge_dominated(rest)) return false;
  if (edge_domination_number(rest) != bip.size_a()) {
    throw std::logic_error("detachable vertex with gamma_e(G - w) != |A|");
  }
  return true;
}

bool supports_after_removal(const Graph& base, int w) {
  const auto cut = induced_delete(base, bit(w));
  const VertexMask support = support_vertices(cut.graph);
  for (VertexMask m = base.neighbors(w); m; m &= m - 1) {
    if (!(support & bit(cut.new_index[lowest(m)]))) return false;
  }
  return true;
}

}  // namespace

Graph make_named(const NamedGraph& tag) {
  const int p = tag.p;
  const int q = tag.q;
  Pairs e;
  switch (tag.kind) {
    case NamedKind::K3:
      return from_pairs(3, {{0, 1}, {1, 2}, {0, 2}});
    case NamedKind::Complete:
      if (p < 1 || p > kMaxOrder) throw PreconditionError("complete graph needs 1 <= n <= 62");
      for (int i = 0; i < p; ++i) {
        for (int j = i + 1; j < p; ++j) e.emplace_back(i, j);
      }
      return from_pairs(p, e);
    case NamedKind::Cycle:
      if (p < 3 || p > kMaxOrder) throw PreconditionError("cycle needs 3 <= n <= 62");
      for (int i = 0; i < p; ++i) e.emplace_back(i, (i + 1) % p);
      return from_pairs(p, e);
    case NamedKind::Path:
      if (p < 1 || p > kMaxOrder) throw PreconditionError("path needs 1 <= n <= 62");
      for (int i = 0; i + 1 < p; ++i) e.emplace_back(i, i + 1);
      return from_pairs(p, e);
    case NamedKind::CompleteBipartite:
      if (p < 1 || q < 1 || p + q > kMaxOrder) {
        throw PreconditionError("complete bipartite needs r, s >= 1 and r + s <= 62");
      }
      for (int i = 0; i < p; ++i) {
        for (int j = 0; j < q; ++j) e.emplace_back(i, p + j);
      }
      return from_pairs(p + q, e);
    case NamedKind::Fan:
      if (p < 3 || p > kMaxOrder) throw PreconditionError("fan needs 3 <= n <= 62");
      for (int i = 1; i < p; ++i) e.emplace_back(0, i);
      for (int i = 1; i + 1 < p; ++i) e.emplace_back(i, i + 1);
      return from_pairs(p, e);
    case NamedKind::House:
      return from_pairs(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
    case NamedKind::DreamHouse:
      return from_pairs(7, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {1, 4}, {3, 5}, {4, 6}, {5, 6}, {4, 5}});
    case NamedKind::Crystal:
      return from_pairs(
          7, {{0, 1}, {1, 2}, {0, 2}, {1, 3}, {3, 4}, {4, 5}, {3, 6}, {2, 6}, {0, 4}, {5, 6}});
    case NamedKind::C7Star:
      for (int i = 0; i < 7; ++i) e.emplace_back(i, (i + 1) % 7);
      e.emplace_back(0, 3);
      return from_pairs(7, e);
  }
  throw PreconditionError("unknown named graph");
}

NamedGraph parse_named(const std::string& name) {
  if (name == "k3") return {NamedKind::K3};
  if (name == "house") return {NamedKind::House};
  if (name == "dreamhouse") return {NamedKind::DreamHouse};
  if (name == "crystal") return {NamedKind::Crystal};
  if (name == "c7star") return {NamedKind::C7Star};
  const auto colon = name.find(':');
  if (colon == std::string::npos) throw PreconditionError("unknown graph name: " + name);
  const std::string head = name.substr(0, colon);
  const std::string arg = name.substr(colon + 1);
  if (head == "kbip") {
    const auto comma = arg.find(',');
    if (comma == std::string::npos) throw PreconditionError("kbip needs R,S");
    return {NamedKind::CompleteBipartite, parse_int(arg.substr(0, comma)),
            parse_int(arg.substr(comma + 1))};
  }
  const int value = parse_int(arg);
  if (head == "cycle") return {NamedKind::Cycle, value};
  if (head == "fan") return {NamedKind::Fan, value};
  if (head == "path") return {NamedKind::Path, value};
  if (head == "complete") return {NamedKind::Complete, value};
  throw PreconditionError("unknown graph name: " + name);
}

std::string named_to_string(const NamedGraph& tag) {
  switch (tag.kind) {
    case NamedKind::K3: return "K3";
    case NamedKind::Complete: return "K" + std::to_string(tag.p);
    case NamedKind::Cycle: return "C" + std::to_string(tag.p);
    case NamedKind::Path: return "P" + std::to_string(tag.p);
    case NamedKind::CompleteBipartite:
      return "K" + std::to_string(tag.p) + "," + std::to_string(tag.q);
    case NamedKind::Fan: return "F" + std::to_string(tag.p);
    case NamedKind::House: return "H";
    case NamedKind::DreamHouse: return "DH";
    case NamedKind::Crystal: return "Cr";
    case NamedKind::C7Star: return "C7*";
  }
  return "?";
}

bool is_detachable(const Graph& base, const Bipartition& bip, int w) {
  check_base(base, bip, w);
  return detachable_unchecked(base, bip, w);
}

bool is_strongly_detachable(const Graph& base, const Bipartition& bip, int w) {
  check_base(base, bip, w);
  return detachable_unchecked(base, bip, w) && supports_after_removal(base, w);
}

Graph build_family_T(const Graph& base, const Bipartition& bip, int w) {
  if (!is_detachable(base, bip, w)) {
    throw PreconditionError("build_family_T: vertex " + std::to_string(w) + " is not detachable");
  }
  return identify_vertices(make_named({NamedKind::K3}), kK3Identified, base, w);
}

Graph build_family_F(const Graph& base, const Bipartition& bip, int w) {
  if (!is_strongly_detachable(base, bip, w)) {
    throw PreconditionError("build_family_F: vertex " + std::to_string(w) +
                            " is not strongly detachable");
  }
  return identify_vertices(make_named({NamedKind::House}), kHouseApex, base, w);
}

Graph rebuild(const FamilyWitness& witness) {
  return witness.family == Family::T
             ? build_family_T(witness.base, witness.bipartition, witness.w)
             : build_family_F(witness.base, witness.bipartition, witness.w);
}

std::vector<BipartiteBase> find_bipartite_wed_bases(const std::vector<Graph>& corpus) {
  std::vector<BipartiteBase> out;
  for (const Graph& g : corpus) {
    if (g.size() == 0 || !is_connected(g)) continue;
    const auto bip = bipartition(g);
    if (!bip || bip->size_a() >= bip->size_b()) continue;
    if (!is_well_edge_dominated(g)) continue;
    BipartiteBase base{g, *bip, 0, 0};
    for (VertexMask m = bip->sideB; m; m &= m - 1) {
      const int w = lowest(m);
      if (detachable_unchecked(g, *bip, w)) {
        base.detachable |= bit(w);
        if (supports_after_removal(g, w)) base.stronglyDetachable |= bit(w);
      }
    }
    out.push_back(std::move(base));
  }
  return out;
}

std::vector<BipartiteBase> find_bipartite_wed_bases(int nMax) {
  if (nMax > kNativeMaxOrder) {
    throw SizeLimitError("find_bipartite_wed_bases: native corpus stops at order 8");
  }
  std::vector<Graph> corpus;
  for (int n = 2; n <= nMax; ++n) {
    CorpusSpec spec;
    spec.n = n;
    spec.filters = {Filter::Connected, Filter::Bipartite};
    for (Graph& g : enumerate_graphs(spec)) corpus.push_back(std::move(g));
  }
  return find_bipartite_wed_bases(corpus);
}

}  // namespace wed
