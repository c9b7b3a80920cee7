#include "wed/edge_set.hpp"

#include "wed/errors.hpp"

namespace wed {

EdgeSet::EdgeSet(const Graph& g) : owner_(g.id()), edgeCount_(g.size()) {
  if (g.size() > kMaxEdges) {
    throw SizeLimitError("EdgeSet: graph has " + std::to_string(g.size()) +
                         " edges, more than 128");
  }
}

EdgeSet EdgeSet::from_indices(const Graph& g, std::initializer_list<int> indices) {
  return from_indices(g, std::vector<int>(indices));
}

EdgeSet EdgeSet::from_indices(const Graph& g, const std::vector<int>& indices) {
  EdgeSet s(g);
  for (int i : indices) s.insert(i);
  return s;
}

EdgeSet EdgeSet::from_pairs(const Graph& g, std::initializer_list<std::pair<int, int>> pairs) {
  EdgeSet s(g);
  for (auto [u, v] : pairs) {
    const int idx = g.edge_index(u, v);
    if (idx < 0) {
      throw PreconditionError("(" + std::to_string(u) + "," + std::to_string(v) +
                              ") is not an edge");
    }
    s.insert(idx);
  }
  return s;
}

EdgeSet EdgeSet::all(const Graph& g) {
  EdgeSet s(g);
  for (int i = 0; i < g.size(); ++i) s.insert(i);
  return s;
}

void EdgeSet::insert(int index) {
  if (index < 0 || index >= edgeCount_) {
    throw PreconditionError("edge index " + std::to_string(index) + " out of range");
  }
  words_[index >> 6] |= std::uint64_t{1} << (index & 63);
}

int EdgeSet::size() const { return std::popcount(words_[0]) + std::popcount(words_[1]); }

std::vector<int> EdgeSet::indices() const {
  std::vector<int> out;
  for (int w = 0; w < 2; ++w) {
    for (std::uint64_t m = words_[w]; m; m &= m - 1) out.push_back(64 * w + std::countr_zero(m));
  }
  return out;
}

VertexMask EdgeSet::saturated(const Graph& g) const {
  if (g.id() != owner_) throw PreconditionError("EdgeSet used with a different graph");
  VertexMask out = 0;
  for (int i : indices()) out |= bit(g.edge(i).u) | bit(g.edge(i).v);
  return out;
}

void EdgeSet::check_owner(const EdgeSet& o) const {
  if (o.owner_ != owner_) throw PreconditionError("EdgeSet owner mismatch");
}

EdgeSet& EdgeSet::operator|=(const EdgeSet& o) {
  check_owner(o);
  words_[0] |= o.words_[0];
  words_[1] |= o.words_[1];
  return *this;
}

EdgeSet& EdgeSet::operator&=(const EdgeSet& o) {
  check_owner(o);
  words_[0] &= o.words_[0];
  words_[1] &= o.words_[1];
  return *this;
}

EdgeSet& EdgeSet::operator-=(const EdgeSet& o) {
  check_owner(o);
  words_[0] &= ~o.words_[0];
  words_[1] &= ~o.words_[1];
  return *this;
}

bool EdgeSet::subset_of(const EdgeSet& o) const {
  check_owner(o);
  return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
}

std::string EdgeSet::to_string() const {
  std::string out = "[";
  bool first = true;
  for (int i : indices()) {
    if (!first) out += ' ';
    out += std::to_string(i);
    first = false;
  }
  return out + "]";
}

}  // namespace wed
