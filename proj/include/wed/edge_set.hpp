// edge_set.hpp - bit set over the edge indices of one graph.
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "wed/graph.hpp"

namespace wed {

class EdgeSet {
 public:
  static constexpr int kMaxEdges = 128;

  // Empty set owned by g. Throws SizeLimitError if g has more than 128 edges.
  explicit EdgeSet(const Graph& g);

  static EdgeSet from_indices(const Graph& g, std::initializer_list<int> indices);
  static EdgeSet from_indices(const Graph& g, const std::vector<int>& indices);
  // Throws PreconditionError if some pair is not an edge of g.
  static EdgeSet from_pairs(const Graph& g, std::initializer_list<std::pair<int, int>> pairs);
  static EdgeSet all(const Graph& g);

  std::uint64_t owner() const { return owner_; }
  int capacity() const { return edgeCount_; }

  bool contains(int index) const { return (words_[index >> 6] >> (index & 63)) & 1U; }
  void insert(int index);
  void erase(int index) { words_[index >> 6] &= ~(std::uint64_t{1} << (index & 63)); }

  int size() const;
  bool empty() const { return words_[0] == 0 && words_[1] == 0; }
  std::vector<int> indices() const;

  // Vertices touched by some member.
  VertexMask saturated(const Graph& g) const;

  EdgeSet& operator|=(const EdgeSet& o);
  EdgeSet& operator&=(const EdgeSet& o);
  EdgeSet& operator-=(const EdgeSet& o);
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }
  bool subset_of(const EdgeSet& o) const;

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
    return a.owner_ == b.owner_ && a.words_ == b.words_;
  }

  const std::array<std::uint64_t, 2>& words() const { return words_; }

  // Sorted edge indices, e.g. "[0 3 5]".
  std::string to_string() const;

 private:
  std::uint64_t owner_ = 0;
  int edgeCount_ = 0;
  std::array<std::uint64_t, 2> words_{};

  void check_owner(const EdgeSet& o) const;
};

}  // namespace wed
