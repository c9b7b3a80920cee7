// corpus.hpp - small-graph corpora: native enumeration and graph6 ingestion.
#pragma once

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "wed/graph.hpp"

namespace wed {

inline constexpr int kNativeMaxOrder = 8;
inline constexpr int kFileMaxOrder = 12;

enum class Filter {
  Connected,
  Biconnected,
  Bipartite,
  Outerplanar,
  ExactlyOneTriangle,
  TriangleFree,
  NonBipartite,
};

enum class Source { Native, Graph6File };

struct CorpusSpec {
  int n = 0;
  Source source = Source::Native;
  std::string path;              // graph6 file when source == Graph6File
  std::vector<Filter> filters;
  std::optional<int> minGirth;  // girth >= k; forests always pass
};

bool passes(const Graph& g, const CorpusSpec& spec);

// One representative per isomorphism class, sorted by canonical graph6.
//
// Native: graphs on n vertices are grown from the canonical graphs on n - 1
// vertices by adding a vertex with every possible neighborhood (non-empty
// when the spec asks for connected graphs, since every connected graph has a
// vertex whose removal leaves it connected), then deduplicated by canonical
// form. The biconnected outerplanar corpus is generated directly as polygon
// dissections and is available natively up to order 12.
std::vector<Graph> enumerate_graphs(const CorpusSpec& spec);

// Hamiltonian cycle 0..n-1 plus every set of pairwise non-crossing chords,
// deduplicated up to isomorphism. 3 <= n <= 12.
std::vector<Graph> enumerate_biconnected_outerplanar(int n);

// One graph per non-empty line; an optional ">>graph6<<" header is skipped.
// Throws FormatError with the line number on malformed input.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

// Graph6 or edge-list text, detected from the first token: an edge list
// starts with "n m".
std::vector<Graph> read_graphs_auto(std::istream& in);

}  // namespace wed
