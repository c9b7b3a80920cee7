// harness.hpp - exhaustive verification runs over small-graph corpora.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wed/corpus.hpp"
#include "wed/graph.hpp"

namespace wed {

struct Finding {
  std::string check;
  std::string graph6;
  std::string detail;
  friend auto operator<=>(const Finding&, const Finding&) = default;
};

struct VerificationReport {
  std::string harness;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::map<std::string, long long> counts;
  std::vector<std::string> found;            // "<graph6> <label>"
  std::vector<Finding> discrepancies;        // reported, never fail the run
  std::vector<Finding> counterexamples;
  double elapsedMs = 0;

  bool passed() const { return counterexamples.empty(); }

  // Counts add, lists concatenate. Order-insensitive after canonicalize().
  void merge(const VerificationReport& other);
  void canonicalize();

  // Key/value lines; deterministic except for the optional elapsed_ms line.
  std::string to_text(bool includeTiming = true) const;
};

enum class Interpretation { Biconnected, Connected };

std::string interpretation_name(Interpretation i);

struct HarnessConfig {
  int jobs = 1;
  // When set, every order is read from this graph6 file instead of the
  // native generator.
  std::optional<std::string> corpusPath;
};

// Corpus for one order under the config's source.
std::vector<Graph> load_corpus(int n, std::vector<Filter> filters, const HarnessConfig& config,
                               std::optional<int> minGirth = std::nullopt);

// Label of a named graph isomorphic to g ("C5", "H", "F5", ...), if any.
std::optional<std::string> named_label(const Graph& g);

// classify_one_triangle against the WED oracle on every connected graph with
// exactly one triangle, orders nMin..nMax; also rebuilds every witness.
VerificationReport verify_theorem1(int nMin, int nMax, const HarnessConfig& config = {});

// All WED outerplanar graphs of orders nMin..nMax versus the eight named
// graphs {C3, C4, C5, H, F5, C7, C7*, DH}. Under the connected reading,
// extra WED graphs are discrepancies rather than counterexamples.
VerificationReport verify_outerplanar(int nMin, int nMax, Interpretation interpretation,
                                      const HarnessConfig& config = {});

// No equimatchable outerplanar graph at the given orders (each in {6,8,9,10}).
VerificationReport verify_theorem8(const std::vector<int>& orders, Interpretation interpretation,
                                   const HarnessConfig& config = {});

// Universally quantified statements over connected graphs of order <= nMax.
// Check names: matching-removal-wed, matching-removal-equimatchable,
// equal-neighborhood-equal-size, b-vertex-both-ways,
// balanced-is-complete-bipartite, cut-vertex-in-b, cut-vertex-matchings,
// complete-bipartite-not-wed, a-vertex-support-or-4cycle, girth5-recognizer,
// triangle-free-recognizer, randomly-matchable,
// bipartite-equimatchable-saturation.
VerificationReport verify_lemma_suite(int nMax, const HarnessConfig& config = {});

// Girth-5 characterization with the support-vertex clause dropped. Must fail.
VerificationReport verify_negative_control(int nMax, const HarnessConfig& config = {});

}  // namespace wed
