#include "wed/harness.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include "wed/canonical.hpp"
#include "wed/domination.hpp"
#include "wed/errors.hpp"
#include "wed/matching.hpp"
#include "wed/recognizer.hpp"
#include "wed/structures.hpp"

namespace wed {

namespace {

using Clock = std::chrono::steady_clock;
using PerGraph = std::function<void(const Graph&, VerificationReport&)>;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Worker k takes graphs k, k + jobs, ...; partial reports are merged and
// canonicalized, so the result does not depend on `jobs`.
void sweep(const std::vector<Graph>& graphs, int jobs, const PerGraph& check,
           VerificationReport& into) {
  jobs = std::max(1, std::min<int>(jobs, static_cast<int>(graphs.size())));
  std::vector<VerificationReport> partial(jobs);
  auto work = [&](int k) {
    for (std::size_t i = k; i < graphs.size(); i += jobs) check(graphs[i], partial[k]);
  };
  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < jobs; ++k) pool.emplace_back(work, k);
    for (auto& t : pool) t.join();
  }
  for (const auto& p : partial) into.merge(p);
}

std::string orders_text(int lo, int hi) { return std::to_string(lo) + ".." + std::to_string(hi); }

std::string orders_text(const std::vector<int>& orders) {
  std::string out;
  for (int n : orders) out += (out.empty() ? "" : ",") + std::to_string(n);
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::vector<std::pair<std::string, Graph>> named_catalogue() {
  std::vector<std::pair<std::string, Graph>> out;
  auto add = [&](NamedGraph tag) { out.emplace_back(named_to_string(tag), make_named(tag)); };
  add({NamedKind::K3});
  for (int n = 4; n <= 10; ++n) add({NamedKind::Cycle, n});
  for (int n = 4; n <= 8; ++n) add({NamedKind::Fan, n});
  add({NamedKind::House});
  add({NamedKind::DreamHouse});
  add({NamedKind::Crystal});
  add({NamedKind::C7Star});
  for (int n = 2; n <= 8; ++n) add({NamedKind::Path, n});
  for (int n = 4; n <= 8; ++n) add({NamedKind::Complete, n});
  for (int r = 1; r <= 4; ++r) {
    for (int s = r; r + s <= 8; ++s) add({NamedKind::CompleteBipartite, r, s});
  }
  return out;
}

std::vector<std::pair<std::string, Graph>> outerplanar_wed_list() {
  return {{"C3", make_named({NamedKind::K3})},
          {"C4", make_named({NamedKind::Cycle, 4})},
          {"C5", make_named({NamedKind::Cycle, 5})},
          {"H", make_named({NamedKind::House})},
          {"F5", make_named({NamedKind::Fan, 5})},
          {"C7", make_named({NamedKind::Cycle, 7})},
          {"C7*", make_named({NamedKind::C7Star})},
          {"DH", make_named({NamedKind::DreamHouse})}};
}

std::vector<Filter> outerplanar_filters(Interpretation i) {
  if (i == Interpretation::Biconnected) {
    return {Filter::Connected, Filter::Biconnected, Filter::Outerplanar};
  }
  return {Filter::Connected, Filter::Outerplanar};
}

void add_finding(VerificationReport& r, bool asCounterexample, std::string check, const Graph& g,
                 std::string detail) {
  Finding f{std::move(check), serialize_graph6(g), std::move(detail)};
  (asCounterexample ? r.counterexamples : r.discrepancies).push_back(std::move(f));
}

// ---- property suite pieces ---------------------------------------------------

bool on_four_cycle(const Graph& g, int u) {
  const auto nbrs = mask_to_vertices(g.neighbors(u));
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.neighbors(nbrs[i]) & g.neighbors(nbrs[j]) & ~bit(u)) return true;
    }
  }
  return false;
}

bool is_complete_balanced_bipartite(const Graph& g, const Bipartition& bip) {
  return bip.size_a() == bip.size_b() && g.size() == bip.size_a() * bip.size_b();
}

bool is_odd_cycle_5_or_7(const Graph& g) {
  if (g.order() != 5 && g.order() != 7) return false;
  if (g.size() != g.order() || !is_connected(g)) return false;
  for (int v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) return false;
  }
  return true;
}

bool is_complete_graph(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

void check_matching_removal(const Graph& g, bool equimatchable, bool wedG, VerificationReport& r) {
  if (!equimatchable) return;
  for_each_matching(g, [&](const EdgeSet& m) {
    if (m.empty()) return;
    const Graph reduced = remove_edge_neighborhood(g, m);
    if (wedG) {
      ++r.counts["matching-removal-wed.checked"];
      if (!is_well_edge_dominated(reduced)) {
        add_finding(r, true, "matching-removal-wed", g, "M=" + m.to_string());
      }
    }
    ++r.counts["matching-removal-equimatchable.checked"];
    if (!is_equimatchable(reduced)) {
      add_finding(r, true, "matching-removal-equimatchable", g, "M=" + m.to_string());
    }
  });
}

void check_equal_neighborhoods(const Graph& g, VerificationReport& r) {
  std::map<std::array<std::uint64_t, 2>, int> sizeByNeighborhood;
  for_each_matching(g, [&](const EdgeSet& m) {
    const auto key = closed_edge_neighborhood(g, m).words();
    const auto [it, inserted] = sizeByNeighborhood.emplace(key, m.size());
    if (!inserted && it->second != m.size()) {
      add_finding(r, true, "equal-neighborhood-equal-size", g,
                  "sizes " + std::to_string(it->second) + " and " + std::to_string(m.size()));
    }
  });
  ++r.counts["equal-neighborhood-equal-size.checked"];
}

// Matchings around a cut vertex x of a connected bipartite WED graph.
void check_cut_vertex_matchings(const Graph& g, const Bipartition& bip, int x, VerificationReport& r) {
  const VertexMask others = g.vertices() & ~bit(x);
  std::vector<VertexMask> comps;
  for (VertexMask left = others; left;) {
    const VertexMask c = component_of(g, lowest(left), left);
    comps.push_back(c);
    left &= ~c;
  }
  const int k = static_cast<int>(comps.size());
  if (bip.contains_a(x)) {
    for (VertexMask comp : comps) {
      const auto sub = induced_delete(g, g.vertices() & ~(comp | bit(x)));
      VertexMask sideOfX = 0;
      for (VertexMask m = (comp | bit(x)) & bip.sideA; m; m &= m - 1) {
        sideOfX |= bit(sub.new_index[lowest(m)]);
      }
      const auto covers = maximal_matching_covers(sub.graph);
      const bool ok = std::any_of(covers.begin(), covers.end(),
                                  [&](VertexMask c) { return (c & sideOfX) == sideOfX; });
      ++r.counts["cut-vertex-matchings.checked"];
      if (!ok) add_finding(r, true, "cut-vertex-matchings", g, "x=" + std::to_string(x) + " part 1");
    }
    return;
  }
  for (int subset = 0; subset < (1 << k) - 1; ++subset) {
    VertexMask removed = 0;
    for (int i = 0; i < k; ++i) {
      if (subset & (1 << i)) removed |= comps[i];
    }
    const auto sub = induced_delete(g, removed);
    const int xi = sub.new_index[x];
    std::set<int> withX;
    std::set<int> withoutX;
    for (VertexMask c : maximal_matching_covers(sub.graph)) {
      ((c & bit(xi)) ? withX : withoutX).insert(popcount(c) / 2);
    }
    const bool ok = std::any_of(withX.begin(), withX.end(),
                                [&](int s) { return withoutX.contains(s); });
    ++r.counts["cut-vertex-matchings.checked"];
    if (!ok) {
      add_finding(r, true, "cut-vertex-matchings", g,
                  "x=" + std::to_string(x) + " part 2, components removed " +
                      std::to_string(subset));
    }
  }
}

void check_bipartite_statements(const Graph& g, const Bipartition& bip, bool equimatchable,
                                bool wedG, VerificationReport& r) {
  const auto covers = maximal_matching_covers(g);
  const bool allSaturateA = std::all_of(covers.begin(), covers.end(), [&](VertexMask c) {
    return (c & bip.sideA) == bip.sideA;
  });
  ++r.counts["bipartite-equimatchable-saturation.checked"];
  if (allSaturateA != equimatchable) {
    add_finding(r, true, "bipartite-equimatchable-saturation", g,
                "equimatchable=" + yes_no(equimatchable) + " saturates-A=" + yes_no(allSaturateA));
  }

  const bool unbalanced = bip.size_a() < bip.size_b();
  // Needs an edge: on K1 the empty matching is the only maximal one.
  if (equimatchable && unbalanced && g.size() > 0) {
    for (VertexMask m = bip.sideB; m; m &= m - 1) {
      const int v = lowest(m);
      const bool with = std::any_of(covers.begin(), covers.end(),
                                    [&](VertexMask c) { return (c & bit(v)) != 0; });
      const bool without = std::any_of(covers.begin(), covers.end(),
                                       [&](VertexMask c) { return (c & bit(v)) == 0; });
      ++r.counts["b-vertex-both-ways.checked"];
      if (!with || !without) add_finding(r, true, "b-vertex-both-ways", g, "v=" + std::to_string(v));
    }
    const VertexMask support = support_vertices(g);
    for (VertexMask m = bip.sideA; m; m &= m - 1) {
      const int u = lowest(m);
      ++r.counts["a-vertex-support-or-4cycle.checked"];
      if (!(support & bit(u)) && !on_four_cycle(g, u)) {
        add_finding(r, true, "a-vertex-support-or-4cycle", g, "u=" + std::to_string(u));
      }
    }
  }

  if (wedG && !unbalanced) {
    ++r.counts["balanced-is-complete-bipartite.checked"];
    if (!is_complete_balanced_bipartite(g, bip)) add_finding(r, true, "balanced-is-complete-bipartite", g, "");
  }

  if (wedG) {
    for (VertexMask m = cut_vertices(g); m; m &= m - 1) {
      const int x = lowest(m);
      if (unbalanced && bip.contains_b(x)) {
        ++r.counts["cut-vertex-in-b.checked"];
        const auto rest = induced_delete(g, bit(x));
        if (!is_well_edge_dominated(rest.graph)) {
          add_finding(r, true, "cut-vertex-in-b", g, "x=" + std::to_string(x) + " G-x not WED");
        }
        for (VertexMask comp : connected_components(rest.graph)) {
          VertexMask original = 0;
          for (VertexMask c = comp; c; c &= c - 1) original |= bit(rest.old_index[lowest(c)]);
          if (popcount(original & bip.sideA) > popcount(original & bip.sideB)) {
            add_finding(r, true, "cut-vertex-in-b", g,
                        "x=" + std::to_string(x) + " component with |A_i| > |B_i|");
          }
        }
      }
      check_cut_vertex_matchings(g, bip, x, r);
    }
  }
}

void property_suite_graph(const Graph& g, VerificationReport& r) {
  ++r.counts["graphs"];
  const bool equimatchable = is_equimatchable(g);
  const bool wedG = equimatchable && is_well_edge_dominated(g);
  if (wedG) ++r.counts["graphs.wed"];
  if (equimatchable) ++r.counts["graphs.equimatchable"];

  check_matching_removal(g, equimatchable, wedG, r);
  if (equimatchable) check_equal_neighborhoods(g, r);

  const auto bip = bipartition(g);
  if (bip) check_bipartite_statements(g, *bip, equimatchable, wedG, r);

  const auto gi = girth(g);
  if (!gi || *gi >= 5) {
    ++r.counts["girth5-recognizer.checked"];
    if (recognize_girth5(g) != wedG) {
      add_finding(r, true, "girth5-recognizer", g, "oracle=" + yes_no(wedG));
    }
  }
  if (!bip && triangles(g).empty()) {
    ++r.counts["triangle-free-recognizer.checked"];
    if (recognize_girth4_nonbipartite(g) != wedG) {
      add_finding(r, true, "triangle-free-recognizer", g, "oracle=" + yes_no(wedG));
    }
  }

  const bool randomlyMatchable = is_randomly_matchable(g);
  const bool shape = (is_complete_graph(g) && g.order() % 2 == 0 && g.order() > 0) ||
                     (bip && g.order() > 0 && is_complete_balanced_bipartite(g, *bip));
  ++r.counts["randomly-matchable.checked"];
  if (randomlyMatchable != shape) {
    add_finding(r, true, "randomly-matchable", g, "randomly-matchable=" + yes_no(randomlyMatchable));
  }
}

}  // namespace

// ---- report -------------------------------------------------------------------

void VerificationReport::merge(const VerificationReport& other) {
  for (const auto& [k, v] : other.counts) counts[k] += v;
  found.insert(found.end(), other.found.begin(), other.found.end());
  discrepancies.insert(discrepancies.end(), other.discrepancies.begin(),
                       other.discrepancies.end());
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(),
                         other.counterexamples.end());
}

void VerificationReport::canonicalize() {
  std::sort(found.begin(), found.end());
  std::sort(discrepancies.begin(), discrepancies.end());
  std::sort(counterexamples.begin(), counterexamples.end());
}

std::string VerificationReport::to_text(bool includeTiming) const {
  std::ostringstream out;
  out << "harness: " << harness << "\n";
  for (const auto& [k, v] : parameters) out << "param." << k << ": " << v << "\n";
  for (const auto& [k, v] : counts) out << "count." << k << ": " << v << "\n";
  for (const auto& f : found) out << "found: " << f << "\n";
  auto line = [&](const char* tag, const Finding& f) {
    out << tag << ": " << f.check << " " << f.graph6;
    if (!f.detail.empty()) out << " " << f.detail;
    out << "\n";
  };
  for (const auto& f : discrepancies) line("discrepancy", f);
  for (const auto& f : counterexamples) line("counterexample", f);
  out << "discrepancies: " << discrepancies.size() << "\n";
  out << "counterexamples: " << counterexamples.size() << "\n";
  out << "verdict: " << (passed() ? "pass" : "fail") << "\n";
  if (includeTiming) out << "elapsed_ms: " << static_cast<long long>(elapsedMs) << "\n";
  return out.str();
}

std::string interpretation_name(Interpretation i) {
  return i == Interpretation::Biconnected ? "biconnected" : "connected";
}

std::vector<Graph> load_corpus(int n, std::vector<Filter> filters, const HarnessConfig& config,
                               std::optional<int> minGirth) {
  CorpusSpec spec;
  spec.n = n;
  spec.filters = std::move(filters);
  spec.minGirth = minGirth;
  if (config.corpusPath) {
    spec.source = Source::Graph6File;
    spec.path = *config.corpusPath;
  }
  return enumerate_graphs(spec);
}

std::optional<std::string> named_label(const Graph& g) {
  static const auto catalogue = named_catalogue();
  for (const auto& [name, h] : catalogue) {
    if (h.order() == g.order() && is_isomorphic(g, h)) return name;
  }
  return std::nullopt;
}

VerificationReport verify_theorem1(int nMin, int nMax, const HarnessConfig& config) {
  const auto start = Clock::now();
  VerificationReport r;
  r.harness = "theorem1";
  r.parameters = {{"orders", orders_text(nMin, nMax)},
                  {"source", config.corpusPath ? "graph6-file" : "native"}};
  for (int n = std::max(3, nMin); n <= nMax; ++n) {
    const auto corpus =
        load_corpus(n, {Filter::Connected, Filter::ExactlyOneTriangle}, config);
    r.counts["n" + std::to_string(n) + ".scanned"] += static_cast<long long>(corpus.size());
    sweep(corpus, config.jobs,
          [](const Graph& g, VerificationReport& part) {
            ++part.counts["scanned"];
            const Classification c = classify_one_triangle(g);
            const bool oracle = is_well_edge_dominated(g);
            ++part.counts["verdict." + verdict_name(c.verdict)];
            if (oracle) ++part.counts["oracle.wed"];
            if (c.is_wed() != oracle) {
              add_finding(part, true, "equivalence", g,
                          "recognizer=" + verdict_name(c.verdict) + " oracle=" + yes_no(oracle));
            }
            if (c.witness && !is_isomorphic(rebuild(*c.witness), g)) {
              add_finding(part, true, "witness", g, "rebuilt graph is not isomorphic");
            }
          },
          r);
  }
  r.canonicalize();
  r.elapsedMs = elapsed_ms(start);
  return r;
}

VerificationReport verify_outerplanar(int nMin, int nMax, Interpretation interpretation,
                                      const HarnessConfig& config) {
  if (nMin < 3 || nMax > 10 || nMin > nMax) {
    throw PreconditionError("verify_outerplanar: orders must lie in 3..10");
  }
  const auto start = Clock::now();
  const bool strict = interpretation == Interpretation::Biconnected;
  VerificationReport r;
  r.harness = "outerplanar";
  r.parameters = {{"orders", orders_text(nMin, nMax)},
                  {"interpretation", interpretation_name(interpretation)},
                  {"source", config.corpusPath ? "graph6-file" : "native"}};
  const auto expected = outerplanar_wed_list();
  for (int n = nMin; n <= nMax; ++n) {
    const auto corpus = load_corpus(n, outerplanar_filters(interpretation), config);
    const std::string key = "n" + std::to_string(n);
    r.counts[key + ".scanned"] += static_cast<long long>(corpus.size());
    VerificationReport part;
    sweep(corpus, config.jobs,
          [&](const Graph& g, VerificationReport& p) {
            if (!is_equimatchable(g)) return;
            ++p.counts[key + ".equimatchable"];
            if (!is_well_edge_dominated(g)) return;
            ++p.counts[key + ".wed"];
            const auto it = std::find_if(expected.begin(), expected.end(), [&](const auto& e) {
              return e.second.order() == g.order() && is_isomorphic(e.second, g);
            });
            if (it != expected.end()) {
              p.found.push_back(serialize_graph6(g) + " " + it->first);
            } else {
              const std::string label = named_label(g).value_or("unnamed");
              p.found.push_back(serialize_graph6(g) + " " + label);
              add_finding(p, strict, "unlisted-wed", g, label);
            }
          },
          part);
    for (const auto& [name, h] : expected) {
      if (h.order() != n) continue;
      const bool seen = std::any_of(part.found.begin(), part.found.end(), [&](const auto& line) {
        return is_isomorphic(parse_graph6(line.substr(0, line.find(' '))), h);
      });
      if (!seen) add_finding(part, true, "missing-wed", h, name);
    }
    r.merge(part);
  }
  r.counts["wed.total"] = static_cast<long long>(r.found.size());
  r.canonicalize();
  r.elapsedMs = elapsed_ms(start);
  return r;
}

VerificationReport verify_theorem8(const std::vector<int>& orders, Interpretation interpretation,
                                   const HarnessConfig& config) {
  for (int n : orders) {
    if (n != 6 && n != 8 && n != 9 && n != 10) {
      throw PreconditionError("verify_theorem8: orders must be drawn from {6, 8, 9, 10}");
    }
  }
  const auto start = Clock::now();
  const bool strict = interpretation == Interpretation::Biconnected;
  VerificationReport r;
  r.harness = "theorem8";
  r.parameters = {{"orders", orders_text(orders)},
                  {"interpretation", interpretation_name(interpretation)},
                  {"source", config.corpusPath ? "graph6-file" : "native"}};
  for (int n : orders) {
    const auto corpus = load_corpus(n, outerplanar_filters(interpretation), config);
    const std::string key = "n" + std::to_string(n);
    r.counts[key + ".scanned"] += static_cast<long long>(corpus.size());
    sweep(corpus, config.jobs,
          [&](const Graph& g, VerificationReport& p) {
            if (!is_equimatchable(g)) return;
            ++p.counts[key + ".equimatchable"];
            add_finding(p, strict, "equimatchable", g, named_label(g).value_or(""));
          },
          r);
  }
  r.canonicalize();
  r.elapsedMs = elapsed_ms(start);
  return r;
}

VerificationReport verify_lemma_suite(int nMax, const HarnessConfig& config) {
  const auto start = Clock::now();
  VerificationReport r;
  r.harness = "lemmas";
  r.parameters = {{"orders", orders_text(1, nMax)},
                  {"source", config.corpusPath ? "graph6-file" : "native"}};
  for (int n = 1; n <= nMax; ++n) {
    sweep(load_corpus(n, {Filter::Connected}, config), config.jobs, property_suite_graph, r);
  }
  for (int a = 2; a <= 5; ++a) {
    for (int b = a + 1; b <= 5; ++b) {
      const Graph k = make_named({NamedKind::CompleteBipartite, a, b});
      ++r.counts["complete-bipartite-not-wed.checked"];
      if (is_well_edge_dominated(k)) {
        add_finding(r, true, "complete-bipartite-not-wed", k, "K" + std::to_string(a) + "," + std::to_string(b));
      }
    }
  }
  r.canonicalize();
  r.elapsedMs = elapsed_ms(start);
  return r;
}

VerificationReport verify_negative_control(int nMax, const HarnessConfig& config) {
  const auto start = Clock::now();
  VerificationReport r;
  r.harness = "negative-control";
  r.parameters = {{"orders", orders_text(1, nMax)},
                  {"statement", "girth-5 characterization without the support-vertex clause"}};
  for (int n = 1; n <= nMax; ++n) {
    sweep(load_corpus(n, {Filter::Connected}, config, 5), config.jobs,
          [](const Graph& g, VerificationReport& p) {
            ++p.counts["girth5-weakened.checked"];
            const bool weakened = (g.order() == 2 && g.size() == 1) ||
                                  is_odd_cycle_5_or_7(g) || bipartition(g).has_value();
            const bool oracle = is_well_edge_dominated(g);
            if (weakened != oracle) {
              add_finding(p, true, "girth5-weakened", g, "oracle=" + yes_no(oracle));
            }
          },
          r);
  }
  r.canonicalize();
  r.elapsedMs = elapsed_ms(start);
  return r;
}

}  // namespace wed
