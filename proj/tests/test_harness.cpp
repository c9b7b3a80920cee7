#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "wed/harness.hpp"
#include "wed/structures.hpp"

using namespace wed;

TEST_CASE("reports do not depend on the number of workers") {
  HarnessConfig one;
  HarnessConfig three;
  three.jobs = 3;
  CHECK(verify_theorem1(3, 7, one).to_text(false) == verify_theorem1(3, 7, three).to_text(false));
  CHECK(verify_lemma_suite(6, one).to_text(false) == verify_lemma_suite(6, three).to_text(false));
}

TEST_CASE("report text format") {
  const auto r = verify_outerplanar(3, 7, Interpretation::Biconnected);
  const auto text = r.to_text(false);
  CHECK(text.rfind("harness: outerplanar\n", 0) == 0);
  CHECK(text.find("verdict: pass\n") != std::string::npos);
  CHECK(text.find("counterexamples: 0\n") != std::string::npos);
  CHECK(text.find("elapsed_ms") == std::string::npos);
  CHECK(r.to_text(true).find("elapsed_ms: ") != std::string::npos);
}

TEST_CASE("connected reading reports extra graphs as discrepancies") {
  const auto r = verify_outerplanar(3, 7, Interpretation::Connected);
  CHECK(r.passed());
  CHECK_FALSE(r.discrepancies.empty());
}

TEST_CASE("external corpus replaces native enumeration") {
  const auto path = (std::filesystem::temp_directory_path() / "wed_harness_test.g6").string();
  {
    std::ofstream out(path);
    // Two cycles and the house; all outerplanar and biconnected.
    out << serialize_graph6(make_named({NamedKind::Cycle, 4})) << "\n"
        << serialize_graph6(make_named({NamedKind::Cycle, 6})) << "\n"
        << serialize_graph6(make_named({NamedKind::House})) << "\n";
  }
  HarnessConfig config;
  config.corpusPath = path;
  const auto r = verify_outerplanar(3, 10, Interpretation::Biconnected, config);
  CHECK(r.counts.at("wed.total") == 2);
  CHECK(r.counts.at("n6.scanned") == 1);
  // The six listed graphs absent from the file are reported missing.
  CHECK(r.counterexamples.size() == 6);
  for (const auto& f : r.counterexamples) CHECK(f.check == "missing-wed");
  std::remove(path.c_str());
}

TEST_CASE("named labels") {
  CHECK(named_label(make_named({NamedKind::Cycle, 5})) == "C5");
  CHECK(named_label(make_named({NamedKind::Fan, 5})) == "F5");
  CHECK(named_label(make_named({NamedKind::House})) == "H");
  CHECK_FALSE(named_label(Graph::from_edge_list(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}})));
}

TEST_CASE("the weakened check fails") {
  const auto r = verify_negative_control(6);
  CHECK_FALSE(r.passed());
}
