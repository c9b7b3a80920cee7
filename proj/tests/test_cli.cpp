#include <doctest.h>

#include <sstream>

#include "wed/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args, const std::string& input = "") {
  args.insert(args.begin(), "wed");
  std::istringstream in(input);
  std::ostringstream out;
  std::ostringstream err;
  const int code = wed::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("check with default properties") {
  const auto r = run({"check", "-"}, "DrK\n");
  CHECK(r.code == 0);
  CHECK(r.out == "wed: true\nequimatchable: true\ngamma-e: 2\n");
}

TEST_CASE("check with several graphs and properties") {
  const auto r = run({"check", "--props", "alpha,girth,outerplanar", "--jobs", "2", "-"},
                     "Bw\nA_\nCF\n");
  CHECK(r.code == 0);
  CHECK(r.out ==
        "[1] alpha: 1\n[1] girth: 3\n[1] outerplanar: true\n"
        "[2] alpha: 1\n[2] girth: inf\n[2] outerplanar: true\n"
        "[3] alpha: 1\n[3] girth: inf\n[3] outerplanar: true\n");
}

TEST_CASE("check reads edge lists") {
  const auto r = run({"check", "--format", "edgelist", "--props", "wed", "-"}, "4 3\n0 1\n1 2\n2 3\n");
  CHECK(r.code == 0);
  CHECK(r.out == "wed: false\n");
}

TEST_CASE("usage and format errors exit with 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"check", "--props", "colour", "-"}, "Bw\n").code == 2);
  CHECK(run({"check", "-"}, "B\n").code == 2);
  CHECK(run({"gen", "petersen"}).code == 2);
  CHECK(run({"verify", "theorem1"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("gen and family") {
  CHECK(run({"gen", "house"}).out == "DrK\n");
  CHECK(run({"gen", "k3", "--out", "edgelist"}).out == "3 3\n0 1\n0 2\n1 2\n");
  // P3 as the base, w = 0.
  const auto t = run({"family", "t", "--base", "-", "--vertex", "0"}, "3 2\n0 1\n1 2\n");
  CHECK(t.code == 0);
  const auto check = run({"check", "--props", "wed,gamma-e", "-"}, t.out);
  CHECK(check.out == "wed: true\ngamma-e: 2\n");
  CHECK(run({"family", "t", "--base", "-", "--vertex", "1"}, "3 2\n0 1\n1 2\n").code == 2);
}

TEST_CASE("recognize") {
  const auto r = run({"recognize", "-"}, "DrK\n");
  CHECK(r.code == 0);
  CHECK(r.out.rfind("verdict: house\n", 0) == 0);
  const auto member =
      run({"recognize", "-"}, "8 8\n0 1\n1 2\n2 3\n3 4\n3 5\n6 7\n7 4\n6 4\n");
  CHECK(member.out.find("verdict: member-T\n") != std::string::npos);
  CHECK(member.out.find("w: ") != std::string::npos);
  CHECK(run({"recognize", "-"}, "Dhc\n").code == 2);  // C5 has no triangle
}

TEST_CASE("enumerate") {
  const auto r = run({"enumerate", "-n", "4", "--connected"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 6);
}

TEST_CASE("verify exit codes") {
  const auto pass = run({"verify", "theorem1", "-n", "6", "--no-timing"});
  CHECK(pass.code == 0);
  CHECK(pass.out.find("verdict: pass") != std::string::npos);
  const auto fail = run({"verify", "negative-control", "-n", "6", "--no-timing"});
  CHECK(fail.code == 1);
  CHECK(fail.out.find("verdict: fail") != std::string::npos);
}

TEST_CASE("generated graphs pipe into check") {
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"k3", "true"},      {"house", "true"},   {"dreamhouse", "true"}, {"crystal", "true"},
      {"c7star", "true"},  {"cycle:7", "true"}, {"fan:5", "true"},      {"kbip:2,3", "false"},
      {"kbip:3,3", "true"}, {"path:4", "false"}, {"complete:4", "true"}};
  for (const auto& [name, wed] : expected) {
    for (const std::string format : {"graph6", "edgelist"}) {
      const auto g = run({"gen", name, "--out", format});
      REQUIRE(g.code == 0);
      const auto r = run({"check", "--props", "wed", "-"}, g.out);
      CHECK_MESSAGE(r.code == 0, name);
      CHECK_MESSAGE(r.out == "wed: " + wed + "\n", name);
    }
  }
}

TEST_CASE("outerplanar verification at seven vertices") {
  const auto r = run({"verify", "outerplanar", "-n", "7", "--interpretation", "biconnected"});
  CHECK(r.code == 0);
  for (const std::string label : {" C3\n", " C4\n", " C5\n", " H\n", " F5\n", " C7\n", " C7*\n", " DH\n"}) {
    CHECK_MESSAGE(r.out.find(label) != std::string::npos, label);
  }
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') > 8);
}

TEST_CASE("worker count does not change verify output") {
  const auto one = run({"verify", "lemmas", "-n", "6", "--no-timing"});
  const auto four = run({"verify", "lemmas", "-n", "6", "--jobs", "4", "--no-timing"});
  CHECK(one.out == four.out);
}
