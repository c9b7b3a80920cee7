#include "wed/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "wed/corpus.hpp"
#include "wed/domination.hpp"
#include "wed/errors.hpp"
#include "wed/harness.hpp"
#include "wed/matching.hpp"
#include "wed/outerplanar.hpp"
#include "wed/recognizer.hpp"
#include "wed/structures.hpp"

namespace wed {

namespace {

const std::vector<std::string> kProperties = {"wed",   "equimatchable",      "gamma-e", "alpha",
                                              "randomly-matchable", "girth", "outerplanar"};

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<Graph> read_input(const std::string& path, const std::string& format,
                              std::istream& stdinStream) {
  std::ifstream file;
  std::istream* in = &stdinStream;
  if (path != "-") {
    file.open(path);
    if (!file) throw FormatError("cannot open " + path);
    in = &file;
  }
  if (format == "graph6") return read_graph6_stream(*in);
  if (format == "edgelist") {
    const std::string text{std::istreambuf_iterator<char>(*in), std::istreambuf_iterator<char>()};
    return {parse_edge_list(text)};
  }
  return read_graphs_auto(*in);
}

std::string write_graph(const Graph& g, const std::string& format) {
  return format == "edgelist" ? serialize_edge_list(g) : serialize_graph6(g) + "\n";
}

std::string property_value(const Graph& g, const std::string& prop) {
  auto yes_no = [](bool b) { return std::string(b ? "true" : "false"); };
  if (prop == "wed") return yes_no(is_well_edge_dominated(g));
  if (prop == "equimatchable") return yes_no(is_equimatchable(g));
  if (prop == "gamma-e") return std::to_string(edge_domination_number(g));
  if (prop == "alpha") return std::to_string(matching_number(g));
  if (prop == "randomly-matchable") return yes_no(is_randomly_matchable(g));
  if (prop == "girth") {
    const auto gi = girth(g);
    return gi ? std::to_string(*gi) : "inf";
  }
  return yes_no(is_outerplanar(g));
}

// Evaluates each graph on its own worker slot; output stays in input order.
std::vector<std::string> check_all(const std::vector<Graph>& graphs,
                                   const std::vector<std::string>& props, int jobs) {
  std::vector<std::string> blocks(graphs.size());
  std::vector<std::string> errors(graphs.size());
  auto work = [&](std::size_t k, std::size_t stride) {
    for (std::size_t i = k; i < graphs.size(); i += stride) {
      try {
        std::string block;
        const std::string prefix =
            graphs.size() > 1 ? "[" + std::to_string(i + 1) + "] " : std::string();
        for (const auto& p : props) block += prefix + p + ": " + property_value(graphs[i], p) + "\n";
        blocks[i] = std::move(block);
      } catch (const std::exception& e) {
        errors[i] = e.what();
      }
    }
  };
  const std::size_t stride =
      std::max<std::size_t>(1, std::min<std::size_t>(jobs, graphs.size()));
  if (stride == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t k = 0; k < stride; ++k) pool.emplace_back(work, k, stride);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw SizeLimitError(e);
  }
  return blocks;
}

void print_classification(const Classification& c, std::ostream& out) {
  out << "verdict: " << verdict_name(c.verdict) << "\n";
  out << "triangle: " << c.triangle[0] << " " << c.triangle[1] << " " << c.triangle[2] << "\n";
  if (c.witness) {
    out << "family: " << (c.witness->family == Family::T ? "T" : "F") << "\n";
    out << "base: " << serialize_graph6(c.witness->base) << "\n";
    out << "w: " << c.witness->w << "\n";
  }
  if (!c.reason.empty()) out << "reason: " << c.reason << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Edge domination and equimatchability toolkit for small graphs", "wed"};
  app.require_subcommand(1);

  // check
  auto* check = app.add_subcommand("check", "Evaluate properties of graphs");
  std::string checkFormat = "auto";
  std::string checkProps = "wed,equimatchable,gamma-e";
  std::string checkInput;
  int checkJobs = 1;
  check->add_option("--format", checkFormat, "Input format")
      ->check(CLI::IsMember({"auto", "graph6", "edgelist"}));
  check->add_option("--props", checkProps, "Comma-separated property list");
  check->add_option("--jobs", checkJobs, "Worker threads")->check(CLI::PositiveNumber);
  check->add_option("input", checkInput, "File, or - for standard input")->required();

  // recognize
  auto* recognize = app.add_subcommand("recognize", "Classify a connected one-triangle graph");
  std::string recognizeInput;
  recognize->add_option("input", recognizeInput, "File, or - for standard input")->required();

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a named graph");
  std::string genName;
  std::string genOut = "graph6";
  gen->add_option("name", genName,
                  "house|dreamhouse|crystal|c7star|k3|cycle:N|fan:N|path:N|complete:N|kbip:R,S")
      ->required();
  gen->add_option("--out", genOut, "Output format")->check(CLI::IsMember({"graph6", "edgelist"}));

  // family
  auto* family = app.add_subcommand("family", "Glue K3 (t) or the house (f) onto a base graph");
  std::string familyKind;
  std::string familyBase;
  int familyVertex = -1;
  std::string familyOut = "graph6";
  family->add_option("kind", familyKind, "t or f")->required()->check(CLI::IsMember({"t", "f"}));
  family->add_option("--base", familyBase, "Base graph file (graph6 or edge list)")->required();
  family->add_option("--vertex", familyVertex, "Vertex w of the base")->required();
  family->add_option("--out", familyOut, "Output format")
      ->check(CLI::IsMember({"graph6", "edgelist"}));

  // enumerate
  auto* enumerate = app.add_subcommand("enumerate", "Stream graph6 for every graph of order n");
  int enumN = 0;
  bool enumConnected = false;
  bool enumBiconnected = false;
  bool enumOneTriangle = false;
  bool enumOuterplanar = false;
  bool enumTriangleFree = false;
  enumerate->add_option("-n", enumN, "Order")->required()->check(CLI::Range(0, kFileMaxOrder));
  enumerate->add_flag("--connected", enumConnected);
  enumerate->add_flag("--biconnected", enumBiconnected);
  enumerate->add_flag("--one-triangle", enumOneTriangle);
  enumerate->add_flag("--outerplanar", enumOuterplanar);
  enumerate->add_flag("--triangle-free", enumTriangleFree);

  // verify
  auto* verify = app.add_subcommand("verify", "Run an exhaustive verification harness");
  std::string verifyName;
  int verifyN = 0;
  std::string verifyCorpus;
  std::string verifyInterpretation = "biconnected";
  int verifyJobs = 1;
  bool verifyNoTiming = false;
  verify->add_option("name", verifyName, "theorem1|outerplanar|theorem8|lemmas|negative-control")
      ->required()
      ->check(CLI::IsMember({"theorem1", "outerplanar", "theorem8", "lemmas", "negative-control"}));
  verify->add_option("-n", verifyN, "Largest order")->required()->check(CLI::Range(1, 12));
  verify->add_option("--corpus", verifyCorpus, "graph6 file used instead of native enumeration");
  verify->add_option("--interpretation", verifyInterpretation, "Outerplanar reading")
      ->check(CLI::IsMember({"biconnected", "connected"}));
  verify->add_option("--jobs", verifyJobs, "Worker threads")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", verifyNoTiming, "Omit the elapsed_ms line");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*check) {
      const auto props = split_commas(checkProps);
      if (props.empty()) throw PreconditionError("empty property list");
      for (const auto& p : props) {
        if (std::find(kProperties.begin(), kProperties.end(), p) == kProperties.end()) {
          throw PreconditionError("unknown property: " + p);
        }
      }
      const auto graphs = read_input(checkInput, checkFormat, in);
      if (graphs.empty()) throw FormatError("no graph in input");
      for (const auto& block : check_all(graphs, props, checkJobs)) out << block;
      return 0;
    }
    if (*recognize) {
      const auto graphs = read_input(recognizeInput, "auto", in);
      if (graphs.empty()) throw FormatError("no graph in input");
      for (std::size_t i = 0; i < graphs.size(); ++i) {
        if (graphs.size() > 1) out << "graph: " << serialize_graph6(graphs[i]) << "\n";
        print_classification(classify_one_triangle(graphs[i]), out);
      }
      return 0;
    }
    if (*gen) {
      out << write_graph(make_named(parse_named(genName)), genOut);
      return 0;
    }
    if (*family) {
      const auto graphs = read_input(familyBase, "auto", in);
      if (graphs.size() != 1) throw FormatError("base file must hold exactly one graph");
      const Graph& base = graphs.front();
      const auto bip = bipartition(base);
      if (!bip) throw PreconditionError("base graph is not bipartite");
      if (familyVertex < 0 || familyVertex >= base.order()) {
        throw PreconditionError("vertex out of range");
      }
      const Graph g = familyKind == "t" ? build_family_T(base, *bip, familyVertex)
                                        : build_family_F(base, *bip, familyVertex);
      out << write_graph(g, familyOut);
      return 0;
    }
    if (*enumerate) {
      CorpusSpec spec;
      spec.n = enumN;
      if (enumConnected) spec.filters.push_back(Filter::Connected);
      if (enumBiconnected) spec.filters.push_back(Filter::Biconnected);
      if (enumOneTriangle) spec.filters.push_back(Filter::ExactlyOneTriangle);
      if (enumOuterplanar) spec.filters.push_back(Filter::Outerplanar);
      if (enumTriangleFree) spec.filters.push_back(Filter::TriangleFree);
      for (const Graph& g : enumerate_graphs(spec)) out << serialize_graph6(g) << "\n";
      return 0;
    }
    if (*verify) {
      HarnessConfig config;
      config.jobs = verifyJobs;
      if (!verifyCorpus.empty()) {
        std::ifstream probe(verifyCorpus);
        if (!probe) throw FormatError("cannot open " + verifyCorpus);
        config.corpusPath = verifyCorpus;
      }
      const Interpretation interpretation = verifyInterpretation == "connected"
                                                ? Interpretation::Connected
                                                : Interpretation::Biconnected;
      VerificationReport report;
      if (verifyName == "theorem1") {
        report = verify_theorem1(3, verifyN, config);
      } else if (verifyName == "outerplanar") {
        if (verifyN < 3 || verifyN > 10) throw PreconditionError("outerplanar needs 3 <= n <= 10");
        report = verify_outerplanar(3, verifyN, interpretation, config);
      } else if (verifyName == "theorem8") {
        std::vector<int> orders;
        for (int n : {6, 8, 9, 10}) {
          if (n <= verifyN) orders.push_back(n);
        }
        if (orders.empty()) throw PreconditionError("theorem8 needs n >= 6");
        report = verify_theorem8(orders, interpretation, config);
      } else if (verifyName == "lemmas") {
        report = verify_lemma_suite(verifyN, config);
      } else {
        report = verify_negative_control(verifyN, config);
      }
      out << report.to_text(!verifyNoTiming);
      return report.passed() ? 0 : 1;
    }
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const SizeLimitError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const FormatError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    err << "internal check failed: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace wed
