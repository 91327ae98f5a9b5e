#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gkmlab/gkmlab.h"

namespace {

struct RunConfig {
  std::string graph;
  std::string xi;
  std::uint64_t seed = 1;
  int max_degree = -1;
  int degree = -1;
  int max_m = 6;
  std::string level;
  std::string a;
  std::string class_path;
  std::string format = "table";
  std::string out;
};

int exit_code(gkm_status s) {
  switch (s) {
    case GKM_OK: return 0;
    case GKM_NEGATIVE: return 1;
    case GKM_INPUT_ERROR:
    case GKM_PRECONDITION: return 2;
    default: return 3;
  }
}

int fail(gkm_status s) {
  std::cerr << "gkmlab: " << gkm_last_error() << "\n";
  return exit_code(s);
}

int deliver(const RunConfig& cfg, gkm_status s, char* text) {
  if (!text) return fail(s);
  if (cfg.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      gkm_string_free(text);
      std::cerr << "gkmlab: cannot write '" << cfg.out << "'\n";
      return 2;
    }
    f << text;
  }
  gkm_string_free(text);
  return exit_code(s);
}

int run_graph_command(const std::string& command, const RunConfig& cfg) {
  nlohmann::ordered_json opts = nlohmann::ordered_json::object();
  if (cfg.max_degree >= 0) opts["max_degree"] = cfg.max_degree;
  if (cfg.degree >= 0) opts["degree"] = cfg.degree;
  if (!cfg.level.empty()) opts["level"] = cfg.level;
  if (!cfg.a.empty()) opts["a"] = cfg.a;
  if (!cfg.class_path.empty()) {
    std::ifstream in(cfg.class_path);
    if (!in) {
      std::cerr << "gkmlab: cannot open '" << cfg.class_path << "'\n";
      return 2;
    }
    try {
      opts["class"] = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
      std::cerr << "gkmlab: " << cfg.class_path << ": " << e.what() << "\n";
      return 2;
    }
  }

  gkm_graph* g = nullptr;
  gkm_status s = gkm_graph_open(cfg.graph.c_str(), &g);
  if (s != GKM_OK) return fail(s);
  s = gkm_graph_set_seed(g, cfg.seed);
  if (s == GKM_OK && !cfg.xi.empty()) s = gkm_graph_set_xi(g, cfg.xi.c_str());
  if (s != GKM_OK) {
    gkm_graph_free(g);
    return fail(s);
  }
  char* text = nullptr;
  s = gkm_run(g, command.c_str(), opts.dump().c_str(), cfg.format == "json" ? GKM_FORMAT_JSON : GKM_FORMAT_TABLE, &text);
  gkm_graph_free(g);
  return deliver(cfg, s, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph Morse theory toolkit: GKM graphs, equivariant cohomology, cross-sections and wall crossing"};
  app.require_subcommand(1);
  RunConfig cfg;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"validate", "check the axioms of the axial function"},
      {"morse", "polarizing vector, Morse function, indices, flows"},
      {"betti", "Betti numbers and their symmetry"},
      {"cohdim", "dim H^m against the Betti formula"},
      {"thom", "generating (Thom) classes"},
      {"package", "generating classes plus the free-module check"},
      {"slices", "two-dimensional slice verdicts against the full graph"},
      {"integrate", "integrals of classes"},
      {"cross-section", "cross-sections, hyperedges and Kirwan images"},
      {"cut", "the product skeleton used for cutting"},
      {"sweep", "dimension count by sweeping across walls"},
  };
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--graph", cfg.graph, "sn:N, johnson:N,K or file:PATH")->required();
    sub->add_option("--xi", cfg.xi, "polarizing vector \"a,b,...\" (searched when absent)");
    sub->add_option("--seed", cfg.seed, "seed for every randomized choice");
    sub->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--out", cfg.out, "write the report to PATH");
    std::string name = c.name;
    if (name == "cohdim" || name == "package" || name == "integrate" || name == "cross-section" || name == "sweep")
      sub->add_option("--max-degree", cfg.max_degree, "largest degree checked")->check(CLI::NonNegativeNumber);
    if (name == "cross-section") sub->add_option("--level", cfg.level, "regular value \"p/q\" (default: every gap)");
    if (name == "integrate" || name == "cross-section") sub->add_option("--class", cfg.class_path, "class JSON file");
    if (name == "sweep") sub->add_option("--degree", cfg.degree, "a single degree m")->check(CLI::NonNegativeNumber);
    if (name == "cut") sub->add_option("--a", cfg.a, "slope of the lifted Morse function \"p/q\"");
  }
  auto* appendix = app.add_subcommand("appendix-check", "symmetric-function and Vandermonde identity suites");
  appendix->add_option("--max-m", cfg.max_m, "largest number of nodes")->check(CLI::PositiveNumber);
  appendix->add_option("--seed", cfg.seed, "seed for the random cases");
  appendix->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
  appendix->add_option("--out", cfg.out, "write the report to PATH");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto* sub = app.get_subcommands().front();
  if (sub == appendix) {
    char* text = nullptr;
    gkm_status s = gkm_appendix_check(cfg.max_m, cfg.seed, cfg.format == "json" ? GKM_FORMAT_JSON : GKM_FORMAT_TABLE, &text);
    return deliver(cfg, s, text);
  }
  return run_graph_command(sub->get_name(), cfg);
}
