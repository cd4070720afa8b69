// bihalve: BI genome halving from the command line.
//
//   bihalve distance <genome>            n, C and both halving distances
//   bihalve halve <genome>               optimal BI scenario
//   bihalve verify <genome> <scenario>   replay and certify a scenario
//   bihalve gen --markers N --seed S     random genome
//   bihalve graph <genome>               natural graph components / DOT
//   bihalve oracle <genome>              brute-force distance
//
// Exit status: 0 success, 1 invalid genome or scenario, 2 usage error.

#include <fstream>
#include <iostream>
#include <iterator>

#include <CLI11.hpp>

#include "bihalve/bihalve.hpp"
#include "bihalve/json_io.hpp"

namespace {

using namespace bihalve;

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Genome load_genome(const std::string& path) {
  try {
    return parse_genome(read_input(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

int cmd_distance(const std::string& path, bool as_json) {
  const Genome g = load_genome(path);
  linear_markers(g);
  const HalvingSummary s = halving_summary(g);
  if (as_json)
    std::cout << to_json(s).dump(2) << '\n';
  else
    std::cout << to_string(s) << '\n';
  return 0;
}

int cmd_halve(const std::string& path, bool trace, bool as_json) {
  const Genome g = load_genome(path);
  SolveOptions opt;
  opt.trace = trace;
  const SolveResult r = halve(g, opt);
  if (as_json) {
    std::cout << to_json(r).dump(2) << '\n';
    return 0;
  }
  if (trace) std::cout << "# input " << to_string(g) << "\n# distance " << r.distance << '\n';
  for (std::size_t k = 0; k < r.scenario.steps.size(); ++k) {
    if (trace) {
      const auto& it = r.trace[k];
      std::cout << "# round " << k + 1 << ": reduced " << to_string(it.reduced) << '\n';
      if (it.move) {
        const auto& m = *it.move;
        std::cout << "#   I" << to_string(m.first.owner) << "=[" << m.first.lo << ',' << m.first.hi << ']';
        if (m.partner)
          std::cout << " I" << to_string(m.partner->owner) << "=[" << m.partner->lo << ',' << m.partner->hi << "]\n";
        else
          std::cout << " reintegrated by DCJ" << to_string(m.integration) << '\n';
      } else
        std::cout << "#   closing step found by exhaustive search\n";
      std::cout << "#   reduced " << to_string(it.reduced_step) << '\n';
    }
    std::cout << to_string(r.scenario.steps[k]) << '\n';
  }
  return 0;
}

int cmd_verify(const std::string& genome_path, const std::string& scenario_path, bool as_json) {
  Scenario sc;
  sc.initial = load_genome(genome_path);
  try {
    sc.steps = parse_scenario(read_input(scenario_path));
  } catch (const Error& e) {
    throw Error(scenario_path + ": " + e.what());
  }
  const VerificationReport rep = verify_scenario(sc, sc.steps.size());
  if (as_json)
    std::cout << to_json(rep).dump(2) << '\n';
  else
    std::cout << to_string(rep) << '\n';
  return rep.valid && rep.tandem ? 0 : 1;
}

int cmd_gen(std::size_t markers, std::uint64_t seed, std::optional<std::size_t> shuffles) {
  const Genome g = shuffles ? random_scrambled_tandem(markers, *shuffles, seed) : random_duplicated(markers, seed);
  std::cout << format_genome(g);
  return 0;
}

int cmd_graph(const std::string& path, bool dot, bool intervals, bool as_json) {
  const Genome g = load_genome(path);
  const NaturalGraph ng = build_natural_graph(g);
  if (as_json) {
    json out = to_json(ng);
    if (intervals) out["intervals"] = intervals_json(g);
    std::cout << out.dump(2) << '\n';
    return 0;
  }
  if (dot)
    std::cout << export_dot(ng);
  else
    std::cout << component_summary(ng) << '\n';
  if (intervals) std::cout << dump_intervals(g);
  return 0;
}

int cmd_oracle(const std::string& path, const std::string& model, const OracleConfig& cfg, bool as_json) {
  const Genome g = load_genome(path);
  const OracleResult r = model == "dcj" ? bfs_dcj_tandem_distance(g, cfg) : bfs_bi_distance(g, cfg);
  if (as_json) {
    std::cout << to_json(r).dump(2) << '\n';
  } else if (r.distance) {
    std::cout << (model == "dcj" ? "d_dcj_t=" : "d_bi=") << *r.distance << " expanded=" << r.expanded << '\n';
  } else {
    std::cout << to_string(r.status) << " expanded=" << r.expanded << '\n';
  }
  return r.distance ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Block-interchange genome halving"};
  app.require_subcommand(1);

  std::string genome_path, scenario_path;
  bool as_json = false, trace = false, dot = false, show_intervals = false, no_canonical = false;
  std::size_t markers = 0;
  std::uint64_t seed = 0;
  std::size_t shuffles = 0;
  std::string model = "bi";
  OracleConfig ocfg;

  auto* distance = app.add_subcommand("distance", "Print n, C and the DCJ and BI halving distances");
  distance->add_option("genome", genome_path, "Genome file ('-' for stdin)")->required();
  distance->add_flag("--json", as_json, "JSON output");

  auto* halve_cmd = app.add_subcommand("halve", "Print an optimal BI halving scenario");
  halve_cmd->add_option("genome", genome_path, "Genome file ('-' for stdin)")->required();
  halve_cmd->add_flag("--trace", trace, "Annotate each round with the reduced genome and intervals");
  halve_cmd->add_flag("--json", as_json, "JSON output");

  auto* verify = app.add_subcommand("verify", "Replay a scenario and certify tandem result and optimality");
  verify->add_option("genome", genome_path, "Genome file")->required();
  verify->add_option("scenario", scenario_path, "Scenario file ('-' for stdin)")->required();
  verify->add_flag("--json", as_json, "JSON output");

  auto* gen = app.add_subcommand("gen", "Generate a random duplicated genome");
  gen->add_option("--markers", markers, "Distinct markers")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "RNG seed");
  auto* shuffle_opt = gen->add_option("--shuffles", shuffles, "Scramble a tandem genome with this many BIs");

  auto* graph = app.add_subcommand("graph", "Natural graph components, DOT rendering, interval dump");
  graph->add_option("genome", genome_path, "Genome file ('-' for stdin)")->required();
  graph->add_flag("--dot", dot, "Graphviz DOT output");
  graph->add_flag("--intervals", show_intervals, "List the interval of every adjacency");
  graph->add_flag("--json", as_json, "JSON output");

  auto* oracle = app.add_subcommand("oracle", "Breadth-first search distance (small genomes)");
  oracle->add_option("genome", genome_path, "Genome file ('-' for stdin)")->required();
  oracle->add_option("--max-depth", ocfg.max_depth, "Search depth limit");
  oracle->add_option("--budget", ocfg.node_budget, "Expanded-state budget");
  oracle->add_option("--model", model, "bi or dcj")->check(CLI::IsMember({"bi", "dcj"}));
  oracle->add_flag("--no-canonical", no_canonical, "Do not merge states differing by copy labels");
  oracle->add_flag("--json", as_json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*distance) return cmd_distance(genome_path, as_json);
    if (*halve_cmd) return cmd_halve(genome_path, trace, as_json);
    if (*verify) return cmd_verify(genome_path, scenario_path, as_json);
    if (*gen)
      return cmd_gen(markers, seed, shuffle_opt->count() ? std::optional{shuffles} : std::nullopt);
    if (*graph) return cmd_graph(genome_path, dot, show_intervals, as_json);
    if (*oracle) {
      ocfg.canonicalize = !no_canonical;
      return cmd_oracle(genome_path, model, ocfg, as_json);
    }
  } catch (const bihalve::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
