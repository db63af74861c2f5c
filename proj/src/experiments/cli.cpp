#include "motifspectra/experiments/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "motifspectra/errors.hpp"
#include "motifspectra/evaluation.hpp"
#include "motifspectra/experiments/config.hpp"
#include "motifspectra/experiments/dataset.hpp"
#include "motifspectra/experiments/scenarios.hpp"
#include "motifspectra/experiments/table.hpp"
#include "motifspectra/generators.hpp"
#include "motifspectra/rng.hpp"
#include "motifspectra/spectral.hpp"

namespace motifspectra::experiments {

namespace {

struct GenerateArgs {
  std::string model = "supsbm";
  std::size_t n = 0;
  std::size_t k = 2;
  double a_e = 0, b_e = 0, a_t = 0, b_t = 0;
  std::uint64_t seed = 0;
  std::string out;
  std::string labels_out;
  std::string format = "csv";
};

struct ClusterArgs {
  std::string edges;
  std::string labels;
  std::size_t k = 0;
  std::string method = "hospA";
  double weight = 1.0;
  bool no_row_normalize = false;
  std::optional<double> tau;
  std::size_t restarts = 20;
  std::uint64_t seed = 0;
  bool mutual_only = false;
  bool largest_component = false;
  std::string out;
};

struct EvaluateArgs {
  std::string truth;
  std::string est;
};

struct ExperimentArgs {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> trials;
  std::string out;
  std::string format;
};

void run_generate(const GenerateArgs& a) {
  BlockParams p{a.n, a.k, a.a_e, a.b_e, a.a_t, a.b_t};
  p.validate();
  const auto truth = gen_balanced_assignment(a.n, a.k);
  std::optional<SuperimposedGraph> g;
  if (a.model == "supsbm") {
    g = gen_supsbm(p, truth, a.seed);
  } else if (a.model == "sbm") {
    g = gen_sbm(p, truth, a.seed);
  } else {
    g = gen_hypergraph_3uniform(p, truth, a.seed);
  }
  const auto fmt = parse_format(a.format);
  std::ofstream out(a.out);
  if (!out) throw std::runtime_error("cannot open '" + a.out + "' for writing");
  if (fmt == OutputFormat::json) {
    nlohmann::ordered_json j;
    j["model"] = a.model;
    j["n"] = a.n;
    j["k"] = a.k;
    j["a_e"] = a.a_e;
    j["b_e"] = a.b_e;
    j["a_t"] = a.a_t;
    j["b_t"] = a.b_t;
    j["seed"] = a.seed;
    j["labels"] = std::vector<int>(truth.labels().begin(), truth.labels().end());
    j["dyadic_edges"] = std::vector<VertexPair>(g->dyadic_edges().begin(), g->dyadic_edges().end());
    j["hyperedges"] = std::vector<VertexTriple>(g->hyperedges().begin(), g->hyperedges().end());
    out << j.dump() << '\n';
  } else {
    // The observed simple graph, which is what `cluster` reads back.
    out << "# model=" << a.model << " n=" << a.n << " k=" << a.k << " a_e=" << format_double(a.a_e)
        << " b_e=" << format_double(a.b_e) << " a_t=" << format_double(a.a_t) << " b_t=" << format_double(a.b_t)
        << " seed=" << a.seed << '\n';
    const auto n = g->num_vertices();
    for (Vertex i = 0; i < n; ++i)
      for (Vertex j = i + 1; j < n; ++j)
        if (g->multiplicity(i, j) > 0) out << i << ' ' << j << '\n';
  }
  if (!out) throw std::runtime_error("failed writing '" + a.out + "'");
  if (!a.labels_out.empty()) write_label_file(a.labels_out, truth);
}

void run_cluster(const ClusterArgs& a) {
  IngestOptions io;
  io.symmetrize = !a.mutual_only;
  io.largest_component = a.largest_component;
  const auto ds = ingest_edge_list(a.edges, a.labels, io);
  std::size_t k = a.k;
  if (k == 0) {
    if (!ds.ground_truth) throw InvalidParams("cluster: give --k or a --labels file");
    k = std::size_t(ds.ground_truth->k());
  }
  auto method = ClusterMethod::named(a.method);
  method.weight = a.weight;
  method.row_normalize = !a.no_row_normalize;
  ClusterOptions opts;
  opts.restarts = a.restarts;
  opts.tau = a.tau;
  const auto est = cluster(ds.graph(), method, k, derive_seed(a.seed, "kmeans"), opts);
  if (!a.out.empty()) write_label_file(a.out, est, ds.original_ids);
  std::cout << "n=" << ds.n << " edges=" << ds.edges.size() << " k=" << k << " method=" << a.method;
  if (ds.ground_truth) {
    std::cout << " misclustered=" << misclustered_count(*ds.ground_truth, est)
              << " R=" << format_double(misclustering_rate(*ds.ground_truth, est));
  }
  std::cout << '\n';
}

void run_evaluate(const EvaluateArgs& a) {
  const auto truth = read_label_file(a.truth);
  const auto est = read_label_file(a.est);
  const double r = misclustering_rate(truth, est);
  std::cout << "R=" << format_double(r) << " misclustered=" << misclustered_count(truth, est) << '\n';
}

void run_experiment(const ExperimentArgs& a) {
  auto config = load_config(a.config);
  if (a.seed) config.master_seed = *a.seed;
  if (a.trials) {
    if (*a.trials < 1) throw InvalidParams("--trials must be at least 1");
    config.trials = *a.trials;
  }
  // A config's output_path is relative to the config file, --out to the working directory.
  if (!a.out.empty()) {
    config.output_path = a.out;
  } else if (!config.output_path.empty()) {
    config.output_path = resolve_path(config, config.output_path);
  }
  if (!a.format.empty()) config.format = parse_format(a.format);
  const auto table = run_scenario(config);
  if (config.output_path.empty()) {
    if (config.format == OutputFormat::csv) {
      table.write_csv(std::cout);
    } else {
      table.write_json(std::cout);
    }
  } else {
    write_table(table, config.output_path, config.format);
    std::cerr << config.scenario << ": " << table.rows().size() << " rows written to " << config.output_path
              << '\n';
  }
}

}  // namespace

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"Spectral community detection with edge and triangle motifs"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Sample a graph from a block model");
  g->add_option("--model", gen.model, "supsbm, sbm or hypergraph")
      ->check(CLI::IsMember({"supsbm", "sbm", "hypergraph"}));
  g->add_option("--n", gen.n, "Number of vertices")->required();
  g->add_option("--k", gen.k, "Number of communities");
  g->add_option("--a-e", gen.a_e, "Within-block edge rate (probability a_e/n)");
  g->add_option("--b-e", gen.b_e, "Cross-block edge rate");
  g->add_option("--a-t", gen.a_t, "Within-block hyperedge rate");
  g->add_option("--b-t", gen.b_t, "Mixed hyperedge rate");
  g->add_option("--seed", gen.seed, "Random seed");
  g->add_option("--out", gen.out, "Output file")->required();
  g->add_option("--labels-out", gen.labels_out, "Also write the planted labels here");
  g->add_option("--format", gen.format, "csv (edge list) or json")->check(CLI::IsMember({"csv", "json"}));

  ClusterArgs cl;
  auto* c = app.add_subcommand("cluster", "Spectral clustering of an edge list");
  c->add_option("--edges", cl.edges, "Edge list file")->required();
  c->add_option("--labels", cl.labels, "Ground-truth labels; enables error reporting");
  c->add_option("--k", cl.k, "Number of clusters (default: number of true labels)");
  c->add_option("--method", cl.method, "spA, spL, rspL, hospA, hospL or horspL");
  c->add_option("--weight", cl.weight, "Triangle weight for the ho* methods");
  c->add_flag("--no-row-normalize", cl.no_row_normalize, "Cluster raw eigenvector rows");
  c->add_option("--tau", cl.tau, "Regularizer for rspL/horspL (default: mean degree)");
  c->add_option("--restarts", cl.restarts, "k-means restarts")->check(CLI::PositiveNumber);
  c->add_option("--seed", cl.seed, "Random seed");
  c->add_flag("--mutual-only", cl.mutual_only, "Keep only pairs listed in both directions");
  c->add_flag("--largest-component", cl.largest_component, "Restrict to the largest connected component");
  c->add_option("--out", cl.out, "Write estimated labels here");

  EvaluateArgs ev;
  auto* e = app.add_subcommand("evaluate", "Misclustering rate of estimated labels");
  e->add_option("--truth", ev.truth, "Ground-truth label file")->required();
  e->add_option("--est", ev.est, "Estimated label file")->required();

  ExperimentArgs ex;
  auto* x = app.add_subcommand("experiment", "Run a scenario config");
  x->add_option("--config", ex.config, "Scenario config (JSON)")->required();
  x->add_option("--seed", ex.seed, "Override master_seed");
  x->add_option("--trials", ex.trials, "Override trials");
  x->add_option("--out", ex.out, "Override output_path");
  x->add_option("--format", ex.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*g) run_generate(gen);
    if (*c) run_cluster(cl);
    if (*e) run_evaluate(ev);
    if (*x) run_experiment(ex);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 1;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
  return 0;
}

}  // namespace motifspectra::experiments
