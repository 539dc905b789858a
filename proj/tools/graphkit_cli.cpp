// graphkit command line front end: load or generate graphs, run the
// algorithms with optional step traces, and benchmark the generic
// implementations against hand-specialized baselines.
//
//   graphkit run   --algo NAME (--input PATH | --n N) [--backend B] [--source K] [--output PATH]
//   graphkit gen   --n N --m M [--seed S] [--output PATH]
//   graphkit trace --algo NAME --input PATH [--source K] [--names PATH] [--output PATH]
//   graphkit bench [--n N] [--m M] [--seed S] [--output PATH]
//
// Exit status: 0 success, 1 input error, 2 internal invariant violation.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "bench.hpp"
#include "graphkit/graphkit.hpp"

using namespace graphkit;

namespace {

struct config {
  std::string command;
  std::string algo;
  std::string input;
  std::string output;
  std::string names;
  std::string backend = "adjlist";
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t seed = 1;
  long long source = 0;
};

std::ostream& open_output(const config& cfg, std::ofstream& file) {
  if (cfg.output.empty()) return std::cout;
  file.open(cfg.output, std::ios::binary);
  if (!file) throw input_error("cannot open output file: " + cfg.output);
  return file;
}

loaded_graph load_input(const config& cfg) {
  std::ifstream in(cfg.input, std::ios::binary);
  if (!in) throw input_error("cannot open input file: " + cfg.input);
  return read_edge_list(in);
}

// ---- generic drivers, shared by every backend ------------------------------

template <graph_kernel G>
void print_bfs(const G& g, typename G::node_handle src, std::ostream& os) {
  node_map<G, bool> mark(g, false);
  auto ma = node_da(mark);
  bfs_stepper<out_adj_iterator<G>, decltype(ma)> alg(ma);
  alg.init(out_adj_iterator<G>(g, src));
  while (!alg.finished()) {
    os << g.node_index(alg.current().get_node()) << '\n';
    alg.next();
  }
}

template <graph_kernel G>
void print_dfs(const G& g, typename G::node_handle src, std::ostream& os) {
  node_map<G, bool> mark(g, false);
  auto ma = node_da(mark);
  dfs_simple_stepper<out_adj_iterator<G>, decltype(ma)> alg(ma);
  alg.init(out_adj_iterator<G>(g, src));
  while (!alg.finished()) {
    os << g.node_index(alg.current().get_node()) << '\n';
    alg.next();
  }
}

template <graph_kernel G, class LenDA>
void print_dijkstra(const G& g, LenDA len, typename G::node_handle src, std::ostream& os) {
  using AI = out_adj_iterator<G>;
  constexpr double dmax = std::numeric_limits<double>::infinity();
  node_map<G, double> dist(g, dmax);
  node_map<G, std::int32_t> qi(g, binary_heap_pq<double, AI>::null_item);
  auto dist_da = with_bounds(node_da(dist), 0.0, dmax);
  auto qi_da = node_da(qi);
  dijkstra_stepper<G, decltype(dist_da), LenDA, decltype(qi_da)> alg(g, dist_da, len, qi_da);
  alg.add_source(src);
  alg.finish_algo();
  for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v)) {
    if (dist[v] == dmax)
      os << "INF" << '\n';
    else
      os << dist[v] << '\n';
  }
}

template <graph_kernel G>
void print_scc(const G& g, std::ostream& os) {
  node_map<G, bool> mark(g, false);
  node_map<G, int> comp(g, -1);
  auto ma = node_da(mark);
  auto ca = node_da(comp);
  scc_stepper<G, decltype(ma), decltype(ca)> alg(g, ma, ca);
  alg.init();
  alg.finish_algo();
  for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v)) os << comp[v] << '\n';
}

template <graph_kernel G>
void print_topo(const G& g, std::ostream& os) {
  node_map<G, int> indeg(g, 0);
  auto da = with_bounds(node_da(indeg), 0, 1 << 30);
  compute_in_degrees(g, da);
  topo_sort_stepper<G, decltype(da)> alg(g, da);
  alg.init();
  std::ostringstream buffered;
  while (!alg.finished()) {
    alg.next();
    buffered << g.node_index(alg.current()) << '\n';
  }
  if (alg.cyclic_input()) throw input_error("topo: input graph is cyclic");
  os << buffered.str();
}

template <graph_kernel G>
typename G::node_handle node_at(const G& g, long long index) {
  long long i = 0;
  for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v), ++i)
    if (i == index) return v;
  throw input_error("source node out of range");
}

template <graph_kernel G, class LenDA>
void run_on_backend(const config& cfg, const G& g, LenDA len, std::ostream& os) {
  auto src = node_at(g, cfg.source);
  if (cfg.algo == "bfs")
    print_bfs(g, src, os);
  else if (cfg.algo == "dfs")
    print_dfs(g, src, os);
  else if (cfg.algo == "dijkstra")
    print_dijkstra(g, len, src, os);
  else if (cfg.algo == "scc")
    print_scc(g, os);
  else if (cfg.algo == "topo")
    print_topo(g, os);
  else
    throw input_error("unknown algorithm: " + cfg.algo);
}

void print_matching(const loaded_graph& lg, std::ostream& os) {
  if (lg.directed)
    throw input_error("matching requires an undirected edge-list input");
  auto m = max_matching(lg.graph, matching_mode::general);
  os << m.cardinality() << '\n';
  for (auto e : m.edges())
    os << lg.graph.node_index(lg.graph.source(e)) << ' ' << lg.graph.node_index(lg.graph.target(e))
       << '\n';
}

int cmd_run(const config& cfg) {
  std::ofstream file;
  std::ostream& os = open_output(cfg, file);

  if (cfg.backend == "complete") {
    if (cfg.n == 0) throw input_error("complete backend needs --n");
    implicit_complete_graph g(static_cast<std::int32_t>(cfg.n));
    auto len = computed_da<edge_facet>([](implicit_complete_graph::edge_handle e) {
      return static_cast<double>(std::abs(e.s - e.t));
    });
    if (cfg.algo == "matching") throw input_error("matching requires an undirected edge-list input");
    run_on_backend(cfg, g, len, os);
    return 0;
  }

  if (cfg.input.empty()) throw input_error("run: --input required for this backend");
  loaded_graph lg = load_input(cfg);
  if (cfg.algo == "matching") {
    print_matching(lg, os);
    return 0;
  }
  if (cfg.backend == "adjlist") {
    auto wmap = lg.weight;
    auto len = computed_da<edge_facet>([wmap](adj_list_graph::edge_handle e) { return wmap[e]; });
    run_on_backend(cfg, lg.graph, len, os);
  } else if (cfg.backend == "compact") {
    compact_graph cg = compact_from(lg.graph);
    std::vector<double> w;
    w.reserve(lg.graph.edge_count());
    for (auto v = lg.graph.first_node(); !adj_list_graph::is_null(v); v = lg.graph.advance_node(v))
      for (auto e = lg.graph.first_out_edge(v); !adj_list_graph::is_null(e);
           e = lg.graph.advance_out(e))
        w.push_back(lg.weight[e]);
    auto len = computed_da<edge_facet>(
        [w = std::move(w), &cg](compact_graph::edge_handle e) { return w[cg.edge_index(e)]; });
    run_on_backend(cfg, cg, len, os);
  } else {
    throw input_error("unknown backend: " + cfg.backend);
  }
  return 0;
}

int cmd_gen(const config& cfg) {
  auto edges = random_edges(cfg.n, cfg.m, cfg.seed);
  std::ofstream file;
  std::ostream& os = open_output(cfg, file);
  write_edge_list(os, cfg.n, edges, /*directed=*/true);
  return 0;
}

std::map<std::size_t, std::string> load_edge_names(const config& cfg, const loaded_graph& lg) {
  // names file: lines `label u v`, matching edges of the input graph
  std::map<std::size_t, std::string> names;
  if (cfg.names.empty()) return names;
  std::ifstream in(cfg.names);
  if (!in) throw input_error("cannot open names file: " + cfg.names);
  std::string label;
  long long u, v;
  while (in >> label >> u >> v) {
    bool found = false;
    for (auto e = lg.graph.first_edge(); !adj_list_graph::is_null(e); e = lg.graph.advance_edge(e)) {
      if (static_cast<long long>(lg.graph.node_index(lg.graph.source(e))) == u &&
          static_cast<long long>(lg.graph.node_index(lg.graph.target(e))) == v) {
        names[lg.graph.edge_index(e)] = label;
        found = true;
        break;
      }
    }
    if (!found) throw input_error("names file labels a missing edge");
  }
  return names;
}

int cmd_trace(const config& cfg) {
  if (cfg.input.empty()) throw input_error("trace: --input required");
  loaded_graph lg = load_input(cfg);
  std::ofstream file;
  std::ostream& os = open_output(cfg, file);
  auto names = load_edge_names(cfg, lg);

  using AI = out_adj_iterator<adj_list_graph>;
  auto node_name = [&](adj_list_graph::node_handle v) {
    return std::to_string(lg.graph.node_index(v));
  };
  auto edge_name = [&, names](adj_list_graph::edge_handle e) {
    auto it = names.find(lg.graph.edge_index(e));
    return it != names.end() ? it->second : std::to_string(lg.graph.edge_index(e));
  };
  auto src = node_at(lg.graph, cfg.source);

  node_map<adj_list_graph, bool> mark(lg.graph, false);
  auto ma = node_da(mark);
  if (cfg.algo == "dfs") {
    search_table_tracer<AI> tracer(os, node_name, edge_name);
    dfs_simple_stepper<AI, decltype(ma), search_table_tracer<AI>> alg(ma, tracer);
    alg.observer().attach_stack(alg);
    alg.init(AI(lg.graph, src));
    alg.finish_algo();
  } else if (cfg.algo == "bfs") {
    search_table_tracer<AI> tracer(os, node_name, edge_name);
    bfs_stepper<AI, decltype(ma), search_table_tracer<AI>> alg(ma, tracer);
    alg.observer().attach_queue(alg);
    alg.init(AI(lg.graph, src));
    alg.finish_algo();
  } else if (cfg.algo == "dijkstra") {
    // one line per next: step, phase tag, current position, queue size
    using ICAI = out_adj_iterator<adj_list_graph>;
    constexpr double dmax = std::numeric_limits<double>::infinity();
    node_map<adj_list_graph, double> dist(lg.graph, dmax);
    node_map<adj_list_graph, std::int32_t> qi(lg.graph,
                                              binary_heap_pq<double, ICAI>::null_item);
    auto dda = with_bounds(node_da(dist), 0.0, dmax);
    auto qda = node_da(qi);
    auto wmap = lg.weight;
    auto len = computed_da<edge_facet>([wmap](adj_list_graph::edge_handle e) { return wmap[e]; });
    dijkstra_stepper<adj_list_graph, decltype(dda), decltype(len), decltype(qda)> alg(
        lg.graph, dda, len, qda);
    alg.add_source(src);
    std::size_t step = 0;
    while (!alg.finished()) {
      bool depth = !alg.current().valid();
      alg.next();
      os << step++ << '\t' << (depth ? "depth" : "breadth") << '\t';
      if (alg.current().valid())
        os << '(' << node_name(alg.current().get_node()) << ','
           << edge_name(alg.current().get_edge()) << ')';
      else
        os << '-';
      os << "\tqueue=" << alg.queue().size() << '\n';
    }
  } else {
    throw input_error("trace supports dfs, bfs and dijkstra");
  }
  return 0;
}

int cmd_bench(const config& cfg) {
  std::size_t n = cfg.n ? cfg.n : 1000;
  std::vector<std::size_t> sizes;
  if (cfg.m)
    sizes.push_back(cfg.m);
  else
    sizes = {10000, 100000, 400000};
  std::ofstream file;
  std::ostream& os = open_output(cfg, file);
  os << "algo,backend,n,m,generic_ns,baseline_ns,overhead_pct,equal\n";
  for (const auto& r : bench::run_grid(n, sizes, cfg.seed)) os << r << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generic graph algorithm toolkit"};
  app.require_subcommand(1);
  config cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--algo", cfg.algo, "algorithm name");
    sub->add_option("--input", cfg.input, "edge-list input path");
    sub->add_option("--output", cfg.output, "output path (default stdout)");
    sub->add_option("--backend", cfg.backend, "adjlist|compact|complete");
    sub->add_option("--source", cfg.source, "source node index");
    sub->add_option("--n", cfg.n, "node count (generator / complete backend)");
    sub->add_option("--m", cfg.m, "edge count (generator)");
    sub->add_option("--seed", cfg.seed, "generator seed");
    sub->add_option("--names", cfg.names, "edge label file for traces (label u v per line)");
  };
  add_common(app.add_subcommand("run", "run an algorithm and print its result"));
  add_common(app.add_subcommand("gen", "generate a random graph"));
  add_common(app.add_subcommand("trace", "run an algorithm emitting a step trace"));
  add_common(app.add_subcommand("bench", "benchmark generic vs baseline implementations"));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) ? 1 : 0;
  }

  try {
    if (app.got_subcommand("run")) return cmd_run(cfg);
    if (app.got_subcommand("gen")) return cmd_gen(cfg);
    if (app.got_subcommand("trace")) return cmd_trace(cfg);
    if (app.got_subcommand("bench")) return cmd_bench(cfg);
    throw input_error("no command");
  } catch (const input_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 2;
  }
}
