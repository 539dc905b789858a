#pragma once

// Overhead study: generic stepper implementations vs the hand-specialized
// baseline loops, on the same random graphs. Results are verified identical
// before anything is timed; a mismatch aborts the report.

#include <chrono>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "baselines.hpp"
#include "graphkit/graphkit.hpp"

namespace bench {

struct row {
  std::string algo;
  std::string backend;
  std::size_t n = 0;
  std::size_t m = 0;
  long long generic_ns = 0;
  long long baseline_ns = 0;
  double overhead_pct = 0;
  bool equal = false;
};

inline std::ostream& operator<<(std::ostream& os, const row& r) {
  return os << r.algo << ',' << r.backend << ',' << r.n << ',' << r.m << ',' << r.generic_ns << ','
            << r.baseline_ns << ',' << r.overhead_pct << ',' << (r.equal ? "true" : "false");
}

namespace detail {

using graphkit::adj_list_graph;
using graphkit::compact_graph;

struct instance {
  adj_list_graph adj;
  std::vector<adj_list_graph::node_handle> nodes;
  compact_graph compact;
  std::vector<long long> compact_w;  // by compact edge index
  baseline::flat_graph flat;
  std::vector<long long> adj_w;  // by adjlist edge index
  std::size_t n = 0, m = 0;
};

inline instance make_instance(std::size_t n, std::size_t m, std::uint64_t seed) {
  instance ins;
  ins.n = n;
  ins.m = m;
  auto edges = graphkit::random_edges(n, m, seed);
  std::mt19937_64 rng(seed ^ 0x5bd1e995u);
  std::vector<long long> weights;
  weights.reserve(m);
  for (std::size_t i = 0; i < m; ++i)
    weights.push_back(1 + static_cast<long long>(graphkit::uniform_below(rng, 20)));

  for (std::size_t i = 0; i < n; ++i) ins.nodes.push_back(ins.adj.insert_node());
  ins.adj_w.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    auto e = ins.adj.insert_edge(ins.nodes[edges[i].first], ins.nodes[edges[i].second]);
    ins.adj_w[ins.adj.edge_index(e)] = weights[i];
  }
  ins.compact = graphkit::compact_from(ins.adj);
  // weights in conversion (grouped) order
  ins.compact_w.reserve(m);
  for (auto v = ins.adj.first_node(); !adj_list_graph::is_null(v); v = ins.adj.advance_node(v))
    for (auto e = ins.adj.first_out_edge(v); !adj_list_graph::is_null(e); e = ins.adj.advance_out(e))
      ins.compact_w.push_back(ins.adj_w[ins.adj.edge_index(e)]);
  ins.flat = baseline::flat_graph::from_edges(static_cast<std::uint32_t>(n), edges, weights);
  return ins;
}

template <class F>
long long time_best_of(F&& fn, int reps = 3) {
  long long best = std::numeric_limits<long long>::max();
  for (int i = 0; i < reps; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    auto t1 = std::chrono::steady_clock::now();
    auto ns = static_cast<long long>(
        std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());
    best = std::min(best, ns);
  }
  return best;
}

// generic runs, templated over the backend

template <graphkit::graph_kernel G>
std::vector<std::uint32_t> generic_bfs(const G& g, typename G::node_handle src) {
  using namespace graphkit;
  node_map<G, bool> mark(g, false);
  auto ma = node_da(mark);
  bfs_stepper<out_adj_iterator<G>, decltype(ma)> alg(ma);
  alg.init(out_adj_iterator<G>(g, src));
  std::vector<std::uint32_t> order;
  while (!alg.finished()) {
    order.push_back(static_cast<std::uint32_t>(g.node_index(alg.current().get_node())));
    alg.next();
  }
  return order;
}

template <graphkit::graph_kernel G>
std::vector<std::uint32_t> generic_dfs(const G& g, typename G::node_handle src) {
  using namespace graphkit;
  node_map<G, bool> mark(g, false);
  auto ma = node_da(mark);
  dfs_simple_stepper<out_adj_iterator<G>, decltype(ma)> alg(ma);
  alg.init(out_adj_iterator<G>(g, src));
  std::vector<std::uint32_t> order;
  while (!alg.finished()) {
    order.push_back(static_cast<std::uint32_t>(g.node_index(alg.current().get_node())));
    alg.next();
  }
  return order;
}

template <graphkit::graph_kernel G, class WeightMap>
std::vector<long long> generic_dijkstra(const G& g, const WeightMap& w,
                                        typename G::node_handle src) {
  using namespace graphkit;
  using AI = out_adj_iterator<G>;
  constexpr long long dmax = std::numeric_limits<long long>::max() / 4;
  node_map<G, long long> dist(g, dmax);
  node_map<G, std::int32_t> qi(g, binary_heap_pq<long long, AI>::null_item);
  auto dist_da = with_bounds(node_da(dist), 0LL, dmax);
  auto qi_da = node_da(qi);
  auto len_da = computed_da<edge_facet>(
      [&](typename G::edge_handle e) { return w[g.edge_index(e)]; });
  dijkstra_stepper<G, decltype(dist_da), decltype(len_da), decltype(qi_da)> alg(g, dist_da, len_da,
                                                                                qi_da);
  alg.add_source(src);
  alg.finish_algo();
  std::vector<long long> out(g.node_count());
  std::size_t i = 0;
  for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v), ++i) out[i] = dist[v];
  return out;
}

template <graphkit::graph_kernel G>
std::vector<std::uint32_t> generic_topo(const G& g) {
  using namespace graphkit;
  node_map<G, int> indeg(g, 0);
  auto da = with_bounds(node_da(indeg), 0, 1 << 30);
  compute_in_degrees(g, da);
  topo_sort_stepper<G, decltype(da)> alg(g, da);
  alg.init();
  std::vector<std::uint32_t> order;
  while (!alg.finished()) {
    alg.next();
    order.push_back(static_cast<std::uint32_t>(g.node_index(alg.current())));
  }
  return order;
}

template <graphkit::graph_kernel G>
std::vector<int> generic_scc(const G& g) {
  using namespace graphkit;
  node_map<G, bool> mark(g, false);
  node_map<G, int> comp(g, -1);
  auto ma = node_da(mark);
  auto ca = node_da(comp);
  scc_stepper<G, decltype(ma), decltype(ca)> alg(g, ma, ca);
  alg.init();
  alg.finish_algo();
  std::vector<int> out;
  out.reserve(g.node_count());
  for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v)) out.push_back(comp[v]);
  return out;
}

}  // namespace detail

/// Runs one (algorithm, size) cell: checks generic results against the
/// baseline on both backends, then times all three variants.
inline std::vector<row> run_cell(const std::string& algo, std::size_t n, std::size_t m,
                                 std::uint64_t seed) {
  using namespace detail;
  instance ins = make_instance(n, m, seed);
  auto src_adj = ins.nodes[0];
  graphkit::compact_graph::node_handle src_c{0};

  bool eq_adj = false, eq_c = false;
  long long t_base = 0, t_adj = 0, t_c = 0;

  if (algo == "bfs") {
    auto want = baseline::bfs(ins.flat, 0);
    eq_adj = generic_bfs(ins.adj, src_adj) == want;
    eq_c = generic_bfs(ins.compact, src_c) == want;
    t_base = time_best_of([&] { baseline::bfs(ins.flat, 0); });
    t_adj = time_best_of([&] { generic_bfs(ins.adj, src_adj); });
    t_c = time_best_of([&] { generic_bfs(ins.compact, src_c); });
  } else if (algo == "dfs") {
    auto want = baseline::dfs(ins.flat, 0);
    eq_adj = generic_dfs(ins.adj, src_adj) == want;
    eq_c = generic_dfs(ins.compact, src_c) == want;
    t_base = time_best_of([&] { baseline::dfs(ins.flat, 0); });
    t_adj = time_best_of([&] { generic_dfs(ins.adj, src_adj); });
    t_c = time_best_of([&] { generic_dfs(ins.compact, src_c); });
  } else if (algo == "dijkstra") {
    auto want = baseline::dijkstra(ins.flat, 0);
    eq_adj = generic_dijkstra(ins.adj, ins.adj_w, src_adj) == want;
    eq_c = generic_dijkstra(ins.compact, ins.compact_w, src_c) == want;
    t_base = time_best_of([&] { baseline::dijkstra(ins.flat, 0); });
    t_adj = time_best_of([&] { generic_dijkstra(ins.adj, ins.adj_w, src_adj); });
    t_c = time_best_of([&] { generic_dijkstra(ins.compact, ins.compact_w, src_c); });
  } else if (algo == "topo") {
    auto want = baseline::topo(ins.flat);
    eq_adj = generic_topo(ins.adj) == want;
    eq_c = generic_topo(ins.compact) == want;
    t_base = time_best_of([&] { baseline::topo(ins.flat); });
    t_adj = time_best_of([&] { generic_topo(ins.adj); });
    t_c = time_best_of([&] { generic_topo(ins.compact); });
  } else if (algo == "scc") {
    auto want = baseline::scc(ins.flat);
    eq_adj = generic_scc(ins.adj) == want;
    eq_c = generic_scc(ins.compact) == want;
    t_base = time_best_of([&] { baseline::scc(ins.flat); });
    t_adj = time_best_of([&] { generic_scc(ins.adj); });
    t_c = time_best_of([&] { generic_scc(ins.compact); });
  } else {
    throw graphkit::input_error("bench: unknown algorithm " + algo);
  }

  auto pct = [](long long gen, long long base) {
    return base > 0 ? 100.0 * (static_cast<double>(gen) - static_cast<double>(base)) /
                          static_cast<double>(base)
                    : 0.0;
  };
  std::vector<row> rows;
  rows.push_back({algo, "adjlist", n, m, t_adj, t_base, pct(t_adj, t_base), eq_adj});
  rows.push_back({algo, "compact", n, m, t_c, t_base, pct(t_c, t_base), eq_c});
  return rows;
}

inline const std::vector<std::string>& all_algorithms() {
  static const std::vector<std::string> algos = {"bfs", "dfs", "scc", "topo", "dijkstra"};
  return algos;
}

/// The full grid. Every row's equal flag must be true or the run fails hard
/// before any timing is reported.
inline std::vector<row> run_grid(std::size_t n, const std::vector<std::size_t>& sizes,
                                 std::uint64_t seed) {
  std::vector<row> rows;
  for (const auto& algo : all_algorithms())
    for (std::size_t m : sizes)
      for (const row& r : run_cell(algo, n, m, seed)) {
        if (!r.equal)
          throw graphkit::internal_error("bench: generic/" + r.backend + " result differs from baseline for " +
                                         r.algo);
        rows.push_back(r);
      }
  return rows;
}

}  // namespace bench
