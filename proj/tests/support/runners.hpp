#pragma once

// Thin drivers that run the steppers to completion and collect plain-index
// results, shared by the unit and acceptance suites.

#include <cstdint>
#include <vector>

#include "graphkit/graphkit.hpp"

namespace testutil {

template <graphkit::graph_kernel G>
std::vector<std::uint32_t> run_bfs_order(const G& g, typename G::node_handle src) {
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

/// The edges the popped iterator looked at, in order, across the whole run.
template <graphkit::graph_kernel G>
std::vector<std::pair<std::uint32_t, std::uint32_t>> run_bfs_inspected(
    const G& g, typename G::node_handle src) {
  using namespace graphkit;
  using AI = out_adj_iterator<G>;
  struct collector : null_search_observer {
    const G* g = nullptr;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    void on_curr_adj(const AI& from, const AI&) {
      edges.emplace_back(static_cast<std::uint32_t>(g->node_index(g->source(from.get_edge()))),
                         static_cast<std::uint32_t>(g->node_index(g->target(from.get_edge()))));
    }
  };
  node_map<G, bool> mark(g, false);
  auto ma = node_da(mark);
  collector obs;
  obs.g = &g;
  bfs_stepper<AI, decltype(ma), collector> alg(ma, obs);
  alg.init(AI(g, src));
  while (!alg.finished()) alg.next();
  return alg.observer().edges;
}

template <graphkit::graph_kernel G>
std::vector<std::uint32_t> run_dfs_order(const G& g, typename G::node_handle src) {
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

template <graphkit::graph_kernel G, class WeightFn>
std::vector<long long> run_dijkstra(const G& g, WeightFn&& weight_of, typename G::node_handle src,
                                    long long unreached = -1) {
  using namespace graphkit;
  using AI = out_adj_iterator<G>;
  constexpr long long dmax = std::numeric_limits<long long>::max() / 4;
  node_map<G, long long> dist(g, dmax);
  node_map<G, std::int32_t> qi(g, binary_heap_pq<long long, AI>::null_item);
  auto dist_da = with_bounds(node_da(dist), 0LL, dmax);
  auto qi_da = node_da(qi);
  auto len_da = computed_da<edge_facet>(weight_of);
  dijkstra_stepper<G, decltype(dist_da), decltype(len_da), decltype(qi_da)> alg(g, dist_da, len_da,
                                                                                qi_da);
  alg.add_source(src);
  alg.finish_algo();
  std::vector<long long> out(g.node_count(), unreached);
  std::size_t i = 0;
  for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v), ++i)
    out[i] = dist[v] == dmax ? unreached : dist[v];
  return out;
}

template <graphkit::graph_kernel G>
std::vector<int> run_scc(const G& g) {
  using namespace graphkit;
  node_map<G, bool> mark(g, false);
  node_map<G, int> comp(g, -1);
  auto ma = node_da(mark);
  auto ca = node_da(comp);
  scc_stepper<G, decltype(ma), decltype(ca)> alg(g, ma, ca);
  alg.init();
  alg.finish_algo();
  std::vector<int> out;
  for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v)) out.push_back(comp[v]);
  return out;
}

struct topo_result {
  std::vector<std::uint32_t> order;
  bool cyclic = false;
};

template <graphkit::graph_kernel G>
topo_result run_topo(const G& g) {
  using namespace graphkit;
  node_map<G, int> indeg(g, 0);
  auto da = with_bounds(node_da(indeg), 0, 1 << 30);
  compute_in_degrees(g, da);
  topo_sort_stepper<G, decltype(da)> alg(g, da);
  alg.init();
  topo_result r;
  while (!alg.finished()) {
    alg.next();
    r.order.push_back(static_cast<std::uint32_t>(g.node_index(alg.current())));
  }
  r.cyclic = alg.cyclic_input();
  return r;
}

}  // namespace testutil
