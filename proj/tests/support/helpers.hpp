#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "graphkit/adj_list_graph.hpp"
#include "graphkit/graph_kernel.hpp"

namespace testutil {

using graphkit::adj_list_graph;

struct built_graph {
  adj_list_graph g;
  std::vector<adj_list_graph::node_handle> nodes;
  std::vector<adj_list_graph::edge_handle> edges;
};

inline built_graph build(std::size_t n,
                         const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  built_graph b;
  for (std::size_t i = 0; i < n; ++i) b.nodes.push_back(b.g.insert_node());
  for (auto [u, v] : edges) b.edges.push_back(b.g.insert_edge(b.nodes[u], b.nodes[v]));
  return b;
}

/// Symmetric (undirected) build: each pair becomes two directed edges.
inline built_graph build_sym(std::size_t n,
                             const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
  built_graph b;
  for (std::size_t i = 0; i < n; ++i) b.nodes.push_back(b.g.insert_node());
  for (auto [u, v] : edges) {
    b.edges.push_back(b.g.insert_edge(b.nodes[u], b.nodes[v]));
    b.edges.push_back(b.g.insert_edge(b.nodes[v], b.nodes[u]));
  }
  return b;
}

/// The six-node sample graph used throughout the search tables:
/// a=(0,1) b=(4,0) c=(1,2) d=(1,3) e=(3,4) f=(4,5), with node 4's
/// adjacency ordered f before b. Edge letters index into .edges in the
/// order a,b,c,d,e,f.
struct fig_graph : built_graph {
  std::vector<std::string> edge_names;
};

inline fig_graph sample_graph_fig() {
  fig_graph b;
  for (int i = 0; i < 6; ++i) b.nodes.push_back(b.g.insert_node());
  auto a = b.g.insert_edge(b.nodes[0], b.nodes[1]);
  auto c = b.g.insert_edge(b.nodes[1], b.nodes[2]);
  auto d = b.g.insert_edge(b.nodes[1], b.nodes[3]);
  auto e = b.g.insert_edge(b.nodes[3], b.nodes[4]);
  auto f = b.g.insert_edge(b.nodes[4], b.nodes[5]);
  auto bb = b.g.insert_edge(b.nodes[4], b.nodes[0]);
  b.edges = {a, bb, c, d, e, f};
  b.edge_names = {"a", "b", "c", "d", "e", "f"};
  return b;
}

inline std::string edge_letter(const fig_graph& fg, adj_list_graph::edge_handle e) {
  for (std::size_t i = 0; i < fg.edges.size(); ++i)
    if (fg.edges[i] == e) return fg.edge_names[i];
  return "?";
}

}  // namespace testutil
