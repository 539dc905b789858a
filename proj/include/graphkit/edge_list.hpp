#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "graphkit/adj_list_graph.hpp"
#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"

namespace graphkit {

/// A graph loaded from the edge-list text format, together with the edge
/// weights the file carried.
///
/// Format: line 1 is `n m directed|undirected`; then m lines `u v [weight]`
/// with 0-based indices and a nonnegative decimal weight defaulting to 1.
/// Undirected input materializes each line as two directed edges (both with
/// the line's weight); the twin_id of both halves is the line number, which
/// doubles as the undirected edge identity.
struct loaded_graph {
  adj_list_graph graph;
  edge_map<adj_list_graph, double> weight;
  edge_map<adj_list_graph, std::uint32_t> twin_id;
  std::vector<adj_list_graph::node_handle> nodes;  // index -> handle
  bool directed = true;
};

inline loaded_graph read_edge_list(std::istream& in) {
  loaded_graph out;
  std::string line;
  if (!std::getline(in, line)) throw input_error("edge list: empty input");
  std::istringstream header(line);
  long long n = -1, m = -1;
  std::string mode;
  if (!(header >> n >> m >> mode) || n < 0 || m < 0)
    throw input_error("edge list: bad header, expected `n m directed|undirected`");
  if (mode != "directed" && mode != "undirected")
    throw input_error("edge list: mode must be `directed` or `undirected`");
  out.directed = (mode == "directed");

  out.nodes.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out.nodes.push_back(out.graph.insert_node());

  std::vector<double> weights;
  std::vector<std::uint32_t> twins;
  for (long long i = 0; i < m; ++i) {
    if (!std::getline(in, line)) throw input_error("edge list: fewer edge lines than m");
    std::istringstream es(line);
    long long u = -1, v = -1;
    double w = 1.0;
    if (!(es >> u >> v)) throw input_error("edge list: bad edge line " + std::to_string(i + 2));
    if (!(es >> w)) w = 1.0;
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("edge list: node index out of range on line " + std::to_string(i + 2));
    if (w < 0) throw input_error("edge list: negative weight on line " + std::to_string(i + 2));
    out.graph.insert_edge(out.nodes[u], out.nodes[v]);
    weights.push_back(w);
    twins.push_back(static_cast<std::uint32_t>(i));
    if (!out.directed) {
      out.graph.insert_edge(out.nodes[v], out.nodes[u]);
      weights.push_back(w);
      twins.push_back(static_cast<std::uint32_t>(i));
    }
  }

  out.weight = edge_map<adj_list_graph, double>(out.graph, 1.0);
  out.twin_id = edge_map<adj_list_graph, std::uint32_t>(out.graph, 0);
  std::size_t k = 0;
  for (auto e = out.graph.first_edge(); !adj_list_graph::is_null(e); e = out.graph.advance_edge(e), ++k) {
    out.weight[e] = weights[k];
    out.twin_id[e] = twins[k];
  }
  return out;
}

inline void write_edge_list(std::ostream& os, std::size_t n,
                            const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                            bool directed = true) {
  os << n << ' ' << edges.size() << ' ' << (directed ? "directed" : "undirected") << '\n';
  for (auto [u, v] : edges) os << u << ' ' << v << '\n';
}

}  // namespace graphkit
