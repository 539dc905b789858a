#pragma once

#include <cstdint>
#include <vector>

#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"

namespace graphkit {

/// Read-only backend in compressed-sparse-row layout.
///
/// Nodes are dense indices 0..n-1; the edge array is grouped by source node
/// so each node owns the interval [out_off[v], out_off[v+1]) of edge slots.
/// sigma_E is the grouped order itself. An in-direction index is built at
/// construction so the backward-adjacency iterators work too.
class compact_graph {
public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  struct node_handle {
    std::uint32_t idx = npos;
    friend bool operator==(node_handle, node_handle) = default;
  };
  struct edge_handle {
    std::uint32_t idx = npos;
    friend bool operator==(edge_handle, edge_handle) = default;
  };

  static constexpr node_handle null_node() { return {}; }
  static constexpr edge_handle null_edge() { return {}; }
  static constexpr bool is_null(node_handle v) { return v.idx == npos; }
  static constexpr bool is_null(edge_handle e) { return e.idx == npos; }

  compact_graph() : out_off_(1, 0), in_off_(1, 0) {}

  /// Builds the CSR image of any kernel: same node order, same per-node
  /// out-edge order, nodes re-indexed densely along sigma_V.
  template <graph_kernel G>
  static compact_graph from(const G& g) {
    compact_graph c;
    std::size_t n = g.node_count();
    std::vector<std::uint32_t> dense(g.node_capacity(), npos);
    std::uint32_t next_id = 0;
    for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v))
      dense[g.node_index(v)] = next_id++;
    c.out_off_.assign(n + 1, 0);
    for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v)) {
      std::uint32_t id = dense[g.node_index(v)];
      for (auto e = g.first_out_edge(v); !G::is_null(e); e = g.advance_out(e)) {
        c.src_.push_back(id);
        c.dst_.push_back(dense[g.node_index(g.target(e))]);
      }
      c.out_off_[id + 1] = static_cast<std::uint32_t>(c.src_.size());
    }
    c.build_in_index(n);
    return c;
  }

  /// Builds directly from a dense edge list, preserving its order per node.
  static compact_graph from_edges(std::size_t n,
                                  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges) {
    compact_graph c;
    c.out_off_.assign(n + 1, 0);
    for (auto [u, v] : edges) c.out_off_[u + 1]++;
    for (std::size_t i = 0; i < n; ++i) c.out_off_[i + 1] += c.out_off_[i];
    c.src_.resize(edges.size());
    c.dst_.resize(edges.size());
    std::vector<std::uint32_t> cursor(c.out_off_.begin(), c.out_off_.end() - 1);
    for (auto [u, v] : edges) {
      std::uint32_t pos = cursor[u]++;
      c.src_[pos] = u;
      c.dst_[pos] = v;
    }
    c.build_in_index(n);
    return c;
  }

  std::size_t node_count() const { return out_off_.size() - 1; }
  std::size_t edge_count() const { return src_.size(); }
  static constexpr bool is_mutable() { return false; }

  bool contains(node_handle v) const { return v.idx < node_count(); }
  bool contains(edge_handle e) const { return e.idx < edge_count(); }

  node_handle first_node() const { return node_count() ? node_handle{0} : null_node(); }
  node_handle advance_node(node_handle v) const {
    if (is_null(v) || v.idx + 1 >= node_count()) return null_node();
    return {v.idx + 1};
  }
  edge_handle first_edge() const { return edge_count() ? edge_handle{0} : null_edge(); }
  edge_handle advance_edge(edge_handle e) const {
    if (is_null(e) || e.idx + 1 >= edge_count()) return null_edge();
    return {e.idx + 1};
  }
  edge_handle first_out_edge(node_handle v) const {
    if (is_null(v)) return null_edge();
    check(v);
    return out_off_[v.idx] < out_off_[v.idx + 1] ? edge_handle{out_off_[v.idx]} : null_edge();
  }
  edge_handle advance_out(edge_handle e) const {
    if (is_null(e)) return null_edge();
    check(e);
    std::uint32_t v = src_[e.idx];
    return e.idx + 1 < out_off_[v + 1] ? edge_handle{e.idx + 1} : null_edge();
  }
  edge_handle first_in_edge(node_handle v) const {
    if (is_null(v)) return null_edge();
    check(v);
    return in_off_[v.idx] < in_off_[v.idx + 1] ? edge_handle{in_edges_[in_off_[v.idx]]}
                                               : null_edge();
  }
  edge_handle advance_in(edge_handle e) const {
    if (is_null(e)) return null_edge();
    check(e);
    std::uint32_t v = dst_[e.idx];
    std::uint32_t p = in_pos_[e.idx];
    return p + 1 < in_off_[v + 1] ? edge_handle{in_edges_[p + 1]} : null_edge();
  }
  node_handle source(edge_handle e) const {
    if (is_null(e)) return null_node();
    check(e);
    return {src_[e.idx]};
  }
  node_handle target(edge_handle e) const {
    if (is_null(e)) return null_node();
    check(e);
    return {dst_[e.idx]};
  }

  std::size_t node_index(node_handle v) const { return v.idx; }
  std::size_t edge_index(edge_handle e) const { return e.idx; }
  std::size_t node_capacity() const { return node_count(); }
  std::size_t edge_capacity() const { return edge_count(); }

  std::size_t out_degree(node_handle v) const {
    check(v);
    return out_off_[v.idx + 1] - out_off_[v.idx];
  }
  std::size_t allocated_edge_records() const { return src_.size(); }

private:
  void check(node_handle v) const {
    if (!contains(v)) throw usage_error("compact_graph: invalid node handle");
  }
  void check(edge_handle e) const {
    if (!contains(e)) throw usage_error("compact_graph: invalid edge handle");
  }

  void build_in_index(std::size_t n) {
    in_off_.assign(n + 1, 0);
    for (std::uint32_t d : dst_) in_off_[d + 1]++;
    for (std::size_t i = 0; i < n; ++i) in_off_[i + 1] += in_off_[i];
    in_edges_.resize(dst_.size());
    in_pos_.resize(dst_.size());
    std::vector<std::uint32_t> cursor(in_off_.begin(), in_off_.end() - 1);
    for (std::uint32_t e = 0; e < dst_.size(); ++e) {
      std::uint32_t pos = cursor[dst_[e]]++;
      in_edges_[pos] = e;
      in_pos_[e] = pos;
    }
  }

  std::vector<std::uint32_t> out_off_;
  std::vector<std::uint32_t> src_, dst_;
  std::vector<std::uint32_t> in_off_, in_edges_, in_pos_;
};

/// Freezes any finite kernel into its compact image.
template <graph_kernel G>
compact_graph compact_from(const G& g) {
  return compact_graph::from(g);
}

}  // namespace graphkit
