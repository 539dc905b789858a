#pragma once

#include <cstdint>

#include "graphkit/errors.hpp"

namespace graphkit {

/// Implicit complete graph on n nodes. Only n is stored; edges are
/// synthesized (source, target) index pairs with the target running over the
/// whole node range, so every node has out-degree n including its self-pair.
/// A self-pair is harmless to shortest paths under the |s-t| metric since
/// its length is zero and it never relaxes anything.
///
/// Memory is independent of m = n^2 and no edge record is ever allocated.
class implicit_complete_graph {
public:
  struct node_handle {
    std::int32_t idx = -1;
    friend bool operator==(node_handle, node_handle) = default;
  };
  struct edge_handle {
    std::int32_t s = -1;
    std::int32_t t = -1;
    friend bool operator==(edge_handle, edge_handle) = default;
  };

  static constexpr node_handle null_node() { return {}; }
  static constexpr edge_handle null_edge() { return {}; }
  static constexpr bool is_null(node_handle v) { return v.idx < 0; }
  static constexpr bool is_null(edge_handle e) { return e.s < 0 || e.t < 0; }

  explicit implicit_complete_graph(std::int32_t n) : n_(n) {
    if (n < 0) throw input_error("implicit_complete_graph: negative node count");
  }

  std::size_t node_count() const { return static_cast<std::size_t>(n_); }
  std::size_t edge_count() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_); }
  static constexpr bool is_mutable() { return false; }

  bool contains(node_handle v) const { return v.idx >= 0 && v.idx < n_; }
  bool contains(edge_handle e) const { return e.s >= 0 && e.s < n_ && e.t >= 0 && e.t < n_; }

  node_handle first_node() const { return n_ > 0 ? node_handle{0} : null_node(); }
  node_handle advance_node(node_handle v) const {
    if (is_null(v) || v.idx + 1 >= n_) return null_node();
    return {v.idx + 1};
  }
  edge_handle first_edge() const { return n_ > 0 ? edge_handle{0, 0} : null_edge(); }
  edge_handle advance_edge(edge_handle e) const {
    if (is_null(e)) return null_edge();
    if (e.t + 1 < n_) return {e.s, e.t + 1};
    if (e.s + 1 < n_) return {e.s + 1, 0};
    return null_edge();
  }
  edge_handle first_out_edge(node_handle v) const {
    if (is_null(v) || n_ == 0) return null_edge();
    return {v.idx, 0};
  }
  edge_handle advance_out(edge_handle e) const {
    if (is_null(e) || e.t + 1 >= n_) return null_edge();
    return {e.s, e.t + 1};
  }
  edge_handle first_in_edge(node_handle v) const {
    if (is_null(v) || n_ == 0) return null_edge();
    return {0, v.idx};
  }
  edge_handle advance_in(edge_handle e) const {
    if (is_null(e) || e.s + 1 >= n_) return null_edge();
    return {e.s + 1, e.t};
  }
  node_handle source(edge_handle e) const { return is_null(e) ? null_node() : node_handle{e.s}; }
  node_handle target(edge_handle e) const { return is_null(e) ? null_node() : node_handle{e.t}; }

  std::size_t node_index(node_handle v) const { return static_cast<std::size_t>(v.idx); }
  std::size_t node_capacity() const { return node_count(); }

  static constexpr std::size_t allocated_edge_records() { return 0; }

private:
  std::int32_t n_;
};

}  // namespace graphkit
