#pragma once

#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"

namespace graphkit {

/// Linear iterator over the node set of a kernel, in sigma_V order.
/// Cheap value object; copies are independent after copying.
template <graph_kernel G>
class node_iterator {
public:
  using graph_type = G;
  using node_handle = typename G::node_handle;

  node_iterator() = default;
  explicit node_iterator(const G& g) : g_(&g), v_(g.first_node()) {}
  node_iterator(const G& g, node_handle v) : g_(&g), v_(v) {}

  void init(const G& g) {
    g_ = &g;
    v_ = g.first_node();
  }
  void init(const G& g, node_handle v) {
    g_ = &g;
    v_ = v;
  }
  void update(node_handle v) { v_ = v; }
  void reset() { v_ = g_->first_node(); }
  void make_invalid() { v_ = G::null_node(); }

  bool valid() const { return !G::is_null(v_); }
  bool eol() const { return !valid(); }
  node_handle get_node() const { return v_; }
  const G& get_graph() const { return *g_; }

  node_iterator& operator++() {
    require_valid();
    v_ = g_->advance_node(v_);
    return *this;
  }

  friend bool operator==(const node_iterator& a, const node_iterator& b) {
    return a.g_ == b.g_ && a.v_ == b.v_;
  }

private:
  void require_valid() const {
    if (!valid()) throw usage_error("node_iterator: succ on invalid iterator");
  }
  const G* g_ = nullptr;
  node_handle v_ = G::null_node();
};

/// Linear iterator over the edge set, in sigma_E order.
template <graph_kernel G>
class edge_iterator {
public:
  using graph_type = G;
  using edge_handle = typename G::edge_handle;

  edge_iterator() = default;
  explicit edge_iterator(const G& g) : g_(&g), e_(g.first_edge()) {}
  edge_iterator(const G& g, edge_handle e) : g_(&g), e_(e) {}

  void init(const G& g) {
    g_ = &g;
    e_ = g.first_edge();
  }
  void init(const G& g, edge_handle e) {
    g_ = &g;
    e_ = e;
  }
  void update(edge_handle e) { e_ = e; }
  void reset() { e_ = g_->first_edge(); }
  void make_invalid() { e_ = G::null_edge(); }

  bool valid() const { return !G::is_null(e_); }
  bool eol() const { return !valid(); }
  edge_handle get_edge() const { return e_; }
  const G& get_graph() const { return *g_; }

  edge_iterator& operator++() {
    require_valid();
    e_ = g_->advance_edge(e_);
    return *this;
  }

  friend bool operator==(const edge_iterator& a, const edge_iterator& b) {
    return a.g_ == b.g_ && a.e_ == b.e_;
  }

private:
  void require_valid() const {
    if (!valid()) throw usage_error("edge_iterator: succ on invalid iterator");
  }
  const G* g_ = nullptr;
  edge_handle e_ = G::null_edge();
};

/// Adjacency iterator over the edges leaving a fixed node.
///
/// Invariant: whenever the marked edge is valid, its source is the fixed
/// node. A (node, edge) creation that violates the invariant yields an
/// iterator with an invalid edge part, not an exception; has_node() stays
/// true in that case, which is how a node with an empty adjacency list is
/// represented.
template <graph_kernel G>
class out_adj_iterator {
public:
  using graph_type = G;
  using node_handle = typename G::node_handle;
  using edge_handle = typename G::edge_handle;

  out_adj_iterator() = default;
  explicit out_adj_iterator(const G& g) : g_(&g) { assign(g.first_node()); }
  out_adj_iterator(const G& g, node_handle v) : g_(&g) { assign(v); }
  out_adj_iterator(const G& g, node_handle v, edge_handle e) : g_(&g) { assign(v, e); }

  void init(const G& g) {
    g_ = &g;
    assign(g.first_node());
  }
  void init(const G& g, node_handle v) {
    g_ = &g;
    assign(v);
  }
  void init(const G& g, node_handle v, edge_handle e) {
    g_ = &g;
    assign(v, e);
  }
  void update(node_handle v) { assign(v); }
  void update(node_handle v, edge_handle e) { assign(v, e); }
  void update(edge_handle e) { assign(v_, e); }
  void reset() { e_ = g_->first_out_edge(v_); }
  void make_invalid() { e_ = G::null_edge(); }

  bool valid() const { return !G::is_null(e_); }
  bool eol() const { return !valid(); }
  bool has_node() const { return !G::is_null(v_); }
  node_handle get_node() const { return v_; }
  edge_handle get_edge() const { return e_; }
  const G& get_graph() const { return *g_; }

  out_adj_iterator& operator++() {
    require_valid();
    e_ = g_->advance_out(e_);
    return *this;
  }

  /// A fresh iterator fixed at the current adjacent node, positioned at that
  /// node's first leaving edge. The receiver is untouched.
  out_adj_iterator curr_adj() const {
    require_valid();
    return out_adj_iterator(*g_, g_->target(e_));
  }

  friend bool operator==(const out_adj_iterator& a, const out_adj_iterator& b) {
    return a.g_ == b.g_ && a.v_ == b.v_ && a.e_ == b.e_;
  }

private:
  void assign(node_handle v) {
    v_ = v;
    e_ = G::is_null(v) ? G::null_edge() : g_->first_out_edge(v);
  }
  void assign(node_handle v, edge_handle e) {
    v_ = v;
    e_ = (!G::is_null(e) && g_->source(e) == v) ? e : G::null_edge();
  }
  void require_valid() const {
    if (!valid()) throw usage_error("out_adj_iterator: operation requires a valid iterator");
  }
  const G* g_ = nullptr;
  node_handle v_ = G::null_node();
  edge_handle e_ = G::null_edge();
};

/// Adjacency iterator over the edges entering a fixed node.
/// Invariant: a valid marked edge has the fixed node as its target.
template <graph_kernel G>
class in_adj_iterator {
public:
  using graph_type = G;
  using node_handle = typename G::node_handle;
  using edge_handle = typename G::edge_handle;

  in_adj_iterator() = default;
  explicit in_adj_iterator(const G& g) : g_(&g) { assign(g.first_node()); }
  in_adj_iterator(const G& g, node_handle v) : g_(&g) { assign(v); }
  in_adj_iterator(const G& g, node_handle v, edge_handle e) : g_(&g) { assign(v, e); }

  void init(const G& g) {
    g_ = &g;
    assign(g.first_node());
  }
  void init(const G& g, node_handle v) {
    g_ = &g;
    assign(v);
  }
  void init(const G& g, node_handle v, edge_handle e) {
    g_ = &g;
    assign(v, e);
  }
  void update(node_handle v) { assign(v); }
  void update(node_handle v, edge_handle e) { assign(v, e); }
  void update(edge_handle e) { assign(v_, e); }
  void reset() { e_ = g_->first_in_edge(v_); }
  void make_invalid() { e_ = G::null_edge(); }

  bool valid() const { return !G::is_null(e_); }
  bool eol() const { return !valid(); }
  bool has_node() const { return !G::is_null(v_); }
  node_handle get_node() const { return v_; }
  edge_handle get_edge() const { return e_; }
  const G& get_graph() const { return *g_; }

  in_adj_iterator& operator++() {
    require_valid();
    e_ = g_->advance_in(e_);
    return *this;
  }

  /// Follows the edge backwards: new fixed node is the source of the marked
  /// edge, positioned at its first entering edge.
  in_adj_iterator curr_adj() const {
    require_valid();
    return in_adj_iterator(*g_, g_->source(e_));
  }

  friend bool operator==(const in_adj_iterator& a, const in_adj_iterator& b) {
    return a.g_ == b.g_ && a.v_ == b.v_ && a.e_ == b.e_;
  }

private:
  void assign(node_handle v) {
    v_ = v;
    e_ = G::is_null(v) ? G::null_edge() : g_->first_in_edge(v);
  }
  void assign(node_handle v, edge_handle e) {
    v_ = v;
    e_ = (!G::is_null(e) && g_->target(e) == v) ? e : G::null_edge();
  }
  void require_valid() const {
    if (!valid()) throw usage_error("in_adj_iterator: operation requires a valid iterator");
  }
  const G* g_ = nullptr;
  node_handle v_ = G::null_node();
  edge_handle e_ = G::null_edge();
};

}  // namespace graphkit
