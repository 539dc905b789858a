#pragma once

#include <cstdint>
#include <vector>

#include "graphkit/errors.hpp"

namespace graphkit {

/// Mutable adjacency-list backend.
///
/// Node order sigma_V and edge order sigma_E are insertion order; the
/// per-node orders sigma_out / sigma_in are insertion order of the incident
/// edges. Handles are generation-checked: using a handle after its slot was
/// deleted (or a handle minted by another instance) raises usage_error
/// instead of touching freed storage.
class adj_list_graph {
public:
  static constexpr std::uint32_t npos = 0xffffffffu;

  struct node_handle {
    std::uint32_t slot = npos;
    std::uint32_t gen = 0;
    friend bool operator==(node_handle, node_handle) = default;
  };
  struct edge_handle {
    std::uint32_t slot = npos;
    std::uint32_t gen = 0;
    friend bool operator==(edge_handle, edge_handle) = default;
  };

  static constexpr node_handle null_node() { return {}; }
  static constexpr edge_handle null_edge() { return {}; }
  static constexpr bool is_null(node_handle v) { return v.slot == npos; }
  static constexpr bool is_null(edge_handle e) { return e.slot == npos; }

  adj_list_graph() = default;
  adj_list_graph(std::size_t node_count, bool) = delete;

  std::size_t node_count() const { return n_; }
  std::size_t edge_count() const { return m_; }
  static constexpr bool is_mutable() { return true; }

  bool contains(node_handle v) const {
    return v.slot < nodes_.size() && nodes_[v.slot].alive && nodes_[v.slot].gen == v.gen;
  }
  bool contains(edge_handle e) const {
    return e.slot < edges_.size() && edges_[e.slot].alive && edges_[e.slot].gen == e.gen;
  }

  // --- forward navigation -------------------------------------------------

  node_handle first_node() const { return make_node(node_head_); }
  node_handle advance_node(node_handle v) const {
    if (is_null(v)) return null_node();
    return make_node(node_rec(v).next);
  }
  edge_handle first_edge() const { return make_edge(edge_head_); }
  edge_handle advance_edge(edge_handle e) const {
    if (is_null(e)) return null_edge();
    return make_edge(edge_rec(e).next);
  }
  edge_handle first_out_edge(node_handle v) const {
    if (is_null(v)) return null_edge();
    return make_edge(node_rec(v).first_out);
  }
  edge_handle advance_out(edge_handle e) const {
    if (is_null(e)) return null_edge();
    return make_edge(edge_rec(e).next_out);
  }
  edge_handle first_in_edge(node_handle v) const {
    if (is_null(v)) return null_edge();
    return make_edge(node_rec(v).first_in);
  }
  edge_handle advance_in(edge_handle e) const {
    if (is_null(e)) return null_edge();
    return make_edge(edge_rec(e).next_in);
  }
  node_handle source(edge_handle e) const {
    if (is_null(e)) return null_node();
    return make_node(edge_rec(e).src);
  }
  node_handle target(edge_handle e) const {
    if (is_null(e)) return null_node();
    return make_node(edge_rec(e).dst);
  }

  // --- mutation + backward ------------------------------------------------

  node_handle insert_node() {
    std::uint32_t s = alloc_node();
    node_rec_t& r = nodes_[s];
    r.prev = node_tail_;
    r.next = npos;
    if (node_tail_ != npos) nodes_[node_tail_].next = s;
    else node_head_ = s;
    node_tail_ = s;
    ++n_;
    return {s, r.gen};
  }

  edge_handle insert_edge(node_handle u, node_handle v) {
    check(u);
    check(v);
    std::uint32_t s = alloc_edge();
    edge_rec_t& r = edges_[s];
    r.src = u.slot;
    r.dst = v.slot;
    r.prev = edge_tail_;
    r.next = npos;
    if (edge_tail_ != npos) edges_[edge_tail_].next = s;
    else edge_head_ = s;
    edge_tail_ = s;
    link_out(u.slot, s);
    link_in(v.slot, s);
    ++m_;
    return {s, r.gen};
  }

  /// Removes v and every incident edge.
  void delete_node(node_handle v) {
    check(v);
    node_rec_t& r = nodes_[v.slot];
    while (r.first_out != npos) delete_edge_slot(r.first_out);
    while (r.first_in != npos) delete_edge_slot(r.first_in);
    if (r.prev != npos) nodes_[r.prev].next = r.next;
    else node_head_ = r.next;
    if (r.next != npos) nodes_[r.next].prev = r.prev;
    else node_tail_ = r.prev;
    r.alive = false;
    ++r.gen;
    node_free_.push_back(v.slot);
    --n_;
  }

  void delete_edge(edge_handle e) {
    check(e);
    delete_edge_slot(e.slot);
  }

  node_handle last_node() const { return make_node(node_tail_); }
  edge_handle last_edge() const { return make_edge(edge_tail_); }

  // --- attribute-map support ----------------------------------------------

  std::size_t node_index(node_handle v) const { return v.slot; }
  std::size_t edge_index(edge_handle e) const { return e.slot; }
  std::size_t node_capacity() const { return nodes_.size(); }
  std::size_t edge_capacity() const { return edges_.size(); }

  std::size_t out_degree(node_handle v) const {
    check(v);
    return node_rec(v).out_deg;
  }
  std::size_t in_degree(node_handle v) const {
    check(v);
    return node_rec(v).in_deg;
  }

  /// Edge records allocated over the lifetime of this instance.
  std::size_t allocated_edge_records() const { return edge_allocs_; }

  void check(node_handle v) const {
    if (!contains(v)) throw usage_error("adj_list_graph: invalid node handle");
  }
  void check(edge_handle e) const {
    if (!contains(e)) throw usage_error("adj_list_graph: invalid edge handle");
  }

private:
  struct node_rec_t {
    std::uint32_t gen = 0;
    std::uint32_t prev = npos, next = npos;
    std::uint32_t first_out = npos, last_out = npos;
    std::uint32_t first_in = npos, last_in = npos;
    std::uint32_t out_deg = 0, in_deg = 0;
    bool alive = false;
  };
  struct edge_rec_t {
    std::uint32_t gen = 0;
    std::uint32_t src = npos, dst = npos;
    std::uint32_t prev = npos, next = npos;
    std::uint32_t prev_out = npos, next_out = npos;
    std::uint32_t prev_in = npos, next_in = npos;
    bool alive = false;
  };

  node_handle make_node(std::uint32_t slot) const {
    if (slot == npos) return null_node();
    return {slot, nodes_[slot].gen};
  }
  edge_handle make_edge(std::uint32_t slot) const {
    if (slot == npos) return null_edge();
    return {slot, edges_[slot].gen};
  }
  const node_rec_t& node_rec(node_handle v) const {
    check(v);
    return nodes_[v.slot];
  }
  const edge_rec_t& edge_rec(edge_handle e) const {
    check(e);
    return edges_[e.slot];
  }

  std::uint32_t alloc_node() {
    std::uint32_t s;
    if (!node_free_.empty()) {
      s = node_free_.back();
      node_free_.pop_back();
    } else {
      s = static_cast<std::uint32_t>(nodes_.size());
      nodes_.emplace_back();
    }
    node_rec_t& r = nodes_[s];
    r.alive = true;
    r.first_out = r.last_out = r.first_in = r.last_in = npos;
    r.out_deg = r.in_deg = 0;
    return s;
  }
  std::uint32_t alloc_edge() {
    std::uint32_t s;
    if (!edge_free_.empty()) {
      s = edge_free_.back();
      edge_free_.pop_back();
    } else {
      s = static_cast<std::uint32_t>(edges_.size());
      edges_.emplace_back();
    }
    edges_[s].alive = true;
    ++edge_allocs_;
    return s;
  }

  void link_out(std::uint32_t v, std::uint32_t e) {
    node_rec_t& nr = nodes_[v];
    edge_rec_t& er = edges_[e];
    er.prev_out = nr.last_out;
    er.next_out = npos;
    if (nr.last_out != npos) edges_[nr.last_out].next_out = e;
    else nr.first_out = e;
    nr.last_out = e;
    ++nr.out_deg;
  }
  void link_in(std::uint32_t v, std::uint32_t e) {
    node_rec_t& nr = nodes_[v];
    edge_rec_t& er = edges_[e];
    er.prev_in = nr.last_in;
    er.next_in = npos;
    if (nr.last_in != npos) edges_[nr.last_in].next_in = e;
    else nr.first_in = e;
    nr.last_in = e;
    ++nr.in_deg;
  }

  void delete_edge_slot(std::uint32_t s) {
    edge_rec_t& r = edges_[s];
    node_rec_t& su = nodes_[r.src];
    node_rec_t& tv = nodes_[r.dst];
    if (r.prev_out != npos) edges_[r.prev_out].next_out = r.next_out;
    else su.first_out = r.next_out;
    if (r.next_out != npos) edges_[r.next_out].prev_out = r.prev_out;
    else su.last_out = r.prev_out;
    --su.out_deg;
    if (r.prev_in != npos) edges_[r.prev_in].next_in = r.next_in;
    else tv.first_in = r.next_in;
    if (r.next_in != npos) edges_[r.next_in].prev_in = r.prev_in;
    else tv.last_in = r.prev_in;
    --tv.in_deg;
    if (r.prev != npos) edges_[r.prev].next = r.next;
    else edge_head_ = r.next;
    if (r.next != npos) edges_[r.next].prev = r.prev;
    else edge_tail_ = r.prev;
    r.alive = false;
    ++r.gen;
    edge_free_.push_back(s);
    --m_;
  }

  std::vector<node_rec_t> nodes_;
  std::vector<edge_rec_t> edges_;
  std::vector<std::uint32_t> node_free_;
  std::vector<std::uint32_t> edge_free_;
  std::uint32_t node_head_ = npos, node_tail_ = npos;
  std::uint32_t edge_head_ = npos, edge_tail_ = npos;
  std::size_t n_ = 0, m_ = 0;
  std::size_t edge_allocs_ = 0;
};

}  // namespace graphkit
