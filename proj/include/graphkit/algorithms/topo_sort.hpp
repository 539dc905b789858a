#pragma once

#include "graphkit/accessors.hpp"
#include "graphkit/aux_structures.hpp"
#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"
#include "graphkit/iterators.hpp"

namespace graphkit {

/// Fills an in-degree accessor from the graph. The usual pre-processing for
/// the topological stepper, kept outside it.
template <graph_kernel G, class IndegDA>
void compute_in_degrees(const G& g, IndegDA indeg) {
  for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v))
    set(indeg, node_iterator<G>(g, v), typename IndegDA::value_type(0));
  for (auto e = g.first_edge(); !G::is_null(e); e = g.advance_edge(e)) {
    node_iterator<G> t(g, g.target(e));
    set(indeg, t, get(indeg, t) + 1);
  }
}

/// Topological sort over an in-degree accessor. Nodes are never really
/// removed; deletion is emulated by decrementing the in-degree counter of
/// each out-neighbor. One next() emits one node. If the graph has a cycle
/// the queue drains early and cyclic_input() reports it.
///
/// The in-degree accessor must be bounded; a counter reaching value_null is
/// what qualifies a node as a source of the emulated subgraph.
template <graph_kernel G, class IndegDA>
class topo_sort_stepper {
public:
  using adj_iterator = out_adj_iterator<G>;

  topo_sort_stepper(const G& g, IndegDA indeg) : g_(&g), indeg_(indeg) {}

  /// Seeds the internal queue with every node whose in-degree is value_null.
  void init() {
    q_.clear();
    emitted_ = 0;
    for (auto v = g_->first_node(); !G::is_null(v); v = g_->advance_node(v))
      if (get(indeg_, node_iterator<G>(*g_, v)) == indeg_.value_null) q_.append(adj_iterator(*g_, v));
  }

  bool finished() const { return q_.empty(); }
  std::size_t emitted_count() const { return emitted_; }
  bool cyclic_input() const { return finished() && emitted_ < g_->node_count(); }
  typename G::node_handle current() const { return current_; }
  const fifo_queue<adj_iterator>& queue() const { return q_; }

  void next() {
    if (finished()) throw usage_error("topo_sort_stepper: next on finished algorithm");
    adj_iterator ai = q_.pop();
    current_ = ai.get_node();
    ++emitted_;
    while (ai.valid()) {
      adj_iterator temp = ai.curr_adj();
      auto val = get(indeg_, temp) - 1;
      set(indeg_, temp, val);
      if (val == indeg_.value_null) q_.append(temp);
      ++ai;
    }
  }

  void finish_algo() {
    while (!finished()) next();
  }

private:
  const G* g_;
  fifo_queue<adj_iterator> q_;
  IndegDA indeg_;
  std::size_t emitted_ = 0;
  typename G::node_handle current_ = G::null_node();
};

}  // namespace graphkit
