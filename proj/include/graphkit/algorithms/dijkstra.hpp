#pragma once

#include "graphkit/accessors.hpp"
#include "graphkit/aux_structures.hpp"
#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"
#include "graphkit/iterators.hpp"

namespace graphkit {

/// Dijkstra with two states, processing one edge per next().
///
/// Depth phase: the current adjacency iterator is invalid, so a new minimum
/// node is taken from the priority queue and its first leaving edge is
/// relaxed. Breadth phase: the iterator advances to the next leaving edge
/// and relaxes it. Queue membership is tracked through the queue-item
/// accessor, whose value_null means "not queued".
///
/// Initialization is deliberately external: the distance accessor must be
/// pre-set to its value_max everywhere, then add_source() seeds the queue.
/// Lengths must be nonnegative; a negative one raises input_error.
template <graph_kernel G, class DistDA, class LenDA, class QiDA>
class dijkstra_stepper {
public:
  using adj_iterator = out_adj_iterator<G>;
  using dist_type = typename DistDA::value_type;
  using pq_type = binary_heap_pq<dist_type, adj_iterator>;

  dijkstra_stepper(const G& g, DistDA dist, LenDA len, QiDA qi)
      : g_(&g), dist_(dist), len_(len), qi_(qi) {}

  void add_source(typename G::node_handle s) {
    adj_iterator ai(*g_, s);
    set(dist_, ai, dist_type(0));
    set(qi_, ai, pq_.insert(dist_type(0), ai));
  }

  bool finished() const { return !current_.valid() && pq_.empty(); }
  const adj_iterator& current() const { return current_; }
  const pq_type& queue() const { return pq_; }
  const G& graph() const { return *g_; }

  void next() {
    if (finished()) throw usage_error("dijkstra_stepper: next on finished algorithm");
    if (!current_.valid()) {
      current_ = pq_.extract_min();
      set(qi_, current_, pq_type::null_item);
      if (current_.valid()) relax();
    } else {
      ++current_;
      if (current_.valid()) relax();
    }
  }

  void finish_algo() {
    while (!finished()) next();
  }

private:
  void relax() {
    adj_iterator adj = current_.curr_adj();
    auto w = get(len_, current_);
    if (w < 0) throw input_error("dijkstra: negative edge length");
    dist_type c = get(dist_, current_) + w;
    dist_type d = get(dist_, adj);
    if (c < d) {
      auto qh = get(qi_, adj);
      if (qh != pq_type::null_item)
        pq_.decrease_key(qh, c);
      else
        set(qi_, adj, pq_.insert(c, adj));
      set(dist_, adj, c);
    }
  }

  const G* g_;
  adj_iterator current_;  // invalid until the first depth phase
  pq_type pq_;
  DistDA dist_;
  LenDA len_;
  QiDA qi_;
};

template <graph_kernel G, class DistDA, class LenDA, class QiDA>
auto make_dijkstra(const G& g, DistDA dist, LenDA len, QiDA qi) {
  return dijkstra_stepper<G, DistDA, LenDA, QiDA>(g, dist, len, qi);
}

/// Records shortest-path tree edges from outside a Dijkstra stepper: before
/// each step it predicts the edge about to be examined, and afterwards
/// keeps it as predecessor if the target's distance improved. The wrapped
/// algorithm is never modified.
template <class Stepper, class DistDA, class PredDA>
class predecessor_recorder {
public:
  using graph_type = std::remove_cvref_t<decltype(std::declval<Stepper>().graph())>;

  predecessor_recorder(Stepper& alg, DistDA dist, PredDA pred)
      : alg_(&alg), dist_(dist), pred_(pred) {}

  bool finished() const { return alg_->finished(); }

  void next() {
    const graph_type& g = alg_->graph();
    bool have_probe = false;
    typename graph_type::edge_handle probe{};
    if (alg_->current().valid()) {
      auto c = alg_->current();
      ++c;
      if (c.valid()) {
        probe = c.get_edge();
        have_probe = true;
      }
    } else if (!alg_->queue().empty() && alg_->queue().find_min().valid()) {
      probe = alg_->queue().find_min().get_edge();
      have_probe = true;
    }
    typename DistDA::value_type before{};
    if (have_probe) before = get(dist_, node_iterator<graph_type>(g, g.target(probe)));
    alg_->next();
    if (have_probe) {
      node_iterator<graph_type> tgt(g, g.target(probe));
      if (get(dist_, tgt) < before) set(pred_, tgt, probe);
    }
  }

  void finish_algo() {
    while (!finished()) next();
  }

private:
  Stepper* alg_;
  DistDA dist_;
  PredDA pred_;
};

}  // namespace graphkit
