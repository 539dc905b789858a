#pragma once

#include "graphkit/accessors.hpp"
#include "graphkit/algorithms/search.hpp"
#include "graphkit/aux_structures.hpp"
#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"
#include "graphkit/iterators.hpp"

namespace graphkit {

enum class scc_phase { forward, transpose, done };

namespace detail {

/// Mark accessor that also stamps a component number whenever it marks a
/// node; how the second phase labels components without touching the
/// search code.
template <class MarkDA, class CompDA>
struct component_marking_accessor {
  using value_type = bool;
  MarkDA mark;
  CompDA comp;
  const int* component;

  template <class It>
  bool get(const It& it) const {
    return mark.get(it);
  }
  template <class It>
  void set(const It& it, bool v) const {
    mark.set(it, v);
    if (v) comp.set(it, *component);
  }
};

}  // namespace detail

/// Strongly connected components, two phases behind one next().
///
/// Phase one drives a stateful depth-first search over leaving edges across
/// the whole node set; every node goes onto a stack the moment its search
/// finishes, so the stack ends up in finishing-time order. The phase flag
/// then flips, marks reset, and phase two grows depth-first trees over
/// entering edges (the transpose) seeded from the stack top; each new tree
/// bumps the component counter.
template <graph_kernel G, class MarkDA, class CompDA>
class scc_stepper {
public:
  using out_ai = out_adj_iterator<G>;
  using in_ai = in_adj_iterator<G>;
  using node_handle = typename G::node_handle;

  scc_stepper(const G& g, MarkDA mark, CompDA comp)
      : g_(&g),
        mark_(mark),
        comp_(comp),
        it_(g),
        oai_(g),
        iai_(g),
        dfs1_(mark),
        dfs2_(detail::component_marking_accessor<MarkDA, CompDA>{mark, comp, &component_}) {}

  void init() {
    it_.reset();
    leaf_stack_.clear();
    component_ = -1;
    phase_ = scc_phase::forward;
    if (!it_.valid()) {
      phase_ = scc_phase::done;
      return;
    }
    oai_.update(it_.get_node());
    dfs1_.init(oai_);
  }

  bool finished() const { return phase_ == scc_phase::done; }
  scc_phase phase() const { return phase_; }
  int component_count() const { return component_ + 1; }
  const lifo_stack<node_handle>& leaf_stack() const { return leaf_stack_; }

  scc_phase next() {
    if (finished()) throw usage_error("scc_stepper: next on finished algorithm");
    if (phase_ == scc_phase::forward) return next_forward();
    return next_transpose();
  }

  void finish_algo() {
    while (!finished()) next();
  }

private:
  scc_phase next_forward() {
    if (dfs1_.finished()) {
      ++it_;
      while (it_.valid() && get(mark_, it_)) ++it_;
      if (it_.valid()) {
        oai_.update(it_.get_node());
        dfs1_.init(oai_);
      } else {
        // Phase transition: reset marks, seed the transpose search from the
        // most recently finished node.
        for (it_.reset(); it_.valid(); ++it_) set(mark_, it_, false);
        node_handle seed = pop_unseen();
        if (G::is_null(seed)) {
          phase_ = scc_phase::done;
          return phase_;
        }
        component_ = 0;
        iai_.update(seed);
        dfs2_.init(iai_);
        phase_ = scc_phase::transpose;
        return phase_;
      }
    }
    out_ai before = dfs1_.current();
    dfs_event ev = dfs1_.next();
    if (ev == dfs_event::dfs_shrink || ev == dfs_event::dfs_leaf)
      leaf_stack_.push(before.get_node());
    return phase_;
  }

  scc_phase next_transpose() {
    if (dfs2_.finished()) {
      node_handle seed = pop_unseen();
      if (G::is_null(seed)) {
        phase_ = scc_phase::done;
        return phase_;
      }
      ++component_;
      iai_.update(seed);
      dfs2_.init(iai_);
      return phase_;
    }
    dfs2_.next_unseen();
    return phase_;
  }

  node_handle pop_unseen() {
    while (!leaf_stack_.empty()) {
      node_handle v = leaf_stack_.pop();
      if (!get(mark_, node_iterator<G>(*g_, v))) return v;
    }
    return G::null_node();
  }

  const G* g_;
  MarkDA mark_;
  CompDA comp_;
  node_iterator<G> it_;
  out_ai oai_;
  in_ai iai_;
  dfs_full_stepper<out_ai, MarkDA> dfs1_;
  dfs_full_stepper<in_ai, detail::component_marking_accessor<MarkDA, CompDA>> dfs2_;
  lifo_stack<node_handle> leaf_stack_;
  int component_ = -1;
  scc_phase phase_ = scc_phase::forward;
};

}  // namespace graphkit
