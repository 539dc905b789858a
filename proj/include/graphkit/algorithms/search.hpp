#pragma once

#include "graphkit/accessors.hpp"
#include "graphkit/aux_structures.hpp"
#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"
#include "graphkit/iterators.hpp"

namespace graphkit {

/// Step kinds reported by the stateful depth-first stepper.
enum class dfs_event { dfs_shrink, dfs_leaf, dfs_grow_depth, dfs_grow_breadth };

/// No-op observer; the default template argument, fully inlined away.
struct null_search_observer {
  template <class AI>
  void on_seed(const AI&) {}
  template <class AI>
  void on_pop(const AI&) {}
  template <class AI>
  void on_valid_check(const AI&, bool) {}
  template <class AI>
  void on_curr_adj(const AI&, const AI&) {}
  template <class AI>
  void on_seen_check(const AI&, bool) {}
  template <class AI>
  void on_append(const AI&) {}
  template <class AI>
  void on_advance(const AI&, const AI&) {}
};

/// Simple depth-first search as a loop kernel. One next() pops one
/// adjacency iterator and consumes its whole adjacency list, appending the
/// current-adjacency iterator of every node not seen before. The fixed node
/// of the stack's top before each next() walks the graph in depth-first
/// order.
///
/// Initialization of the mark accessor is the caller's job; init() marks
/// only the start node.
template <class AI, class MarkDA, class Obs = null_search_observer>
class dfs_simple_stepper {
public:
  dfs_simple_stepper(MarkDA mark, Obs obs = Obs()) : mark_(mark), obs_(obs) {}

  void init(const AI& start) {
    st_.clear();
    set(mark_, start, true);
    st_.push(start);
    obs_.on_seed(start);
  }

  bool finished() const { return st_.empty(); }
  const AI& current() const { return st_.top(); }
  const lifo_stack<AI>& stack() const { return st_; }
  Obs& observer() { return obs_; }

  void next() {
    if (finished()) throw usage_error("dfs_simple_stepper: next on finished algorithm");
    AI ai = st_.pop();
    obs_.on_pop(ai);
    obs_.on_valid_check(ai, ai.valid());
    while (ai.valid()) {
      AI temp = ai.curr_adj();
      obs_.on_curr_adj(ai, temp);
      bool seen = get(mark_, temp);
      if (!seen) set(mark_, temp, true);
      obs_.on_seen_check(temp, seen);
      if (!seen) {
        st_.push(temp);
        obs_.on_append(temp);
      }
      AI before = ai;
      ++ai;
      obs_.on_advance(before, ai);
      obs_.on_valid_check(ai, ai.valid());
    }
  }

  void finish_algo() {
    while (!finished()) next();
  }

private:
  lifo_stack<AI> st_;
  MarkDA mark_;
  Obs obs_;
};

/// Breadth-first search: the same kernel with the stack replaced by a
/// queue. The inspected-edge sequence is the marked edge of the popped
/// iterator at every valid position.
template <class AI, class MarkDA, class Obs = null_search_observer>
class bfs_stepper {
public:
  bfs_stepper(MarkDA mark, Obs obs = Obs()) : mark_(mark), obs_(obs) {}

  void init(const AI& start) {
    q_.clear();
    set(mark_, start, true);
    q_.append(start);
    obs_.on_seed(start);
  }

  bool finished() const { return q_.empty(); }
  const AI& current() const { return q_.front(); }
  const fifo_queue<AI>& queue() const { return q_; }
  Obs& observer() { return obs_; }

  void next() {
    if (finished()) throw usage_error("bfs_stepper: next on finished algorithm");
    AI ai = q_.pop();
    obs_.on_pop(ai);
    obs_.on_valid_check(ai, ai.valid());
    while (ai.valid()) {
      AI temp = ai.curr_adj();
      obs_.on_curr_adj(ai, temp);
      bool seen = get(mark_, temp);
      if (!seen) set(mark_, temp, true);
      obs_.on_seen_check(temp, seen);
      if (!seen) {
        q_.append(temp);
        obs_.on_append(temp);
      }
      AI before = ai;
      ++ai;
      obs_.on_advance(before, ai);
      obs_.on_valid_check(ai, ai.valid());
    }
  }

  void finish_algo() {
    while (!finished()) next();
  }

private:
  fifo_queue<AI> q_;
  MarkDA mark_;
  Obs obs_;
};

/// Stateful depth-first search. One next() performs a single tree-walk
/// move and reports it:
///
///   dfs_grow_depth   a fresh adjacency iterator was pushed
///   dfs_grow_breadth the top advanced to its next incident edge
///   dfs_shrink       the top's adjacency list is consumed, popped
///   dfs_leaf         the top had no valid edge at all, popped
///
/// An iterator leaves the stack only once its adjacency list is consumed,
/// which is what lets callers record discovery and finishing times from
/// outside: discovery on push, finish on pop, and for leaves both coincide
/// in the same step.
template <class AI, class MarkDA>
class dfs_full_stepper {
public:
  explicit dfs_full_stepper(MarkDA mark) : mark_(mark) {}

  void init(const AI& start) {
    st_.clear();
    set(mark_, start, true);
    st_.push(start);
  }

  bool finished() const { return st_.empty(); }
  const AI& current() const { return st_.top(); }
  const lifo_stack<AI>& stack() const { return st_; }

  dfs_event next() {
    if (finished()) throw usage_error("dfs_full_stepper: next on finished algorithm");
    AI ai = st_.top();
    if (ai.valid()) {
      AI temp = ai.curr_adj();
      if (!get(mark_, temp)) {
        set(mark_, temp, true);
        st_.push(temp);
        return dfs_event::dfs_grow_depth;
      }
      st_.pop();
      ++ai;
      if (ai.valid()) {
        st_.push(ai);
        return dfs_event::dfs_grow_breadth;
      }
      return dfs_event::dfs_shrink;
    }
    st_.pop();
    return dfs_event::dfs_leaf;
  }

  /// The simple whole-node step (the dfs_simple_stepper body), usable when
  /// only the node order matters, as in the second phase of the component
  /// search.
  void next_unseen() {
    if (finished()) throw usage_error("dfs_full_stepper: next_unseen on finished algorithm");
    AI ai = st_.pop();
    while (ai.valid()) {
      AI temp = ai.curr_adj();
      if (!get(mark_, temp)) {
        set(mark_, temp, true);
        st_.push(temp);
      }
      ++ai;
    }
  }

  void finish_algo() {
    while (!finished()) next();
  }

private:
  lifo_stack<AI> st_;
  MarkDA mark_;
};

}  // namespace graphkit
