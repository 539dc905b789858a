#pragma once

#include <cstdint>
#include <vector>

#include "graphkit/accessors.hpp"
#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"
#include "graphkit/iterators.hpp"

namespace graphkit {

enum class contraction_mode { flat, tree };

/// A contracted view of a backend: node classes are presented as single
/// supernodes without any mutation of the backend underneath.
///
/// The partition lives in a union-find forest whose root is always the
/// designated representative (contract(v1, v2) keeps v1's class,
/// contract_list keeps the first element's). Finds path-compress; in tree
/// mode every parent write goes to a rollback log so expansion can pop one
/// contraction level at a time, strictly top-down. Flat mode has no
/// hierarchy: expand(v) dissolves the whole class back to singletons, in
/// one step no matter how it was nested.
///
/// Class members are kept in circular lists spliced in O(1) per contraction,
/// which is also how the class-wide adjacency scan chains member lists.
/// Low-level steps are tallied in op_count() for complexity assertions.
template <graph_kernel G>
class contracted_graph {
public:
  using node_handle = typename G::node_handle;
  using edge_handle = typename G::edge_handle;

  explicit contracted_graph(const G& g, contraction_mode mode = contraction_mode::flat)
      : g_(&g), mode_(mode) {
    std::size_t cap = g.node_capacity();
    parent_.resize(cap);
    size_.assign(cap, 1);
    next_member_.resize(cap);
    prev_member_.resize(cap);
    handle_of_.assign(cap, G::null_node());
    for (std::uint32_t i = 0; i < cap; ++i) {
      parent_[i] = i;
      next_member_[i] = i;
      prev_member_[i] = i;
    }
    for (auto v = g.first_node(); !G::is_null(v); v = g.advance_node(v))
      handle_of_[g.node_index(v)] = v;
  }

  const G& backend() const { return *g_; }
  contraction_mode mode() const { return mode_; }

  node_handle rep(node_handle v) const { return handle_of_[find(slot(v))]; }
  bool equal(node_handle a, node_handle b) const { return find(slot(a)) == find(slot(b)); }
  bool contracted(node_handle v) const { return size_[find(slot(v))] > 1; }
  std::size_t class_size(node_handle v) const { return size_[find(slot(v))]; }

  std::vector<node_handle> nodes(node_handle v) const {
    std::vector<node_handle> out;
    std::uint32_t r = find(slot(v));
    std::uint32_t m = r;
    do {
      out.push_back(handle_of_[m]);
      m = next_member_[m];
      ++ops_;
    } while (m != r);
    return out;
  }

  /// Merges v2's class into v1's; v1's representative stays. One contraction
  /// level in tree mode.
  void contract(node_handle v1, node_handle v2) {
    std::uint32_t r1 = find(slot(v1));
    std::uint32_t r2 = find(slot(v2));
    if (r1 == r2) throw usage_error("contracted_graph: contracting a node with itself");
    begin_event(r1);
    merge(r1, r2);
  }

  /// Contracts all classes in the list into the first element's class in a
  /// single step (one level). Entries already absorbed are skipped.
  void contract_list(const std::vector<node_handle>& list) {
    if (list.empty()) throw usage_error("contracted_graph: empty contraction list");
    std::uint32_t r1 = find(slot(list.front()));
    begin_event(r1);
    for (std::size_t i = 1; i < list.size(); ++i) {
      std::uint32_t r2 = find(slot(list[i]));
      if (r2 != r1) merge(r1, r2);
    }
  }

  /// Flat mode: dissolves v's class to singletons. Tree mode: v must name
  /// the top contraction level, which is popped.
  void expand(node_handle v) {
    std::uint32_t r = find(slot(v));
    if (size_[r] <= 1) throw usage_error("contracted_graph: expanding a non-contracted node");
    if (mode_ == contraction_mode::tree) {
      if (events_.empty() || events_.back().base != r)
        throw usage_error("contracted_graph: tree expansion must be top-down");
      expand_top();
      return;
    }
    std::vector<std::uint32_t> members;
    std::uint32_t m = r;
    do {
      members.push_back(m);
      m = next_member_[m];
      ++ops_;
    } while (m != r);
    for (std::uint32_t w : members) {
      parent_[w] = w;
      size_[w] = 1;
      next_member_[w] = w;
      prev_member_[w] = w;
    }
  }

  /// Tree mode: undoes exactly the most recent contraction level.
  void expand_top() {
    if (mode_ != contraction_mode::tree)
      throw usage_error("contracted_graph: expand_top requires tree mode");
    if (events_.empty()) throw usage_error("contracted_graph: no contraction level to expand");
    std::size_t mark = events_.back().log_mark;
    events_.pop_back();
    while (log_.size() > mark) {
      const log_entry& le = log_.back();
      switch (le.kind) {
        case log_kind::parent: parent_[le.where] = le.old_value; break;
        case log_kind::size: size_[le.where] = le.old_value; break;
        case log_kind::next_member: next_member_[le.where] = le.old_value; break;
        case log_kind::prev_member: prev_member_[le.where] = le.old_value; break;
      }
      log_.pop_back();
      ++ops_;
    }
  }

  /// Number of live contraction levels (tree mode).
  std::size_t level() const { return events_.size(); }
  /// Base representative of the top contraction level.
  node_handle top_base() const {
    if (events_.empty()) throw usage_error("contracted_graph: no contraction level");
    return handle_of_[find(events_.back().base)];
  }

  std::size_t op_count() const { return ops_; }

  // --- visible navigation ---------------------------------------------------

  node_handle first_visible_node() const { return skip_hidden(g_->first_node()); }
  node_handle next_node(node_handle v) const { return skip_hidden(g_->advance_node(v)); }

  edge_handle first_visible_edge() const { return skip_internal_global(g_->first_edge()); }
  edge_handle next_edge(edge_handle e) const { return skip_internal_global(g_->advance_edge(e)); }

  /// Class-wide adjacency: leaving edges of every member of v's class, in
  /// member-list order starting at the representative, internal edges
  /// skipped.
  edge_handle first_outgoing_edge(node_handle v) const {
    std::uint32_t r = find(slot(v));
    return scan_out(r, r, g_->first_out_edge(handle_of_[r]));
  }
  edge_handle next_outgoing_edge(edge_handle e) const {
    std::uint32_t m = slot(g_->source(e));
    std::uint32_t r = find(m);
    return scan_out(r, m, g_->advance_out(e));
  }

  edge_handle first_incoming_edge(node_handle v) const {
    std::uint32_t r = find(slot(v));
    return scan_in(r, r, g_->first_in_edge(handle_of_[r]));
  }
  edge_handle next_incoming_edge(edge_handle e) const {
    std::uint32_t m = slot(g_->target(e));
    std::uint32_t r = find(m);
    return scan_in(r, m, g_->advance_in(e));
  }

  /// Member-scoped adjacency: one original node's leaving edges with
  /// internal edges skipped, no chaining into the rest of the class. This
  /// is what lets a search scan each original adjacency list exactly once
  /// regardless of how classes grow.
  edge_handle first_outgoing_edge_of_member(node_handle m) const {
    return skip_internal_member_out(g_->first_out_edge(m));
  }
  edge_handle next_outgoing_edge_of_member(edge_handle e) const {
    return skip_internal_member_out(g_->advance_out(e));
  }

private:
  enum class log_kind : std::uint8_t { parent, size, next_member, prev_member };
  struct log_entry {
    log_kind kind;
    std::uint32_t where;
    std::uint32_t old_value;
  };
  struct event {
    std::size_t log_mark;
    std::uint32_t base;
  };

  std::uint32_t slot(node_handle v) const { return static_cast<std::uint32_t>(g_->node_index(v)); }

  std::uint32_t find(std::uint32_t x) const {
    std::uint32_t r = x;
    while (parent_[r] != r) {
      r = parent_[r];
      ++ops_;
    }
    while (parent_[x] != r) {
      std::uint32_t nxt = parent_[x];
      log_write(log_kind::parent, x, parent_[x]);
      parent_[x] = r;
      x = nxt;
      ++ops_;
    }
    return r;
  }

  // Writes need logging only while a level is open; below the first event
  // nothing can ever be rolled back past, and path compression preserves
  // the partition anyway.
  void log_write(log_kind k, std::uint32_t where, std::uint32_t old_value) const {
    if (mode_ == contraction_mode::tree && !events_.empty()) log_.push_back({k, where, old_value});
  }

  void begin_event(std::uint32_t base) {
    if (mode_ == contraction_mode::tree) events_.push_back({log_.size(), base});
  }

  void merge(std::uint32_t r1, std::uint32_t r2) {
    log_write(log_kind::parent, r2, parent_[r2]);
    parent_[r2] = r1;
    log_write(log_kind::size, r1, size_[r1]);
    size_[r1] += size_[r2];
    // splice the two circular member lists
    std::uint32_t na = next_member_[r1];
    std::uint32_t nb = next_member_[r2];
    log_write(log_kind::next_member, r1, na);
    log_write(log_kind::next_member, r2, nb);
    log_write(log_kind::prev_member, nb, prev_member_[nb]);
    log_write(log_kind::prev_member, na, prev_member_[na]);
    next_member_[r1] = nb;
    prev_member_[nb] = r1;
    next_member_[r2] = na;
    prev_member_[na] = r2;
    ++ops_;
  }

  node_handle skip_hidden(node_handle v) const {
    while (!G::is_null(v) && find(slot(v)) != slot(v)) {
      v = g_->advance_node(v);
      ++ops_;
    }
    return v;
  }

  bool internal(edge_handle e) const {
    return find(slot(g_->source(e))) == find(slot(g_->target(e)));
  }

  edge_handle skip_internal_global(edge_handle e) const {
    while (!G::is_null(e) && internal(e)) {
      e = g_->advance_edge(e);
      ++ops_;
    }
    return e;
  }

  edge_handle skip_internal_member_out(edge_handle e) const {
    while (!G::is_null(e) && internal(e)) {
      e = g_->advance_out(e);
      ++ops_;
    }
    return e;
  }

  edge_handle scan_out(std::uint32_t r, std::uint32_t m, edge_handle e) const {
    for (;;) {
      while (!G::is_null(e)) {
        if (!internal(e)) return e;
        e = g_->advance_out(e);
        ++ops_;
      }
      m = next_member_[m];
      ++ops_;
      if (m == r) return G::null_edge();
      e = g_->first_out_edge(handle_of_[m]);
    }
  }

  edge_handle scan_in(std::uint32_t r, std::uint32_t m, edge_handle e) const {
    for (;;) {
      while (!G::is_null(e)) {
        if (!internal(e)) return e;
        e = g_->advance_in(e);
        ++ops_;
      }
      m = next_member_[m];
      ++ops_;
      if (m == r) return G::null_edge();
      e = g_->first_in_edge(handle_of_[m]);
    }
  }

  const G* g_;
  contraction_mode mode_;
  mutable std::vector<std::uint32_t> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> next_member_, prev_member_;
  std::vector<node_handle> handle_of_;
  mutable std::vector<log_entry> log_;
  std::vector<event> events_;
  mutable std::size_t ops_ = 0;
};

// --- contraction iterators ----------------------------------------------

/// Node iterator over the visible (representative) nodes of a contracted
/// graph.
template <graph_kernel G>
class c_node_iterator {
public:
  using node_handle = typename G::node_handle;

  explicit c_node_iterator(const contracted_graph<G>& cg) : cg_(&cg), v_(cg.first_visible_node()) {}
  c_node_iterator(const contracted_graph<G>& cg, node_handle v) : cg_(&cg), v_(v) {}

  bool valid() const { return !G::is_null(v_); }
  node_handle get_node() const { return v_; }

  c_node_iterator& operator++() {
    if (!valid()) throw usage_error("c_node_iterator: succ on invalid iterator");
    v_ = cg_->next_node(v_);
    return *this;
  }

  friend bool operator==(const c_node_iterator& a, const c_node_iterator& b) {
    return a.cg_ == b.cg_ && a.v_ == b.v_;
  }

private:
  const contracted_graph<G>* cg_;
  node_handle v_;
};

/// Edge iterator over the visible edges: backend edges whose endpoints lie
/// in different classes.
template <graph_kernel G>
class c_edge_iterator {
public:
  using edge_handle = typename G::edge_handle;

  explicit c_edge_iterator(const contracted_graph<G>& cg) : cg_(&cg), e_(cg.first_visible_edge()) {}

  bool valid() const { return !G::is_null(e_); }
  edge_handle get_edge() const { return e_; }

  c_edge_iterator& operator++() {
    if (!valid()) throw usage_error("c_edge_iterator: succ on invalid iterator");
    e_ = cg_->next_edge(e_);
    return *this;
  }

private:
  const contracted_graph<G>* cg_;
  edge_handle e_;
};

/// Adjacency iterator over the visible leaving edges of a supernode,
/// chaining through every member's list. curr_adj lands on the adjacent
/// class's representative.
template <graph_kernel G>
class c_out_adj_iterator {
public:
  using node_handle = typename G::node_handle;
  using edge_handle = typename G::edge_handle;

  c_out_adj_iterator(const contracted_graph<G>& cg, node_handle v)
      : cg_(&cg), v_(cg.rep(v)), e_(cg.first_outgoing_edge(v)) {}

  bool valid() const { return !G::is_null(e_); }
  bool has_node() const { return !G::is_null(v_); }
  node_handle get_node() const { return v_; }
  edge_handle get_edge() const { return e_; }

  c_out_adj_iterator& operator++() {
    if (!valid()) throw usage_error("c_out_adj_iterator: succ on invalid iterator");
    e_ = cg_->next_outgoing_edge(e_);
    return *this;
  }

  c_out_adj_iterator curr_adj() const {
    if (!valid()) throw usage_error("c_out_adj_iterator: curr_adj on invalid iterator");
    return c_out_adj_iterator(*cg_, cg_->rep(cg_->backend().target(e_)));
  }

private:
  const contracted_graph<G>* cg_;
  node_handle v_;
  edge_handle e_;
};

/// Mirror for entering edges.
template <graph_kernel G>
class c_in_adj_iterator {
public:
  using node_handle = typename G::node_handle;
  using edge_handle = typename G::edge_handle;

  c_in_adj_iterator(const contracted_graph<G>& cg, node_handle v)
      : cg_(&cg), v_(cg.rep(v)), e_(cg.first_incoming_edge(v)) {}

  bool valid() const { return !G::is_null(e_); }
  bool has_node() const { return !G::is_null(v_); }
  node_handle get_node() const { return v_; }
  edge_handle get_edge() const { return e_; }

  c_in_adj_iterator& operator++() {
    if (!valid()) throw usage_error("c_in_adj_iterator: succ on invalid iterator");
    e_ = cg_->next_incoming_edge(e_);
    return *this;
  }

  c_in_adj_iterator curr_adj() const {
    if (!valid()) throw usage_error("c_in_adj_iterator: curr_adj on invalid iterator");
    return c_in_adj_iterator(*cg_, cg_->rep(cg_->backend().source(e_)));
  }

private:
  const contracted_graph<G>* cg_;
  node_handle v_;
  edge_handle e_;
};

// --- coordinators and contractors -----------------------------------------

/// Coordinator that contracts a pair at every step. The coordination base
/// has no role in this mode.
template <graph_kernel G, class PredDA>
class pair_coordinator {
public:
  using node_handle = typename G::node_handle;

  pair_coordinator(contracted_graph<G>& cg, PredDA pred) : cg_(&cg), pred_(pred) {}

  void init(node_handle start) { cur_ = start; }
  node_handle current() const { return cur_; }
  node_handle pred_of_current() const {
    return get(pred_, node_iterator<G>(cg_->backend(), cur_));
  }
  bool at_root() const { return G::is_null(pred_of_current()); }
  contracted_graph<G>& graph() const { return *cg_; }

  void succ() {
    node_handle p = pred_of_current();
    if (G::is_null(p)) throw usage_error("pair_coordinator: predecessor chain ended");
    if (!cg_->equal(cur_, p)) cg_->contract(cur_, p);
    cur_ = p;
  }
  // Pair mode already contracted the final position during the last succ.
  void collect_current() {}
  void start_contraction() {}

private:
  contracted_graph<G>* cg_;
  PredDA pred_;
  node_handle cur_ = G::null_node();
};

/// Coordinator that only collects nodes into the (external) coordination
/// base while stepping; start_contraction() contracts the whole list in one
/// single step, the first collected node becoming the representative.
template <graph_kernel G, class PredDA>
class list_coordinator {
public:
  using node_handle = typename G::node_handle;

  list_coordinator(contracted_graph<G>& cg, PredDA pred, std::vector<node_handle>& coord_base)
      : cg_(&cg), pred_(pred), base_(&coord_base) {}

  void init(node_handle start) { cur_ = start; }
  node_handle current() const { return cur_; }
  node_handle pred_of_current() const {
    return get(pred_, node_iterator<G>(cg_->backend(), cur_));
  }
  bool at_root() const { return G::is_null(pred_of_current()); }
  contracted_graph<G>& graph() const { return *cg_; }
  const std::vector<node_handle>& coord_base() const { return *base_; }

  void succ() {
    node_handle p = pred_of_current();
    if (G::is_null(p)) throw usage_error("list_coordinator: predecessor chain ended");
    base_->push_back(cur_);
    cur_ = p;
  }
  void collect_current() { base_->push_back(cur_); }
  void start_contraction() {
    cg_->contract_list(*base_);
    base_->clear();
  }

private:
  contracted_graph<G>* cg_;
  PredDA pred_;
  std::vector<node_handle>* base_;
  node_handle cur_ = G::null_node();
};

/// Contracts a cycle described by a predecessor structure, walking it from
/// any entry node back to itself. A walk that fails to close within n steps
/// is a malformed input.
template <class Coord>
class cycle_contractor {
public:
  explicit cycle_contractor(Coord& coord) : coord_(&coord) {}

  template <class NodeHandle>
  void contract(NodeHandle entry) {
    coord_->init(entry);
    std::size_t guard = coord_->graph().backend().node_count();
    std::size_t steps = 0;
    do {
      coord_->succ();
      if (++steps > guard) throw input_error("cycle_contractor: predecessor walk does not close");
    } while (!(coord_->current() == entry));
    coord_->start_contraction();
  }

private:
  Coord* coord_;
};

/// Contracts two predecessor paths that meet only in a shared root.
template <class Coord>
class two_path_contractor {
public:
  two_path_contractor(Coord& c1, Coord& c2) : c1_(&c1), c2_(&c2) {}

  template <class NodeHandle>
  void contract(NodeHandle start1, NodeHandle start2) {
    walk(*c1_, start1);
    walk(*c2_, start2);
    c1_->start_contraction();
  }

  /// The equal-length variant: both paths stepped in lockstep.
  template <class NodeHandle>
  void contract_interleaved(NodeHandle start1, NodeHandle start2) {
    c1_->init(start1);
    c2_->init(start2);
    while (!c1_->at_root()) {
      c1_->succ();
      c2_->succ();
    }
    c1_->collect_current();
    c2_->collect_current();
    c1_->start_contraction();
  }

private:
  template <class C, class NodeHandle>
  static void walk(C& c, NodeHandle start) {
    c.init(start);
    while (!c.at_root()) c.succ();
    c.collect_current();
  }

  Coord* c1_;
  Coord* c2_;
};

/// Contracts n predecessor paths sharing one root.
template <class Coord>
class n_path_contractor {
public:
  explicit n_path_contractor(Coord& coord) : coord_(&coord) {}

  template <class NodeHandle>
  void contract(const std::vector<NodeHandle>& starts) {
    for (NodeHandle s : starts) {
      coord_->init(s);
      while (!coord_->at_root()) coord_->succ();
      coord_->collect_current();
    }
    coord_->start_contraction();
  }

private:
  Coord* coord_;
};

}  // namespace graphkit
