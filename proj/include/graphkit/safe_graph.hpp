#pragma once

#include <cstdint>
#include <vector>

#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"

namespace graphkit {

/// What a safe iterator does when its current item is deleted underneath
/// it: hunt forward for a replacement, or just go invalid. Fixed at
/// iterator creation.
enum class escape_mode { forward, none };

/// The next edge at or after advance(e) whose endpoints both differ from v;
/// null when the edge order is exhausted. v = null means only e itself is
/// going away, so a single advance suffices.
template <graph_kernel G>
typename G::edge_handle refresh_edge(const G& g, typename G::edge_handle e,
                                     typename G::node_handle v) {
  e = g.advance_edge(e);
  if (G::is_null(v)) return e;
  while (!G::is_null(e) && (g.source(e) == v || g.target(e) == v)) e = g.advance_edge(e);
  return e;
}

/// Registry-bearing wrapper around a mutable backend. Every safe iterator
/// with a valid current item is registered under exactly that item; a
/// deletion notifies all registered iterators (except the initiating one)
/// to refresh themselves before the backend is touched, in registration
/// order.
template <mutable_graph_kernel G>
class safe_graph {
public:
  using node_handle = typename G::node_handle;
  using edge_handle = typename G::edge_handle;

  struct refresh_target {
    virtual ~refresh_target() = default;
    // deleted is the node going away, or null for a pure edge deletion
    virtual void on_item_deleted(node_handle deleted) = 0;
  };

  explicit safe_graph(G& g) : g_(&g) {}
  safe_graph(const safe_graph&) = delete;
  safe_graph& operator=(const safe_graph&) = delete;

  const G& backend() const { return *g_; }

  // forwarded kernel surface
  std::size_t node_count() const { return g_->node_count(); }
  std::size_t edge_count() const { return g_->edge_count(); }
  node_handle first_node() const { return g_->first_node(); }
  node_handle advance_node(node_handle v) const { return g_->advance_node(v); }
  edge_handle first_edge() const { return g_->first_edge(); }
  edge_handle advance_edge(edge_handle e) const { return g_->advance_edge(e); }
  edge_handle first_out_edge(node_handle v) const { return g_->first_out_edge(v); }
  edge_handle advance_out(edge_handle e) const { return g_->advance_out(e); }
  edge_handle first_in_edge(node_handle v) const { return g_->first_in_edge(v); }
  edge_handle advance_in(edge_handle e) const { return g_->advance_in(e); }
  node_handle source(edge_handle e) const { return g_->source(e); }
  node_handle target(edge_handle e) const { return g_->target(e); }
  bool contains(node_handle v) const { return g_->contains(v); }
  bool contains(edge_handle e) const { return g_->contains(e); }
  static constexpr node_handle null_node() { return G::null_node(); }
  static constexpr edge_handle null_edge() { return G::null_edge(); }
  static constexpr bool is_null(node_handle v) { return G::is_null(v); }
  static constexpr bool is_null(edge_handle e) { return G::is_null(e); }
  std::size_t node_index(node_handle v) const { return g_->node_index(v); }
  std::size_t node_capacity() const { return g_->node_capacity(); }

  // mutation; new items start with empty registrations
  node_handle insert_node() { return g_->insert_node(); }
  edge_handle insert_edge(node_handle u, node_handle v) { return g_->insert_edge(u, v); }

  void delete_node(node_handle v, refresh_target* initiator = nullptr) {
    g_->check(v);
    if (initiator) require_registered(initiator);
    // incident edges disappear with the node; their iterators refresh first
    std::vector<edge_handle> incident;
    for (auto e = g_->first_out_edge(v); !G::is_null(e); e = g_->advance_out(e)) incident.push_back(e);
    for (auto e = g_->first_in_edge(v); !G::is_null(e); e = g_->advance_in(e))
      if (!(g_->source(e) == v)) incident.push_back(e);  // self-loop already listed
    for (edge_handle e : incident) notify_and_clear(emap_slot(e), v, initiator);
    notify_and_clear(nmap_slot(v), v, initiator);
    g_->delete_node(v);
  }

  void delete_edge(edge_handle e, refresh_target* initiator = nullptr) {
    g_->check(e);
    if (initiator) require_registered(initiator);
    notify_and_clear(emap_slot(e), G::null_node(), initiator);
    g_->delete_edge(e);
  }

  // registry bookkeeping, used by the safe iterators
  void register_at(node_handle v, refresh_target* it) { nmap_slot(v).push_back(it); }
  void register_at(edge_handle e, refresh_target* it) { emap_slot(e).push_back(it); }
  void deregister_at(node_handle v, refresh_target* it) { remove(nmap_slot(v), it); }
  void deregister_at(edge_handle e, refresh_target* it) { remove(emap_slot(e), it); }

  std::size_t registered_count() const {
    std::size_t total = 0;
    for (const auto& b : nmap_) total += b.size();
    for (const auto& b : emap_) total += b.size();
    return total;
  }
  std::size_t registered_at(node_handle v) const {
    std::size_t i = g_->node_index(v);
    return i < nmap_.size() ? nmap_[i].size() : 0;
  }
  std::size_t registered_at(edge_handle e) const {
    std::size_t i = g_->edge_index(e);
    return i < emap_.size() ? emap_[i].size() : 0;
  }

private:
  using bucket = std::vector<refresh_target*>;

  bucket& nmap_slot(node_handle v) {
    std::size_t i = g_->node_index(v);
    if (i >= nmap_.size()) nmap_.resize(i + 1);
    return nmap_[i];
  }
  bucket& emap_slot(edge_handle e) {
    std::size_t i = g_->edge_index(e);
    if (i >= emap_.size()) emap_.resize(i + 1);
    return emap_[i];
  }

  static void remove(bucket& b, refresh_target* it) {
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (b[i] == it) {
        b.erase(b.begin() + static_cast<std::ptrdiff_t>(i));
        return;
      }
    }
    throw usage_error("safe_graph: deregistering an iterator that is not registered");
  }

  void require_registered(refresh_target* it) const {
    for (const auto& b : nmap_)
      for (refresh_target* r : b)
        if (r == it) return;
    for (const auto& b : emap_)
      for (refresh_target* r : b)
        if (r == it) return;
    throw usage_error("safe_graph: delete through an unregistered iterator");
  }

  void notify_and_clear(bucket& b, node_handle deleted, refresh_target* initiator) {
    bucket pending;
    pending.swap(b);
    for (refresh_target* it : pending)
      if (it != initiator) it->on_item_deleted(deleted);
  }

  G* g_;
  std::vector<bucket> nmap_;
  std::vector<bucket> emap_;
};

/// Safe linear node iterator. Registered under its current node whenever
/// valid; a deletion of that node relocates it (forward mode) or
/// invalidates it (none mode).
template <class SG>
class safe_node_iterator : public SG::refresh_target {
public:
  using node_handle = typename SG::node_handle;

  explicit safe_node_iterator(SG& sg, escape_mode mode = escape_mode::forward)
      : sg_(&sg), mode_(mode) {
    assign(sg.first_node());
  }
  safe_node_iterator(SG& sg, node_handle v, escape_mode mode = escape_mode::forward)
      : sg_(&sg), mode_(mode) {
    assign(v);
  }
  safe_node_iterator(const safe_node_iterator& o) : sg_(o.sg_), mode_(o.mode_) { assign(o.v_); }
  safe_node_iterator& operator=(const safe_node_iterator& o) {
    if (this != &o) {
      drop();
      sg_ = o.sg_;
      mode_ = o.mode_;
      assign(o.v_);
    }
    return *this;
  }
  ~safe_node_iterator() override { drop(); }

  bool valid() const { return !SG::is_null(v_); }
  node_handle get_node() const { return v_; }
  escape_mode mode() const { return mode_; }

  safe_node_iterator& operator++() {
    if (!valid()) throw usage_error("safe_node_iterator: succ on invalid iterator");
    node_handle next = sg_->advance_node(v_);
    drop();
    assign(next);
    return *this;
  }

  void update(node_handle v) {
    drop();
    assign(v);
  }
  void reset() { update(sg_->first_node()); }
  void make_invalid() {
    drop();
    v_ = SG::null_node();
  }

  /// Creates a new node and marks it.
  void insert() {
    node_handle v = sg_->insert_node();
    drop();
    assign(v);
  }

  /// Deletes the marked node; this iterator is the initiator and ends up
  /// invalid, all other registered iterators get refreshed.
  void del() {
    if (!valid()) throw usage_error("safe_node_iterator: del on invalid iterator");
    node_handle v = v_;
    registered_ = false;  // the registry entry dies with the bucket
    v_ = SG::null_node();
    sg_->delete_node(v, this);
  }

  void on_item_deleted(node_handle deleted) override {
    registered_ = false;
    node_handle next = mode_ == escape_mode::forward ? sg_->advance_node(deleted) : SG::null_node();
    assign(next);
  }

private:
  void assign(node_handle v) {
    v_ = v;
    if (valid()) {
      sg_->register_at(v_, this);
      registered_ = true;
    }
  }
  void drop() {
    if (registered_) {
      sg_->deregister_at(v_, this);
      registered_ = false;
    }
  }

  SG* sg_;
  node_handle v_ = SG::null_node();
  escape_mode mode_;
  bool registered_ = false;
};

/// Safe linear edge iterator, registered under its current edge. On node
/// deletion it escapes to the next edge avoiding that node; on deletion of
/// the edge itself, to the plain successor edge.
template <class SG>
class safe_edge_iterator : public SG::refresh_target {
public:
  using node_handle = typename SG::node_handle;
  using edge_handle = typename SG::edge_handle;

  explicit safe_edge_iterator(SG& sg, escape_mode mode = escape_mode::forward)
      : sg_(&sg), mode_(mode) {
    assign(sg.first_edge());
  }
  safe_edge_iterator(SG& sg, edge_handle e, escape_mode mode = escape_mode::forward)
      : sg_(&sg), mode_(mode) {
    assign(e);
  }
  safe_edge_iterator(const safe_edge_iterator& o) : sg_(o.sg_), mode_(o.mode_) { assign(o.e_); }
  safe_edge_iterator& operator=(const safe_edge_iterator& o) {
    if (this != &o) {
      drop();
      sg_ = o.sg_;
      mode_ = o.mode_;
      assign(o.e_);
    }
    return *this;
  }
  ~safe_edge_iterator() override { drop(); }

  bool valid() const { return !SG::is_null(e_); }
  edge_handle get_edge() const { return e_; }

  safe_edge_iterator& operator++() {
    if (!valid()) throw usage_error("safe_edge_iterator: succ on invalid iterator");
    edge_handle next = sg_->advance_edge(e_);
    drop();
    assign(next);
    return *this;
  }

  void update(edge_handle e) {
    drop();
    assign(e);
  }
  void reset() { update(sg_->first_edge()); }
  void make_invalid() {
    drop();
    e_ = SG::null_edge();
  }

  void insert(node_handle u, node_handle v) {
    edge_handle e = sg_->insert_edge(u, v);
    drop();
    assign(e);
  }

  void del() {
    if (!valid()) throw usage_error("safe_edge_iterator: del on invalid iterator");
    edge_handle e = e_;
    registered_ = false;
    e_ = SG::null_edge();
    sg_->delete_edge(e, this);
  }

  void on_item_deleted(node_handle deleted) override {
    registered_ = false;
    edge_handle next = mode_ == escape_mode::forward
                           ? refresh_edge(sg_->backend(), e_, deleted)
                           : SG::null_edge();
    assign(next);
  }

private:
  void assign(edge_handle e) {
    e_ = e;
    if (valid()) {
      sg_->register_at(e_, this);
      registered_ = true;
    }
  }
  void drop() {
    if (registered_) {
      sg_->deregister_at(e_, this);
      registered_ = false;
    }
  }

  SG* sg_;
  edge_handle e_ = SG::null_edge();
  escape_mode mode_;
  bool registered_ = false;
};

/// Safe adjacency iterator over leaving edges. Registered under its current
/// edge. When the adjacent (target) node dies the edge advances within the
/// same adjacency list; when the fixed node itself dies the iterator hunts
/// a new source node through the global edge order.
template <class SG>
class safe_out_adj_iterator : public SG::refresh_target {
public:
  using node_handle = typename SG::node_handle;
  using edge_handle = typename SG::edge_handle;

  safe_out_adj_iterator(SG& sg, node_handle v, escape_mode mode = escape_mode::forward)
      : sg_(&sg), mode_(mode) {
    assign(v, SG::is_null(v) ? SG::null_edge() : sg.first_out_edge(v));
  }
  safe_out_adj_iterator(SG& sg, node_handle v, edge_handle e,
                        escape_mode mode = escape_mode::forward)
      : sg_(&sg), mode_(mode) {
    assign(v, (!SG::is_null(e) && sg.source(e) == v) ? e : SG::null_edge());
  }
  safe_out_adj_iterator(const safe_out_adj_iterator& o) : sg_(o.sg_), mode_(o.mode_) {
    assign(o.v_, o.e_);
  }
  safe_out_adj_iterator& operator=(const safe_out_adj_iterator& o) {
    if (this != &o) {
      drop();
      sg_ = o.sg_;
      mode_ = o.mode_;
      assign(o.v_, o.e_);
    }
    return *this;
  }
  ~safe_out_adj_iterator() override { drop(); }

  bool valid() const { return !SG::is_null(e_); }
  bool has_node() const { return !SG::is_null(v_); }
  node_handle get_node() const { return v_; }
  edge_handle get_edge() const { return e_; }

  safe_out_adj_iterator& operator++() {
    if (!valid()) throw usage_error("safe_out_adj_iterator: succ on invalid iterator");
    edge_handle next = sg_->advance_out(e_);
    drop();
    assign(v_, next);
    return *this;
  }

  void update(node_handle v) {
    drop();
    assign(v, SG::is_null(v) ? SG::null_edge() : sg_->first_out_edge(v));
  }
  void reset() { update(v_); }
  void make_invalid() {
    drop();
    e_ = SG::null_edge();
    v_ = SG::null_node();
  }

  safe_out_adj_iterator curr_adj() const {
    if (!valid()) throw usage_error("safe_out_adj_iterator: curr_adj on invalid iterator");
    return safe_out_adj_iterator(*sg_, sg_->target(e_), mode_);
  }

  /// New leaving edge from the fixed node to other's fixed node; marks it.
  void insert(const safe_out_adj_iterator& other) {
    edge_handle e = sg_->insert_edge(v_, other.v_);
    drop();
    assign(v_, e);
  }

  void del() {
    if (!valid()) throw usage_error("safe_out_adj_iterator: del on invalid iterator");
    edge_handle e = e_;
    registered_ = false;
    e_ = SG::null_edge();
    sg_->delete_edge(e, this);
  }

  void on_item_deleted(node_handle deleted) override {
    registered_ = false;
    if (mode_ == escape_mode::none) {
      e_ = SG::null_edge();
      v_ = SG::null_node();
      return;
    }
    const auto& g = sg_->backend();
    if (!SG::is_null(deleted) && v_ == deleted) {
      // fixed node is going away: acquire a new source from the refreshed edge
      edge_handle e = refresh_edge(g, e_, deleted);
      assign(sg_->source(e), e);
    } else {
      // the far endpoint (or just this edge) is going away: stay on the same
      // adjacency list, skipping anything that still touches the deleted node
      edge_handle e = g.advance_out(e_);
      while (!SG::is_null(e) && !SG::is_null(deleted) && g.target(e) == deleted)
        e = g.advance_out(e);
      assign(v_, e);
    }
  }

private:
  void assign(node_handle v, edge_handle e) {
    v_ = v;
    e_ = e;
    if (valid()) {
      sg_->register_at(e_, this);
      registered_ = true;
    }
  }
  void drop() {
    if (registered_) {
      sg_->deregister_at(e_, this);
      registered_ = false;
    }
  }

  SG* sg_;
  node_handle v_ = SG::null_node();
  edge_handle e_ = SG::null_edge();
  escape_mode mode_;
  bool registered_ = false;
};

/// Mirror of safe_out_adj_iterator for entering edges.
template <class SG>
class safe_in_adj_iterator : public SG::refresh_target {
public:
  using node_handle = typename SG::node_handle;
  using edge_handle = typename SG::edge_handle;

  safe_in_adj_iterator(SG& sg, node_handle v, escape_mode mode = escape_mode::forward)
      : sg_(&sg), mode_(mode) {
    assign(v, SG::is_null(v) ? SG::null_edge() : sg.first_in_edge(v));
  }
  safe_in_adj_iterator(SG& sg, node_handle v, edge_handle e,
                       escape_mode mode = escape_mode::forward)
      : sg_(&sg), mode_(mode) {
    assign(v, (!SG::is_null(e) && sg.target(e) == v) ? e : SG::null_edge());
  }
  safe_in_adj_iterator(const safe_in_adj_iterator& o) : sg_(o.sg_), mode_(o.mode_) {
    assign(o.v_, o.e_);
  }
  safe_in_adj_iterator& operator=(const safe_in_adj_iterator& o) {
    if (this != &o) {
      drop();
      sg_ = o.sg_;
      mode_ = o.mode_;
      assign(o.v_, o.e_);
    }
    return *this;
  }
  ~safe_in_adj_iterator() override { drop(); }

  bool valid() const { return !SG::is_null(e_); }
  bool has_node() const { return !SG::is_null(v_); }
  node_handle get_node() const { return v_; }
  edge_handle get_edge() const { return e_; }

  safe_in_adj_iterator& operator++() {
    if (!valid()) throw usage_error("safe_in_adj_iterator: succ on invalid iterator");
    edge_handle next = sg_->advance_in(e_);
    drop();
    assign(v_, next);
    return *this;
  }

  void update(node_handle v) {
    drop();
    assign(v, SG::is_null(v) ? SG::null_edge() : sg_->first_in_edge(v));
  }
  void make_invalid() {
    drop();
    e_ = SG::null_edge();
    v_ = SG::null_node();
  }

  safe_in_adj_iterator curr_adj() const {
    if (!valid()) throw usage_error("safe_in_adj_iterator: curr_adj on invalid iterator");
    return safe_in_adj_iterator(*sg_, sg_->source(e_), mode_);
  }

  void del() {
    if (!valid()) throw usage_error("safe_in_adj_iterator: del on invalid iterator");
    edge_handle e = e_;
    registered_ = false;
    e_ = SG::null_edge();
    sg_->delete_edge(e, this);
  }

  void on_item_deleted(node_handle deleted) override {
    registered_ = false;
    if (mode_ == escape_mode::none) {
      e_ = SG::null_edge();
      v_ = SG::null_node();
      return;
    }
    const auto& g = sg_->backend();
    if (!SG::is_null(deleted) && v_ == deleted) {
      edge_handle e = refresh_edge(g, e_, deleted);
      assign(sg_->target(e), e);
    } else {
      edge_handle e = g.advance_in(e_);
      while (!SG::is_null(e) && !SG::is_null(deleted) && g.source(e) == deleted)
        e = g.advance_in(e);
      assign(v_, e);
    }
  }

private:
  void assign(node_handle v, edge_handle e) {
    v_ = v;
    e_ = e;
    if (valid()) {
      sg_->register_at(e_, this);
      registered_ = true;
    }
  }
  void drop() {
    if (registered_) {
      sg_->deregister_at(e_, this);
      registered_ = false;
    }
  }

  SG* sg_;
  node_handle v_ = SG::null_node();
  edge_handle e_ = SG::null_edge();
  escape_mode mode_;
  bool registered_ = false;
};

}  // namespace graphkit
