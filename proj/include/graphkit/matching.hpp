#pragma once

#include <cstdint>
#include <vector>

#include "graphkit/aux_structures.hpp"
#include "graphkit/contraction.hpp"
#include "graphkit/errors.hpp"
#include "graphkit/graph_kernel.hpp"
#include "graphkit/iterators.hpp"

namespace graphkit {

/// A matching over an undirected graph represented as symmetric directed
/// edge pairs. The node-to-mate map is authoritative; an entry is a real
/// pair only when it is involutive (mate(mate(v)) == v). During blossom
/// expansion one-sided entries exist transiently and are cleaned up by the
/// level that owns them.
template <graph_kernel G>
class matching {
public:
  using node_handle = typename G::node_handle;
  using edge_handle = typename G::edge_handle;

  explicit matching(const G& g)
      : g_(&g), mate_(g, G::null_node()), mate_edge_(g, G::null_edge()) {}

  const G& graph() const { return *g_; }

  node_handle mate(node_handle v) const { return mate_[v]; }
  edge_handle mate_edge(node_handle v) const { return mate_edge_[v]; }
  bool is_matched(node_handle v) const {
    node_handle w = mate_[v];
    return !G::is_null(w) && mate_[w] == v;
  }

  /// Declares e's endpoints matched to each other. Earlier partners of the
  /// endpoints are left with one-sided entries on purpose.
  void match(edge_handle e) {
    node_handle u = g_->source(e);
    node_handle v = g_->target(e);
    mate_[u] = v;
    mate_edge_[u] = e;
    mate_[v] = u;
    mate_edge_[v] = e;
  }

  void unmatch_pair(node_handle v) {
    node_handle w = mate_[v];
    if (G::is_null(w) || !(mate_[w] == v))
      throw usage_error("matching: unmatch_pair on an unmatched node");
    clear(v);
    clear(w);
  }

  void clear(node_handle v) {
    mate_[v] = G::null_node();
    mate_edge_[v] = G::null_edge();
  }

  /// True if e's endpoints are matched to each other (twin-agnostic).
  bool is_matched_edge(edge_handle e) const {
    node_handle u = g_->source(e);
    node_handle v = g_->target(e);
    return mate_[u] == v && mate_[v] == u;
  }

  std::size_t cardinality() const {
    std::size_t matched_nodes = 0;
    for (auto v = g_->first_node(); !G::is_null(v); v = g_->advance_node(v))
      if (is_matched(v)) ++matched_nodes;
    return matched_nodes / 2;
  }

  std::vector<node_handle> matched_nodes() const {
    std::vector<node_handle> out;
    for (auto v = g_->first_node(); !G::is_null(v); v = g_->advance_node(v))
      if (is_matched(v)) out.push_back(v);
    return out;
  }

  /// One representative edge per pair.
  std::vector<edge_handle> edges() const {
    std::vector<edge_handle> out;
    for (auto v = g_->first_node(); !G::is_null(v); v = g_->advance_node(v)) {
      if (!is_matched(v)) continue;
      node_handle w = mate_[v];
      if (g_->node_index(v) < g_->node_index(w)) out.push_back(mate_edge_[v]);
    }
    return out;
  }

  /// No two pairs share an endpoint, every pair is involutive with a live
  /// edge between exactly its endpoints, and no one-sided entries remain.
  void validate() const {
    for (auto v = g_->first_node(); !G::is_null(v); v = g_->advance_node(v)) {
      node_handle w = mate_[v];
      if (G::is_null(w)) continue;
      if (!(mate_[w] == v)) throw internal_error("matching: one-sided mate entry");
      edge_handle e = mate_edge_[v];
      if (!g_->contains(e)) throw internal_error("matching: mate edge not in graph");
      node_handle a = g_->source(e);
      node_handle b = g_->target(e);
      if (!((a == v && b == w) || (a == w && b == v)))
        throw internal_error("matching: mate edge endpoints disagree with mate map");
    }
  }

private:
  const G* g_;
  node_map<G, node_handle> mate_;
  node_map<G, edge_handle> mate_edge_;
};

/// Replaces m by m (+) p for an augmenting path p given as its edge
/// sequence. Validates the precondition: odd length, endpoints unmatched,
/// edges alternating unmatched/matched, consecutive edges chained.
template <graph_kernel G>
matching<G> augment(matching<G> m, const std::vector<typename G::edge_handle>& path) {
  const G& g = m.graph();
  if (path.empty() || path.size() % 2 == 0)
    throw input_error("augment: path must have odd length");

  // Recover the node sequence to check chaining and endpoints.
  auto endpoints_share = [&](typename G::edge_handle a, typename G::edge_handle b,
                             typename G::node_handle& shared) {
    for (auto x : {g.source(a), g.target(a)})
      for (auto y : {g.source(b), g.target(b)})
        if (x == y) {
          shared = x;
          return true;
        }
    return false;
  };

  typename G::node_handle first_end, last_end;
  if (path.size() == 1) {
    first_end = g.source(path[0]);
    last_end = g.target(path[0]);
  } else {
    typename G::node_handle shared;
    if (!endpoints_share(path[0], path[1], shared)) throw input_error("augment: path not chained");
    first_end = g.source(path[0]) == shared ? g.target(path[0]) : g.source(path[0]);
    typename G::node_handle cur = shared;
    for (std::size_t i = 1; i < path.size(); ++i) {
      auto s = g.source(path[i]);
      auto t = g.target(path[i]);
      if (!(s == cur) && !(t == cur)) throw input_error("augment: path not chained");
      cur = (s == cur) ? t : s;
    }
    last_end = cur;
  }
  if (m.is_matched(first_end) || m.is_matched(last_end))
    throw input_error("augment: path endpoints must be unmatched");
  for (std::size_t i = 0; i < path.size(); ++i) {
    bool want_matched = (i % 2 == 1);
    if (m.is_matched_edge(path[i]) != want_matched)
      throw input_error("augment: path is not alternating");
  }

  for (std::size_t i = 1; i < path.size(); i += 2) m.unmatch_pair(g.source(path[i]));
  for (std::size_t i = 0; i < path.size(); i += 2) m.match(path[i]);
  return m;
}

enum class matching_mode { bipartite, general };
enum class node_label : std::uint8_t { unlabeled, even, odd };

struct matching_stats {
  std::size_t searches = 0;
  std::size_t augmentations = 0;
  std::size_t contractions = 0;
  std::size_t expansions = 0;
  std::size_t max_contractions_per_search = 0;
};

struct matching_options {
  /// Run the per-expansion structural checks (interior pair count, anchor
  /// uniqueness, mate involution at the end of every unshrink).
  bool check_expansions = false;
};

/// Maximum-cardinality matching as a loop kernel: one next() takes the next
/// unmatched root, grows an alternating tree (FIFO work list), augments the
/// contracted matching when an augmenting path appears, and unshrinks all
/// blossoms found during the search.
///
/// Blossoms are detected as equally-labeled adjacent classes; both
/// predecessor legs are traced in lockstep to the base, the cycle is
/// contracted in one single step on the tree-mode contracted graph (list
/// coordination), and the event is pushed on a stack so unshrinking can
/// expand and rematch strictly in reverse order. The base class keeps its
/// even label, and absorbed odd members re-enter the work list so each
/// original adjacency list is scanned as even exactly once per search.
template <graph_kernel G>
class matching_stepper {
public:
  using node_handle = typename G::node_handle;
  using edge_handle = typename G::edge_handle;

  matching_stepper(const G& g, matching_mode mode, matching_options opts = {})
      : g_(&g),
        mode_(mode),
        opts_(opts),
        cg_(g, contraction_mode::tree),
        m_(g),
        it_(g),
        label_(g.node_capacity(), node_label::unlabeled),
        pred_edge_(g.node_capacity(), G::null_edge()),
        scanned_(g.node_capacity(), 0) {
    skip_matched_roots();
  }

  matching_stepper(const matching_stepper&) = delete;
  matching_stepper& operator=(const matching_stepper&) = delete;

  bool finished() const { return !it_.valid(); }
  const matching<G>& result() const { return m_; }
  const matching_stats& stats() const { return stats_; }
  node_handle current_root() const { return it_.valid() ? it_.get_node() : G::null_node(); }
  const contracted_graph<G>& view() const { return cg_; }

  /// One root: search, augment on success, always unshrink.
  void next() {
    if (finished()) throw usage_error("matching_stepper: next on finished algorithm");
    node_handle root = it_.get_node();
    ++stats_.searches;
    search_contractions_ = 0;
    bool found = search(root);
    if (found) {
      auto path = collect_path();
      apply_path(path);
      ++stats_.augmentations;
    }
    unshrink();
    if (search_contractions_ > stats_.max_contractions_per_search)
      stats_.max_contractions_per_search = search_contractions_;
    std::size_t budget = g_->node_count() / 2;
    if (search_contractions_ > budget)
      throw internal_error("matching_stepper: more than n/2 contractions in one search");
    ++it_;
    skip_matched_roots();
  }

  void finish_algo() {
    while (!finished()) next();
  }

private:
  struct blossom_record {
    std::vector<node_handle> classes;  // cycle order, base first
    std::vector<edge_handle> edges;    // edges[i] joins classes[i] and classes[i+1 mod]
  };

  std::size_t idx(node_handle v) const { return g_->node_index(v); }
  node_label label_of(node_handle v) const { return label_[idx(cg_.rep(v))]; }

  void skip_matched_roots() {
    while (it_.valid() && m_.is_matched(it_.get_node())) ++it_;
  }

  bool search(node_handle root) {
    // in each new search all nodes start unlabeled
    std::fill(label_.begin(), label_.end(), node_label::unlabeled);
    std::fill(pred_edge_.begin(), pred_edge_.end(), G::null_edge());
    std::fill(scanned_.begin(), scanned_.end(), 0);
    list_.clear();
    found_ = false;
    found_endpoint_ = G::null_node();
    root_ = root;

    label_[idx(root)] = node_label::even;
    list_.append(root);
    while (!list_.empty() && !found_) {
      node_handle x = list_.pop();
      switch (label_of(x)) {
        case node_label::even:
          if (!scanned_[idx(x)]) {
            scanned_[idx(x)] = 1;
            examine_even(x);
          }
          break;
        case node_label::odd:
          examine_odd(x);
          break;
        case node_label::unlabeled:
          throw internal_error("matching_stepper: unlabeled node on work list");
      }
    }
    return found_;
  }

  /// Scans x's own adjacency list in the contracted view (internal edges
  /// skipped). Unlabeled neighbors become odd; an unmatched one completes an
  /// augmenting path; an even one closes a blossom.
  void examine_even(node_handle x) {
    for (edge_handle e = cg_.first_outgoing_edge_of_member(x);
         !G::is_null(e) && !found_; e = cg_.next_outgoing_edge_of_member(e)) {
      node_handle j = g_->target(e);
      switch (label_of(j)) {
        case node_label::unlabeled: {
          label_[idx(j)] = node_label::odd;
          pred_edge_[idx(j)] = e;
          if (!m_.is_matched(j)) {
            found_ = true;
            found_endpoint_ = j;
            return;
          }
          list_.append(j);
          break;
        }
        case node_label::even:
          if (mode_ == matching_mode::general) contract_blossom(x, j, e);
          break;
        case node_label::odd:
          break;
      }
    }
  }

  /// Follows the mate edge of an odd node; the mate becomes even. A mate
  /// that already reads odd closes a blossom through the matched edge.
  void examine_odd(node_handle x) {
    node_handle j = m_.mate(x);
    if (G::is_null(j)) throw internal_error("matching_stepper: odd node without mate");
    switch (label_of(j)) {
      case node_label::unlabeled:
        label_[idx(j)] = node_label::even;
        pred_edge_[idx(j)] = m_.mate_edge(x);
        list_.append(j);
        break;
      case node_label::odd:
        if (mode_ == matching_mode::general) contract_blossom(x, j, m_.mate_edge(x));
        break;
      case node_label::even:
        break;
    }
  }

  node_handle parent_class(node_handle cls, edge_handle e) const {
    node_handle s = cg_.rep(g_->source(e));
    node_handle t = cg_.rep(g_->target(e));
    if (s == cls) return t;
    if (t == cls) return s;
    throw internal_error("matching_stepper: predecessor edge detached from its class");
  }

  /// Traces the predecessor entries from both sides of the bridge edge to
  /// the base (the legs grow in lockstep; the work list is a queue, so they
  /// have equal length), then contracts the whole cycle in one single step.
  void contract_blossom(node_handle i, node_handle j, edge_handle bridge) {
    node_handle ci = cg_.rep(i);
    node_handle cj = cg_.rep(j);
    if (ci == cj) throw internal_error("matching_stepper: blossom bridge inside one class");

    std::vector<node_handle> leg_i{ci}, leg_j{cj};
    std::vector<edge_handle> leg_i_edges, leg_j_edges;
    std::size_t guard = g_->node_count() + 1;
    while (!(leg_i.back() == leg_j.back())) {
      if (leg_i.size() > guard)
        throw internal_error("matching_stepper: blossom legs failed to meet");
      edge_handle ei = pred_edge_[idx(leg_i.back())];
      edge_handle ej = pred_edge_[idx(leg_j.back())];
      if (G::is_null(ei) || G::is_null(ej))
        throw internal_error("matching_stepper: blossom leg ran past the root");
      leg_i_edges.push_back(ei);
      leg_i.push_back(parent_class(leg_i.back(), ei));
      leg_j_edges.push_back(ej);
      leg_j.push_back(parent_class(leg_j.back(), ej));
    }

    blossom_record rec;
    // cycle order: base, then down leg_i, across the bridge, up leg_j
    std::size_t k = leg_i_edges.size();
    rec.classes.push_back(leg_i.back());  // base
    for (std::size_t s = k; s-- > 0;) rec.classes.push_back(leg_i[s]);
    for (std::size_t s = 0; s < k; ++s) rec.classes.push_back(leg_j[s]);
    for (std::size_t s = k; s-- > 0;) rec.edges.push_back(leg_i_edges[s]);
    rec.edges.push_back(bridge);
    for (std::size_t s = 0; s < k; ++s) rec.edges.push_back(leg_j_edges[s]);

    // one contraction level, base first so it stays the representative
    cg_.contract_list(rec.classes);
    ++stats_.contractions;
    ++search_contractions_;

    // absorbed odd classes are now part of an even supernode; their own
    // adjacency lists still need an even scan
    for (node_handle c : rec.classes)
      if (label_[idx(c)] == node_label::odd) list_.append(c);

    blist_.push_back(std::move(rec));
  }

  /// Walks pred edges from the found endpoint back to the root class.
  std::vector<edge_handle> collect_path() {
    std::vector<edge_handle> path;
    node_handle cur = cg_.rep(found_endpoint_);
    node_handle root_class = cg_.rep(root_);
    std::size_t guard = g_->node_count() + 1;
    while (!(cur == root_class)) {
      if (path.size() > guard) throw internal_error("matching_stepper: augmenting path walk loops");
      edge_handle e = pred_edge_[idx(cur)];
      if (G::is_null(e)) throw internal_error("matching_stepper: augmenting path broke off");
      path.push_back(e);
      cur = parent_class(cur, e);
    }
    return path;
  }

  /// Symmetric difference on the contracted matching: path edges alternate
  /// starting unmatched from the endpoint; matched ones dissolve, unmatched
  /// ones become pairs whose endpoints anchor their classes.
  void apply_path(const std::vector<edge_handle>& path) {
    for (std::size_t s = 0; s < path.size(); ++s) {
      bool want_matched = (s % 2 == 1);
      if (m_.is_matched_edge(path[s]) != want_matched)
        throw internal_error("matching_stepper: augmenting path does not alternate");
    }
    for (std::size_t s = 1; s < path.size(); s += 2) m_.unmatch_pair(g_->source(path[s]));
    for (std::size_t s = 0; s < path.size(); s += 2) m_.match(path[s]);
  }

  /// Expands all blossoms of this search in reverse order of creation and
  /// recomputes the matching inside each: the member matched externally
  /// becomes the new base, and every second edge around the cycle from it
  /// gets matched.
  void unshrink() {
    while (!blist_.empty()) {
      blossom_record rec = std::move(blist_.back());
      blist_.pop_back();
      cg_.expand_top();
      ++stats_.expansions;
      rematch(rec);
    }
    if (opts_.check_expansions) m_.validate();
  }

  void rematch(const blossom_record& rec) {
    // union of original nodes across the cycle classes
    std::vector<node_handle> uni;
    for (node_handle c : rec.classes)
      for (node_handle x : cg_.nodes(c)) uni.push_back(x);
    in_uni_.assign(g_->node_capacity(), 0);
    for (node_handle x : uni) in_uni_[idx(x)] = 1;

    // the entry: the unique member matched (involutively) outside the union
    node_handle entry = G::null_node();
    std::size_t anchors = 0;
    for (node_handle x : uni) {
      node_handle w = m_.mate(x);
      if (!G::is_null(w) && m_.is_matched(x) && !in_uni_[idx(w)]) {
        entry = x;
        ++anchors;
      }
    }
    if (opts_.check_expansions && anchors > 1)
      throw internal_error("matching_stepper: blossom matched outside more than once");

    // one-sided leftovers from augmentation or outer rematching levels
    for (node_handle x : uni) {
      node_handle w = m_.mate(x);
      if (!G::is_null(w) && !(m_.mate(w) == x)) m_.clear(x);
    }

    std::size_t entry_pos = 0;
    if (!G::is_null(entry)) {
      node_handle entry_class = cg_.rep(entry);
      for (std::size_t s = 0; s < rec.classes.size(); ++s)
        if (cg_.rep(rec.classes[s]) == entry_class) {
          entry_pos = s;
          break;
        }
    }
    if (entry_pos != 0) {
      // drop the old interior matching at this level (pairs crossing cycle
      // classes), then match every second edge starting after the entry
      for (node_handle x : uni) {
        node_handle w = m_.mate(x);
        if (!G::is_null(w) && m_.is_matched(x) && in_uni_[idx(w)] &&
            !(cg_.rep(x) == cg_.rep(w)))
          m_.unmatch_pair(x);
      }
      std::size_t len = rec.edges.size();
      for (std::size_t step = 1; step + 1 < len; step += 2)
        m_.match(rec.edges[(entry_pos + step) % len]);
    }

    if (opts_.check_expansions) {
      std::size_t inside = 0;
      for (node_handle x : uni) {
        node_handle w = m_.mate(x);
        if (!G::is_null(w) && m_.is_matched(x) && in_uni_[idx(w)]) ++inside;
      }
      if (inside != rec.edges.size() - 1)
        throw internal_error("matching_stepper: interior pair count changed across expansion");
    }
  }

  const G* g_;
  matching_mode mode_;
  matching_options opts_;
  contracted_graph<G> cg_;
  matching<G> m_;
  node_iterator<G> it_;
  node_handle root_ = G::null_node();
  fifo_queue<node_handle> list_;
  std::vector<node_label> label_;
  std::vector<edge_handle> pred_edge_;
  std::vector<char> scanned_;
  std::vector<char> in_uni_;
  std::vector<blossom_record> blist_;
  bool found_ = false;
  node_handle found_endpoint_ = G::null_node();
  matching_stats stats_;
  std::size_t search_contractions_ = 0;
};

/// Runs the stepper to completion.
template <graph_kernel G>
matching<G> max_matching(const G& g, matching_mode mode, matching_options opts = {}) {
  matching_stepper<G> alg(g, mode, opts);
  alg.finish_algo();
  return alg.result();
}

/// Exact maximum cardinality by exhaustive search with pruning; the test
/// oracle. Refuses graphs with more than 26 undirected edges.
template <graph_kernel G>
std::size_t brute_force_max_matching(const G& g) {
  // canonical undirected edge set from the symmetric representation
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  for (auto e = g.first_edge(); !G::is_null(e); e = g.advance_edge(e)) {
    auto u = static_cast<std::uint32_t>(g.node_index(g.source(e)));
    auto v = static_cast<std::uint32_t>(g.node_index(g.target(e)));
    if (u < v) edges.emplace_back(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  if (edges.size() > 26) throw input_error("brute_force_max_matching: too many edges");

  std::vector<char> used(g.node_capacity(), 0);
  std::size_t best = 0;
  auto rec = [&](auto&& self, std::size_t i, std::size_t taken) -> void {
    if (taken + (edges.size() - i) <= best) return;  // cannot beat best
    if (i == edges.size()) {
      best = taken;
      return;
    }
    auto [u, v] = edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      self(self, i + 1, taken + 1);
      used[u] = used[v] = 0;
    }
    self(self, i + 1, taken);
  };
  rec(rec, 0, 0);
  return best;
}

/// Two-colorability check for the symmetric representation.
template <graph_kernel G>
bool is_bipartite(const G& g) {
  node_map<G, int> color(g, -1);
  std::vector<typename G::node_handle> stack;
  for (auto s = g.first_node(); !G::is_null(s); s = g.advance_node(s)) {
    if (color[s] != -1) continue;
    color[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      auto v = stack.back();
      stack.pop_back();
      for (auto e = g.first_out_edge(v); !G::is_null(e); e = g.advance_out(e)) {
        auto w = g.target(e);
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace graphkit
