#pragma once

#include <concepts>
#include <cstddef>
#include <vector>

namespace graphkit {

/// The backend contract every iterator and algorithm is written against.
///
/// A full bidirectional backend implements 19 functions. The forward
/// navigation subset (13) is enough for read-only traversal:
///
///   node_count, edge_count, first_node, advance_node, first_edge,
///   advance_edge, first_out_edge, advance_out, first_in_edge, advance_in,
///   source, target, contains (validity; overloaded for both handle kinds).
///
/// The remaining 6 are mutation plus backward anchors and only mutable
/// backends carry them:
///
///   insert_node, insert_edge, delete_node, delete_edge, last_node,
///   last_edge.
///
/// All advance_* functions are total: advancing a null handle yields the
/// null handle. first_node/advance_node enumerate sigma_V, every live node
/// exactly once; first_edge/advance_edge likewise for sigma_E;
/// first_out_edge/advance_out spell out sigma_out(v, .), and the in-pair
/// sigma_in(v, .).
template <class G>
concept graph_kernel = requires(const G& g, typename G::node_handle v, typename G::edge_handle e) {
  { g.node_count() } -> std::convertible_to<std::size_t>;
  { g.edge_count() } -> std::convertible_to<std::size_t>;
  { g.first_node() } -> std::same_as<typename G::node_handle>;
  { g.advance_node(v) } -> std::same_as<typename G::node_handle>;
  { g.first_edge() } -> std::same_as<typename G::edge_handle>;
  { g.advance_edge(e) } -> std::same_as<typename G::edge_handle>;
  { g.first_out_edge(v) } -> std::same_as<typename G::edge_handle>;
  { g.advance_out(e) } -> std::same_as<typename G::edge_handle>;
  { g.first_in_edge(v) } -> std::same_as<typename G::edge_handle>;
  { g.advance_in(e) } -> std::same_as<typename G::edge_handle>;
  { g.source(e) } -> std::same_as<typename G::node_handle>;
  { g.target(e) } -> std::same_as<typename G::node_handle>;
  { g.contains(v) } -> std::convertible_to<bool>;
  { g.contains(e) } -> std::convertible_to<bool>;
  { G::null_node() } -> std::same_as<typename G::node_handle>;
  { G::null_edge() } -> std::same_as<typename G::edge_handle>;
  { G::is_null(v) } -> std::convertible_to<bool>;
  { G::is_null(e) } -> std::convertible_to<bool>;
  { g.node_index(v) } -> std::convertible_to<std::size_t>;
  { g.node_capacity() } -> std::convertible_to<std::size_t>;
};

template <class G>
concept mutable_graph_kernel =
    graph_kernel<G> && requires(G& g, typename G::node_handle v, typename G::edge_handle e) {
      { g.insert_node() } -> std::same_as<typename G::node_handle>;
      { g.insert_edge(v, v) } -> std::same_as<typename G::edge_handle>;
      g.delete_node(v);
      g.delete_edge(e);
      { g.last_node() } -> std::same_as<typename G::node_handle>;
      { g.last_edge() } -> std::same_as<typename G::edge_handle>;
    };

/// Attribute storage keyed by node, usable as the handler of a handler
/// accessor. Sized by node_capacity so deleted slots keep their cell.
template <graph_kernel G, class T>
class node_map {
public:
  using value_type = T;
  node_map() = default;
  explicit node_map(const G& g, T init = T()) : g_(&g), data_(g.node_capacity(), init) {}

  typename std::vector<T>::reference operator[](typename G::node_handle v) {
    grow(g_->node_index(v));
    return data_[g_->node_index(v)];
  }
  typename std::vector<T>::const_reference operator[](typename G::node_handle v) const {
    return data_[g_->node_index(v)];
  }

  void fill(const T& val) { data_.assign(data_.size(), val); }

private:
  void grow(std::size_t i) {
    if (i >= data_.size()) data_.resize(i + 1);
  }
  const G* g_ = nullptr;
  std::vector<T> data_;
};

template <graph_kernel G, class T>
class edge_map {
public:
  using value_type = T;
  edge_map() = default;
  explicit edge_map(const G& g, T init = T()) : g_(&g), data_(g.edge_capacity(), init) {}

  typename std::vector<T>::reference operator[](typename G::edge_handle e) {
    grow(g_->edge_index(e));
    return data_[g_->edge_index(e)];
  }
  typename std::vector<T>::const_reference operator[](typename G::edge_handle e) const {
    return data_[g_->edge_index(e)];
  }

  void fill(const T& val) { data_.assign(data_.size(), val); }

private:
  void grow(std::size_t i) {
    if (i >= data_.size()) data_.resize(i + 1);
  }
  const G* g_ = nullptr;
  std::vector<T> data_;
};

}  // namespace graphkit
