#pragma once

#include <cstdint>
#include <random>
#include <unordered_set>
#include <vector>

#include "graphkit/errors.hpp"

namespace graphkit {

/// Deterministic uniform integer in [0, bound) built on raw 64-bit draws.
/// std::uniform_int_distribution is implementation-defined, so seeded runs
/// would not replay across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw usage_error("uniform_below: zero bound");
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// m distinct directed edges (u, v), u != v, drawn uniformly; no parallel
/// edges. Deterministic per seed.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> random_edges(std::uint64_t n,
                                                                         std::uint64_t m,
                                                                         std::uint64_t seed) {
  if (n == 0 && m > 0) throw input_error("random_edges: edges on empty node set");
  if (n > 0 && m > n * (n - 1)) throw input_error("random_edges: m exceeds n*(n-1)");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> used;
  used.reserve(m * 2);
  while (edges.size() < m) {
    std::uint64_t u = uniform_below(rng, n);
    std::uint64_t v = uniform_below(rng, n - 1);
    if (v >= u) ++v;
    std::uint64_t key = u * n + v;
    if (used.insert(key).second)
      edges.emplace_back(static_cast<std::uint32_t>(u), static_cast<std::uint32_t>(v));
  }
  return edges;
}

/// m distinct undirected pairs {u, v}, u != v, uniform, deterministic.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> random_undirected_edges(
    std::uint64_t n, std::uint64_t m, std::uint64_t seed) {
  if (n > 0 && m > n * (n - 1) / 2) throw input_error("random_undirected_edges: m too large");
  if (n == 0 && m > 0) throw input_error("random_undirected_edges: edges on empty node set");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  edges.reserve(m);
  std::unordered_set<std::uint64_t> used;
  while (edges.size() < m) {
    std::uint64_t u = uniform_below(rng, n);
    std::uint64_t v = uniform_below(rng, n - 1);
    if (v >= u) ++v;
    std::uint64_t a = u < v ? u : v;
    std::uint64_t b = u < v ? v : u;
    if (used.insert(a * n + b).second)
      edges.emplace_back(static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b));
  }
  return edges;
}

/// Random DAG edges: picks a hidden topological order and only emits
/// forward edges with respect to it.
inline std::vector<std::pair<std::uint32_t, std::uint32_t>> random_dag_edges(std::uint64_t n,
                                                                             std::uint64_t m,
                                                                             std::uint64_t seed) {
  if (n > 0 && m > n * (n - 1) / 2) throw input_error("random_dag_edges: m too large");
  std::mt19937_64 rng(seed);
  std::vector<std::uint32_t> order(n);
  for (std::uint64_t i = 0; i < n; ++i) order[i] = static_cast<std::uint32_t>(i);
  for (std::uint64_t i = n; i > 1; --i) std::swap(order[i - 1], order[uniform_below(rng, i)]);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
  std::unordered_set<std::uint64_t> used;
  while (edges.size() < m) {
    std::uint64_t a = uniform_below(rng, n);
    std::uint64_t b = uniform_below(rng, n - 1);
    if (b >= a) ++b;
    std::uint64_t lo = a < b ? a : b;
    std::uint64_t hi = a < b ? b : a;
    if (used.insert(lo * n + hi).second) edges.emplace_back(order[lo], order[hi]);
  }
  return edges;
}

}  // namespace graphkit
