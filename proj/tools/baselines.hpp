#pragma once

// Hand-specialized reference loops over a plain CSR structure. These are the
// baselines the generic implementations are timed against; they share no
// code with the library.

#include <cstdint>
#include <queue>
#include <vector>

namespace baseline {

struct flat_graph {
  std::uint32_t n = 0;
  std::vector<std::uint32_t> off;   // n+1
  std::vector<std::uint32_t> dst;   // m, grouped by source
  std::vector<long long> w;         // parallel to dst
  std::vector<std::uint32_t> in_off, in_src;  // transpose, for scc

  static flat_graph from_edges(std::uint32_t n,
                               const std::vector<std::pair<std::uint32_t, std::uint32_t>>& edges,
                               const std::vector<long long>& weights) {
    flat_graph f;
    f.n = n;
    f.off.assign(n + 1, 0);
    for (auto [u, v] : edges) f.off[u + 1]++;
    for (std::uint32_t i = 0; i < n; ++i) f.off[i + 1] += f.off[i];
    f.dst.resize(edges.size());
    f.w.resize(edges.size());
    std::vector<std::uint32_t> cur(f.off.begin(), f.off.end() - 1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      std::uint32_t pos = cur[edges[i].first]++;
      f.dst[pos] = edges[i].second;
      f.w[pos] = weights.empty() ? 1 : weights[i];
    }
    f.in_off.assign(n + 1, 0);
    for (std::uint32_t d : f.dst) f.in_off[d + 1]++;
    for (std::uint32_t i = 0; i < n; ++i) f.in_off[i + 1] += f.in_off[i];
    f.in_src.resize(f.dst.size());
    std::vector<std::uint32_t> icur(f.in_off.begin(), f.in_off.end() - 1);
    for (std::uint32_t u = 0; u < n; ++u)
      for (std::uint32_t k = f.off[u]; k < f.off[u + 1]; ++k) f.in_src[icur[f.dst[k]]++] = u;
    return f;
  }
};

inline std::vector<std::uint32_t> bfs(const flat_graph& g, std::uint32_t src) {
  std::vector<char> seen(g.n, 0);
  std::vector<std::uint32_t> order;
  std::vector<std::uint32_t> q;
  std::size_t head = 0;
  seen[src] = 1;
  q.push_back(src);
  while (head < q.size()) {
    std::uint32_t v = q[head++];
    order.push_back(v);
    for (std::uint32_t k = g.off[v]; k < g.off[v + 1]; ++k) {
      std::uint32_t w = g.dst[k];
      if (!seen[w]) {
        seen[w] = 1;
        q.push_back(w);
      }
    }
  }
  return order;
}

inline std::vector<std::uint32_t> dfs(const flat_graph& g, std::uint32_t src) {
  std::vector<char> seen(g.n, 0);
  std::vector<std::uint32_t> order, st;
  seen[src] = 1;
  st.push_back(src);
  while (!st.empty()) {
    std::uint32_t v = st.back();
    st.pop_back();
    order.push_back(v);
    for (std::uint32_t k = g.off[v]; k < g.off[v + 1]; ++k) {
      std::uint32_t w = g.dst[k];
      if (!seen[w]) {
        seen[w] = 1;
        st.push_back(w);
      }
    }
  }
  return order;
}

inline std::vector<long long> dijkstra(const flat_graph& g, std::uint32_t src) {
  constexpr long long inf = std::numeric_limits<long long>::max() / 4;
  std::vector<long long> d(g.n, inf);
  d[src] = 0;
  using qe = std::pair<long long, std::uint32_t>;
  std::priority_queue<qe, std::vector<qe>, std::greater<>> pq;
  pq.push({0, src});
  while (!pq.empty()) {
    auto [dist, u] = pq.top();
    pq.pop();
    if (dist > d[u]) continue;
    for (std::uint32_t k = g.off[u]; k < g.off[u + 1]; ++k) {
      std::uint32_t v = g.dst[k];
      long long c = dist + g.w[k];
      if (c < d[v]) {
        d[v] = c;
        pq.push({c, v});
      }
    }
  }
  return d;
}

inline std::vector<std::uint32_t> topo(const flat_graph& g, bool* cyclic = nullptr) {
  std::vector<std::uint32_t> indeg(g.n, 0);
  for (std::uint32_t d : g.dst) indeg[d]++;
  std::vector<std::uint32_t> q;
  std::size_t head = 0;
  for (std::uint32_t v = 0; v < g.n; ++v)
    if (indeg[v] == 0) q.push_back(v);
  std::vector<std::uint32_t> order;
  while (head < q.size()) {
    std::uint32_t v = q[head++];
    order.push_back(v);
    for (std::uint32_t k = g.off[v]; k < g.off[v + 1]; ++k)
      if (--indeg[g.dst[k]] == 0) q.push_back(g.dst[k]);
  }
  if (cyclic) *cyclic = order.size() != g.n;
  return order;
}

/// Two-pass component computation with an explicit stack; component ids are
/// assigned in decreasing finishing-time seed order, matching the stepwise
/// version.
inline std::vector<int> scc(const flat_graph& g) {
  std::vector<char> seen(g.n, 0);
  std::vector<std::uint32_t> finish_stack;
  finish_stack.reserve(g.n);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> st;  // node, edge cursor
  for (std::uint32_t root = 0; root < g.n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    st.push_back({root, g.off[root]});
    while (!st.empty()) {
      auto& [v, k] = st.back();
      if (k < g.off[v + 1]) {
        std::uint32_t w = g.dst[k++];
        if (!seen[w]) {
          seen[w] = 1;
          st.push_back({w, g.off[w]});
        }
      } else {
        finish_stack.push_back(v);
        st.pop_back();
      }
    }
  }
  std::vector<int> comp(g.n, -1);
  int c = -1;
  std::vector<std::uint32_t> dstack;
  for (std::size_t i = finish_stack.size(); i-- > 0;) {
    std::uint32_t seed = finish_stack[i];
    if (comp[seed] != -1) continue;
    ++c;
    comp[seed] = c;
    dstack.push_back(seed);
    while (!dstack.empty()) {
      std::uint32_t v = dstack.back();
      dstack.pop_back();
      for (std::uint32_t k = g.in_off[v]; k < g.in_off[v + 1]; ++k) {
        std::uint32_t u = g.in_src[k];
        if (comp[u] == -1) {
          comp[u] = c;
          dstack.push_back(u);
        }
      }
    }
  }
  return comp;
}

}  // namespace baseline
