#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "graphkit/graphkit.hpp"
#include "helpers.hpp"

using namespace graphkit;
using testutil::build_sym;

namespace {

using pairset = std::set<std::pair<std::size_t, std::size_t>>;

pairset pairs_of(const matching<adj_list_graph>& m) {
  pairset out;
  const auto& g = m.graph();
  for (auto v = g.first_node(); !adj_list_graph::is_null(v); v = g.advance_node(v)) {
    if (!m.is_matched(v)) continue;
    auto a = g.node_index(v);
    auto b = g.node_index(m.mate(v));
    out.insert({std::min(a, b), std::max(a, b)});
  }
  return out;
}

matching<adj_list_graph> matching_from(const testutil::built_graph& bg,
                                       const std::vector<std::pair<std::uint32_t, std::uint32_t>>& pairs) {
  matching<adj_list_graph> m(bg.g);
  for (auto [u, v] : pairs) {
    for (auto e = bg.g.first_out_edge(bg.nodes[u]); !adj_list_graph::is_null(e);
         e = bg.g.advance_out(e)) {
      if (bg.g.target(e) == bg.nodes[v]) {
        m.match(e);
        break;
      }
    }
  }
  return m;
}

adj_list_graph::edge_handle edge_between(const testutil::built_graph& bg, std::uint32_t u,
                                         std::uint32_t v) {
  for (auto e = bg.g.first_out_edge(bg.nodes[u]); !adj_list_graph::is_null(e);
       e = bg.g.advance_out(e))
    if (bg.g.target(e) == bg.nodes[v]) return e;
  return adj_list_graph::null_edge();
}

// The worked matching example: nodes named 1..6 in the figures, indices one
// less here. Matching {2-3, 5-6}; 1-2-3-6-5-4 is augmenting.
testutil::built_graph example_graph() {
  return build_sym(6, {{0, 1}, {1, 2}, {2, 5}, {4, 5}, {3, 4}, {1, 5}, {2, 4}});
}

}  // namespace

TEST_CASE("augmenting a single free edge") {
  auto bg = build_sym(2, {{0, 1}});
  matching<adj_list_graph> m(bg.g);
  auto m2 = augment(m, {bg.edges[0]});
  REQUIRE(m2.cardinality() == 1);
  REQUIRE(pairs_of(m2) == pairset{{0, 1}});
}

TEST_CASE("augmenting the worked example path raises the cardinality to three") {
  auto bg = example_graph();
  auto m = matching_from(bg, {{1, 2}, {4, 5}});
  REQUIRE(m.cardinality() == 2);
  std::vector<adj_list_graph::edge_handle> path = {
      edge_between(bg, 0, 1), edge_between(bg, 1, 2), edge_between(bg, 2, 5),
      edge_between(bg, 5, 4), edge_between(bg, 4, 3)};
  auto m2 = augment(m, path);
  REQUIRE(m2.cardinality() == 3);
  m2.validate();
  // previously matched nodes stay matched
  for (std::size_t i : {1, 2, 4, 5}) REQUIRE(m2.is_matched(bg.nodes[i]));
  // symmetric difference of the two matchings is exactly the path's edges
  pairset before = pairs_of(m), after = pairs_of(m2), diff;
  for (const auto& p : before)
    if (!after.count(p)) diff.insert(p);
  for (const auto& p : after)
    if (!before.count(p)) diff.insert(p);
  REQUIRE(diff == pairset{{0, 1}, {1, 2}, {2, 5}, {4, 5}, {3, 4}});
}

TEST_CASE("augment validates its path precondition") {
  auto bg = example_graph();
  auto m = matching_from(bg, {{1, 2}, {4, 5}});
  // even length
  REQUIRE_THROWS_AS(augment(m, {edge_between(bg, 0, 1), edge_between(bg, 1, 2)}), input_error);
  // not alternating
  REQUIRE_THROWS_AS(augment(m, {edge_between(bg, 0, 1)}), input_error);  // endpoint 1 matched
  // not chained
  REQUIRE_THROWS_AS(
      augment(matching<adj_list_graph>(bg.g),
              {edge_between(bg, 0, 1), edge_between(bg, 4, 5), edge_between(bg, 2, 5)}),
      input_error);
}

TEST_CASE("general matching on paths and small cycles") {
  auto p3 = build_sym(4, {{0, 1}, {1, 2}, {2, 3}});
  REQUIRE(max_matching(p3.g, matching_mode::general).cardinality() == 2);

  for (std::size_t n : {3u, 5u, 7u, 9u}) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> cyc;
    for (std::uint32_t i = 0; i < n; ++i) cyc.push_back({i, static_cast<std::uint32_t>((i + 1) % n)});
    auto bg = build_sym(n, cyc);
    matching_options opts;
    opts.check_expansions = true;
    matching_stepper<adj_list_graph> alg(bg.g, matching_mode::general, opts);
    alg.finish_algo();
    REQUIRE(alg.result().cardinality() == n / 2);
    REQUIRE(alg.result().cardinality() == brute_force_max_matching(bg.g));
    if (n == 5) REQUIRE(alg.stats().contractions >= 1);
  }
}

TEST_CASE("triangle flower: blossom contracted at the root, matching stays valid") {
  auto bg = build_sym(3, {{0, 1}, {1, 2}, {2, 0}});
  matching_options opts;
  opts.check_expansions = true;
  matching_stepper<adj_list_graph> alg(bg.g, matching_mode::general, opts);
  alg.finish_algo();
  REQUIRE(alg.result().cardinality() == 1);
  REQUIRE(alg.stats().contractions == 1);  // the failed third-root search shrinks the triangle
  REQUIRE(alg.stats().max_contractions_per_search <= 1);  // n/2 budget for n = 3
  alg.result().validate();
}

TEST_CASE("the figure 4.11 run: two nested blossoms, final cardinality three") {
  auto bg = build_sym(6, {{0, 5}, {1, 4}, {1, 2}, {2, 4}, {0, 2}, {4, 5}, {0, 3}});
  matching_options opts;
  opts.check_expansions = true;
  matching_stepper<adj_list_graph> alg(bg.g, matching_mode::general, opts);
  alg.finish_algo();
  REQUIRE(alg.result().cardinality() == 3);
  REQUIRE(alg.stats().augmentations == 3);
  REQUIRE(alg.stats().contractions == 2);  // 2-1-4, then 5-0-(2-1-4)
  REQUIRE(alg.stats().expansions == 2);
  alg.result().validate();
  REQUIRE(brute_force_max_matching(bg.g) == 3);
}

TEST_CASE("entering an expanded blossom at its base changes nothing inside") {
  auto bg = build_sym(10, {{0, 1}, {2, 3}, {1, 2}, {1, 3}, {4, 5}, {6, 0}, {6, 4}, {5, 8}, {8, 9}, {9, 7}});
  matching_options opts;
  opts.check_expansions = true;
  matching_stepper<adj_list_graph> alg(bg.g, matching_mode::general, opts);
  alg.finish_algo();
  const auto& m = alg.result();
  REQUIRE(alg.stats().contractions == 1);
  REQUIRE(m.cardinality() == 5);
  // the blossom 1-2-3 was off the augmenting path; its interior pair survives
  REQUIRE(m.mate(bg.nodes[2]) == bg.nodes[3]);
  REQUIRE(m.mate(bg.nodes[0]) == bg.nodes[1]);
  m.validate();
}

TEST_CASE("off-base entry rotates the interior matching, keeping its size") {
  // pentagon plus a pendant: the augmenting path enters the contracted
  // 5-cycle away from its old base
  auto bg = build_sym(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 0}});
  matching_options opts;
  opts.check_expansions = true;
  matching_stepper<adj_list_graph> alg(bg.g, matching_mode::general, opts);
  alg.finish_algo();
  REQUIRE(alg.stats().contractions == 1);
  REQUIRE(alg.result().cardinality() == 3);  // perfect on six nodes
  REQUIRE(alg.result().is_matched(bg.nodes[5]));
  alg.result().validate();
}

TEST_CASE("matched node set grows monotonically across augmentations") {
  auto edges = random_undirected_edges(12, 20, 9);
  auto bg = build_sym(12, edges);
  matching_stepper<adj_list_graph> alg(bg.g, matching_mode::general);
  std::set<std::size_t> previous;
  while (!alg.finished()) {
    alg.next();
    std::set<std::size_t> now;
    for (auto v : alg.result().matched_nodes()) now.insert(bg.g.node_index(v));
    for (auto x : previous) REQUIRE(now.count(x));
    previous = now;
  }
}

TEST_CASE("bipartite and general mode agree on bipartite graphs, zero contractions") {
  // random bipartite instances
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    std::size_t left = 2 + uniform_below(rng, 4), right = 2 + uniform_below(rng, 4);
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::uint32_t i = 0; i < left; ++i)
      for (std::uint32_t j = 0; j < right; ++j)
        if (uniform_below(rng, 2))
          edges.push_back({i, static_cast<std::uint32_t>(left + j)});
    auto bg = build_sym(left + right, edges);
    REQUIRE(is_bipartite(bg.g));

    matching_stepper<adj_list_graph> gen(bg.g, matching_mode::general);
    gen.finish_algo();
    REQUIRE(gen.stats().contractions == 0);

    auto bip = max_matching(bg.g, matching_mode::bipartite);
    REQUIRE(bip.cardinality() == gen.result().cardinality());
    REQUIRE(bip.cardinality() == brute_force_max_matching(bg.g));
  }
}

TEST_CASE("search on an isolated root fails; a single free edge succeeds at once") {
  auto lone = build_sym(2, {});
  auto m0 = max_matching(lone.g, matching_mode::general);
  REQUIRE(m0.cardinality() == 0);

  auto pair = build_sym(2, {{0, 1}});
  auto m1 = max_matching(pair.g, matching_mode::general);
  REQUIRE(m1.cardinality() == 1);
}

TEST_CASE("optimal on every edge subset of K5") {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> all;
  for (std::uint32_t i = 0; i < 5; ++i)
    for (std::uint32_t j = i + 1; j < 5; ++j) all.push_back({i, j});
  for (std::uint32_t mask = 0; mask < (1u << all.size()); ++mask) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask & (1u << b)) edges.push_back(all[b]);
    auto bg = build_sym(5, edges);
    matching_options opts;
    opts.check_expansions = true;
    matching_stepper<adj_list_graph> alg(bg.g, matching_mode::general, opts);
    alg.finish_algo();
    REQUIRE(alg.result().cardinality() == brute_force_max_matching(bg.g));
    alg.result().validate();
  }
}

TEST_CASE("petersen graph has a perfect matching") {
  auto bg = build_sym(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9},
                           {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
  auto m = max_matching(bg.g, matching_mode::general);
  REQUIRE(m.cardinality() == 5);
  REQUIRE(brute_force_max_matching(bg.g) == 5);
  m.validate();
}

TEST_CASE("brute force oracle sanity and guard") {
  auto tri = build_sym(3, {{0, 1}, {1, 2}, {2, 0}});
  REQUIRE(brute_force_max_matching(tri.g) == 1);
  auto k4 = build_sym(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  REQUIRE(brute_force_max_matching(k4.g) == 2);

  std::vector<std::pair<std::uint32_t, std::uint32_t>> big;
  for (std::uint32_t i = 0; i < 9; ++i)
    for (std::uint32_t j = i + 1; j < 9; ++j) big.push_back({i, j});
  auto kb = build_sym(9, big);  // 36 undirected edges
  REQUIRE_THROWS_AS(brute_force_max_matching(kb.g), input_error);
}

TEST_CASE("random graphs match the oracle") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 4 + uniform_below(rng, 9);
    std::uint64_t mmax = std::min<std::uint64_t>(n * (n - 1) / 2, 24);
    auto edges = random_undirected_edges(n, uniform_below(rng, mmax + 1), uniform_below(rng, 1u << 29));
    auto bg = build_sym(n, edges);
    matching_options opts;
    opts.check_expansions = true;
    matching_stepper<adj_list_graph> alg(bg.g, matching_mode::general, opts);
    alg.finish_algo();
    REQUIRE(alg.result().cardinality() == brute_force_max_matching(bg.g));
    REQUIRE(alg.stats().max_contractions_per_search <= n / 2);
    alg.result().validate();
  }
}
