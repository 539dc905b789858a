#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "graphkit/graphkit.hpp"
#include "helpers.hpp"

using namespace graphkit;
using testutil::build;

using CG = contracted_graph<adj_list_graph>;
using NH = adj_list_graph::node_handle;

namespace {

std::set<std::size_t> visible_nodes(const CG& cg) {
  std::set<std::size_t> out;
  for (c_node_iterator<adj_list_graph> it(cg); it.valid(); ++it)
    out.insert(cg.backend().node_index(it.get_node()));
  return out;
}

std::multiset<std::pair<std::size_t, std::size_t>> visible_edges(const CG& cg) {
  std::multiset<std::pair<std::size_t, std::size_t>> out;
  const auto& g = cg.backend();
  for (c_edge_iterator<adj_list_graph> it(cg); it.valid(); ++it)
    out.insert({g.node_index(cg.rep(g.source(it.get_edge()))),
                g.node_index(cg.rep(g.target(it.get_edge())))});
  return out;
}

}  // namespace

// Six nodes named 1..6 in the captions; indices are one less. Edges:
// (1,2),(2,3),(4,3),(4,5),(5,6).
static testutil::built_graph caption_graph() {
  return build(6, {{0, 1}, {1, 2}, {3, 2}, {3, 4}, {4, 5}});
}

TEST_CASE("contracting 1,2,3 leaves exactly c,4,5,6 visible") {
  auto b = caption_graph();
  CG cg(b.g);
  cg.contract(b.nodes[0], b.nodes[1]);
  cg.contract(b.nodes[0], b.nodes[2]);
  REQUIRE(visible_nodes(cg) == std::set<std::size_t>{0, 3, 4, 5});
  REQUIRE(cg.contracted(b.nodes[1]));
  REQUIRE(cg.rep(b.nodes[2]) == b.nodes[0]);
  REQUIRE(cg.class_size(b.nodes[0]) == 3);

  // adjacency at node 4 (index 3) sees an edge whose current adjacent node is c
  c_out_adj_iterator<adj_list_graph> ai(cg, b.nodes[3]);
  bool lands_on_c = false;
  for (; ai.valid(); ++ai)
    if (ai.curr_adj().get_node() == b.nodes[0]) lands_on_c = true;
  REQUIRE(lands_on_c);
}

TEST_CASE("contracting 4,5,6 leaves (4,3) as the class's only leaving edge") {
  auto b = caption_graph();
  CG cg(b.g);
  cg.contract(b.nodes[3], b.nodes[4]);
  cg.contract(b.nodes[3], b.nodes[5]);
  c_out_adj_iterator<adj_list_graph> ai(cg, b.nodes[5]);  // any member names the class
  REQUIRE(ai.valid());
  REQUIRE(ai.get_edge() == b.edges[2]);  // (4,3)
  REQUIRE(cg.backend().node_index(ai.curr_adj().get_node()) == 2);
  ++ai;
  REQUIRE_FALSE(ai.valid());
}

TEST_CASE("contracting a node with itself is a usage error") {
  auto b = caption_graph();
  CG cg(b.g);
  cg.contract(b.nodes[0], b.nodes[1]);
  REQUIRE_THROWS_AS(cg.contract(b.nodes[0], b.nodes[1]), usage_error);
}

TEST_CASE("adjacency iterators skip edges internal to the supernode") {
  auto b = build(3, {{0, 1}, {0, 2}, {1, 2}});
  CG cg(b.g);
  cg.contract(b.nodes[0], b.nodes[1]);
  std::multiset<std::pair<std::size_t, std::size_t>> seen;
  for (c_out_adj_iterator<adj_list_graph> ai(cg, b.nodes[0]); ai.valid(); ++ai)
    seen.insert({b.g.node_index(b.g.source(ai.get_edge())),
                 b.g.node_index(b.g.target(ai.get_edge()))});
  REQUIRE(seen == std::multiset<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
}

TEST_CASE("expand restores the identity partition") {
  auto b = caption_graph();
  CG cg(b.g);
  cg.contract(b.nodes[0], b.nodes[1]);
  cg.expand(b.nodes[0]);
  for (auto v : b.nodes) {
    REQUIRE(cg.rep(v) == v);
    REQUIRE_FALSE(cg.contracted(v));
  }
  REQUIRE_THROWS_AS(cg.expand(b.nodes[0]), usage_error);
}

TEST_CASE("flat mode collapses nesting: one expand restores all originals") {
  auto b = caption_graph();
  CG cg(b.g, contraction_mode::flat);
  cg.contract(b.nodes[0], b.nodes[1]);
  cg.contract(b.nodes[2], b.nodes[3]);
  cg.contract(b.nodes[0], b.nodes[2]);  // absorbs the second class
  REQUIRE(cg.class_size(b.nodes[3]) == 4);
  cg.expand(b.nodes[1]);
  for (auto v : b.nodes) REQUIRE(cg.rep(v) == v);
}

TEST_CASE("tree mode expands strictly top-down, one level at a time") {
  auto b = caption_graph();
  CG cg(b.g, contraction_mode::tree);
  // level 1: {1,2,3}; level 2: {(123),4,6}
  cg.contract_list({b.nodes[0], b.nodes[1], b.nodes[2]});
  REQUIRE(visible_nodes(cg) == std::set<std::size_t>{0, 3, 4, 5});
  cg.contract_list({b.nodes[0], b.nodes[3], b.nodes[5]});
  REQUIRE(visible_nodes(cg) == std::set<std::size_t>{0, 4});
  REQUIRE(cg.level() == 2);

  cg.expand(b.nodes[0]);  // outer level first
  REQUIRE(visible_nodes(cg) == std::set<std::size_t>{0, 3, 4, 5});
  REQUIRE(cg.level() == 1);
  cg.expand_top();
  REQUIRE(visible_nodes(cg) == std::set<std::size_t>{0, 1, 2, 3, 4, 5});
  REQUIRE(cg.level() == 0);
}

TEST_CASE("tree mode rejects out-of-order expansion") {
  auto b = caption_graph();
  CG cg(b.g, contraction_mode::tree);
  cg.contract_list({b.nodes[0], b.nodes[1]});
  cg.contract_list({b.nodes[3], b.nodes[4]});
  REQUIRE_THROWS_AS(cg.expand(b.nodes[0]), usage_error);  // not the top level
  cg.expand(b.nodes[3]);
  cg.expand(b.nodes[0]);
  REQUIRE(cg.level() == 0);
}

TEST_CASE("visible navigation equals plain navigation when nothing is contracted") {
  auto edges = random_edges(10, 24, 31);
  auto b = build(10, edges);
  CG cg(b.g);
  REQUIRE(visible_nodes(cg).size() == 10);
  REQUIRE(visible_edges(cg).size() == 24);
}

TEST_CASE("fully contracted graph has a single visible node and no edges") {
  auto b = build(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CG cg(b.g);
  for (int i = 1; i < 4; ++i) cg.contract(b.nodes[0], b.nodes[i]);
  REQUIRE(visible_nodes(cg) == std::set<std::size_t>{0});
  c_node_iterator<adj_list_graph> it(cg);
  ++it;
  REQUIRE_FALSE(it.valid());
  REQUIRE(visible_edges(cg).empty());
}

TEST_CASE("backend is untouched by contract and expand") {
  auto b = caption_graph();
  CG cg(b.g);
  std::size_t n = b.g.node_count(), m = b.g.edge_count();
  cg.contract(b.nodes[0], b.nodes[1]);
  cg.contract(b.nodes[3], b.nodes[4]);
  cg.expand(b.nodes[0]);
  REQUIRE(b.g.node_count() == n);
  REQUIRE(b.g.edge_count() == m);
  std::size_t edges_seen = 0;
  for (auto e = b.g.first_edge(); !adj_list_graph::is_null(e); e = b.g.advance_edge(e))
    ++edges_seen;
  REQUIRE(edges_seen == m);
}

TEST_CASE("cycle contractor folds a 5-cycle into one supernode") {
  auto b = build(5, {});
  node_map<adj_list_graph, NH> pred(b.g, adj_list_graph::null_node());
  for (int i = 0; i < 5; ++i) pred[b.nodes[i]] = b.nodes[(i + 4) % 5];
  auto pda = node_da(pred);

  CG cg(b.g);
  pair_coordinator<adj_list_graph, decltype(pda)> coord(cg, pda);
  cycle_contractor<decltype(coord)> contractor(coord);
  contractor.contract(b.nodes[2]);
  for (int i = 0; i < 5; ++i) REQUIRE(cg.equal(b.nodes[0], b.nodes[i]));
}

TEST_CASE("list coordinator collects the whole cycle, then contracts once") {
  auto b = build(5, {});
  node_map<adj_list_graph, NH> pred(b.g, adj_list_graph::null_node());
  for (int i = 0; i < 5; ++i) pred[b.nodes[i]] = b.nodes[(i + 4) % 5];
  auto pda = node_da(pred);

  CG cg(b.g, contraction_mode::tree);
  std::vector<NH> base;
  list_coordinator<adj_list_graph, decltype(pda)> coord(cg, pda, base);

  coord.init(b.nodes[0]);
  std::size_t steps = 0;
  do {
    coord.succ();
    ++steps;
  } while (!(coord.current() == b.nodes[0]));
  REQUIRE(steps == 5);
  REQUIRE(coord.coord_base().size() == 5);  // all five collected, nothing contracted yet
  REQUIRE_FALSE(cg.contracted(b.nodes[0]));
  coord.start_contraction();
  REQUIRE(cg.level() == 1);  // one single step
  for (int i = 0; i < 5; ++i) REQUIRE(cg.equal(b.nodes[0], b.nodes[i]));
}

TEST_CASE("malformed predecessor structure is detected") {
  auto b = build(4, {});
  node_map<adj_list_graph, NH> pred(b.g, adj_list_graph::null_node());
  // rho shape: 0 -> 1 -> 2 -> 1 never returns to 0
  pred[b.nodes[0]] = b.nodes[1];
  pred[b.nodes[1]] = b.nodes[2];
  pred[b.nodes[2]] = b.nodes[1];
  auto pda = node_da(pred);
  CG cg(b.g);
  pair_coordinator<adj_list_graph, decltype(pda)> coord(cg, pda);
  cycle_contractor<decltype(coord)> contractor(coord);
  REQUIRE_THROWS_AS(contractor.contract(b.nodes[0]), input_error);
}

TEST_CASE("two-path contraction: interleaved equals sequential") {
  // paths 3 -> 1 -> 0 and 4 -> 2 -> 0 meeting at root 0
  auto make_pred = [](testutil::built_graph& b, node_map<adj_list_graph, NH>& pred) {
    pred[b.nodes[3]] = b.nodes[1];
    pred[b.nodes[1]] = b.nodes[0];
    pred[b.nodes[4]] = b.nodes[2];
    pred[b.nodes[2]] = b.nodes[0];
  };

  auto b1 = build(5, {});
  node_map<adj_list_graph, NH> p1(b1.g, adj_list_graph::null_node());
  make_pred(b1, p1);
  auto pda1 = node_da(p1);
  CG cg1(b1.g);
  pair_coordinator<adj_list_graph, decltype(pda1)> ca(cg1, pda1), cb(cg1, pda1);
  two_path_contractor<decltype(ca)> tp1(ca, cb);
  tp1.contract(b1.nodes[3], b1.nodes[4]);

  auto b2 = build(5, {});
  node_map<adj_list_graph, NH> p2(b2.g, adj_list_graph::null_node());
  make_pred(b2, p2);
  auto pda2 = node_da(p2);
  CG cg2(b2.g);
  pair_coordinator<adj_list_graph, decltype(pda2)> cc(cg2, pda2), cd(cg2, pda2);
  two_path_contractor<decltype(cc)> tp2(cc, cd);
  tp2.contract_interleaved(b2.nodes[3], b2.nodes[4]);

  for (int i = 0; i < 5; ++i) {
    REQUIRE(cg1.equal(b1.nodes[0], b1.nodes[i]));
    REQUIRE(cg2.equal(b2.nodes[0], b2.nodes[i]));
  }
}

TEST_CASE("pair and list coordination produce the same partition") {
  auto b1 = build(6, {});
  node_map<adj_list_graph, NH> p1(b1.g, adj_list_graph::null_node());
  for (int i = 0; i < 6; ++i) p1[b1.nodes[i]] = b1.nodes[(i + 5) % 6];
  auto pda1 = node_da(p1);
  CG cg1(b1.g);
  pair_coordinator<adj_list_graph, decltype(pda1)> pc(cg1, pda1);
  cycle_contractor<decltype(pc)> cyc1(pc);
  cyc1.contract(b1.nodes[4]);

  auto b2 = build(6, {});
  node_map<adj_list_graph, NH> p2(b2.g, adj_list_graph::null_node());
  for (int i = 0; i < 6; ++i) p2[b2.nodes[i]] = b2.nodes[(i + 5) % 6];
  auto pda2 = node_da(p2);
  CG cg2(b2.g);
  std::vector<NH> base;
  list_coordinator<adj_list_graph, decltype(pda2)> lc(cg2, pda2, base);
  cycle_contractor<decltype(lc)> cyc2(lc);
  cyc2.contract(b2.nodes[4]);

  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      REQUIRE(cg1.equal(b1.nodes[i], b1.nodes[j]) == cg2.equal(b2.nodes[i], b2.nodes[j]));
}

TEST_CASE("view soundness by brute force on small graphs and partitions") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 2 + uniform_below(rng, 7);  // up to 8 nodes
    std::uint64_t mmax = n * (n - 1);
    auto edges = random_edges(n, uniform_below(rng, mmax + 1), uniform_below(rng, 1u << 30));
    auto b = build(n, edges);

    std::vector<int> block(n);
    for (std::size_t i = 0; i < n; ++i) block[i] = static_cast<int>(uniform_below(rng, 3));

    CG cg(b.g);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (block[i] == block[j] && !cg.equal(b.nodes[i], b.nodes[j]))
          cg.contract(b.nodes[j], b.nodes[i]);

    // brute-force quotient
    std::set<std::size_t> expect_nodes;
    for (std::size_t i = 0; i < n; ++i) {
      bool first_of_block = true;
      for (std::size_t j = 0; j < i; ++j)
        if (block[j] == block[i]) first_of_block = false;
      if (first_of_block) expect_nodes.insert(i);
    }
    std::multiset<std::pair<std::size_t, std::size_t>> expect_edges;
    auto rep_of = [&](std::uint32_t x) {
      for (std::size_t j = 0; j <= x; ++j)
        if (block[j] == block[x]) return j;
      return static_cast<std::size_t>(x);
    };
    for (auto [u, v] : edges)
      if (block[u] != block[v]) expect_edges.insert({rep_of(u), rep_of(v)});

    REQUIRE(visible_nodes(cg) == expect_nodes);
    REQUIRE(visible_edges(cg) == expect_edges);

    // round trip back to identity
    for (std::size_t i = 0; i < n; ++i)
      if (cg.contracted(b.nodes[i])) cg.expand(b.nodes[i]);
    for (std::size_t i = 0; i < n; ++i) REQUIRE(cg.rep(b.nodes[i]) == b.nodes[i]);
  }
}

TEST_CASE("contraction work stays within the adjacency-scan budget") {
  auto edges = random_edges(30, 200, 123);
  auto b = build(30, edges);
  CG cg(b.g);
  std::mt19937_64 rng(5);
  std::size_t contractions = 0;
  for (int i = 0; i < 10; ++i) {
    auto u = b.nodes[uniform_below(rng, 30)];
    auto v = b.nodes[uniform_below(rng, 30)];
    if (!cg.equal(u, v)) {
      cg.contract(u, v);
      ++contractions;
    }
  }
  // one full class-wide adjacency sweep over every visible node
  for (c_node_iterator<adj_list_graph> it(cg); it.valid(); ++it)
    for (c_out_adj_iterator<adj_list_graph> ai(cg, it.get_node()); ai.valid(); ++ai) {
    }
  std::size_t n = 30;
  REQUIRE(cg.op_count() <= 8 * (n * n + contractions * n) + 8 * edges.size());
}
