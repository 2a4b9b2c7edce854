#include "doctest.h"

#include "boxdim/graph.hpp"
#include "test_util.hpp"

using namespace boxdim;

namespace {

Graph complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle(int n) {
  Graph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

Graph path(int n) {
  Graph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

}  // namespace

TEST_CASE("clique enumeration counts") {
  CHECK(enumerate_cliques(complete(3)).size() == 8);   // {}, 3+3+1
  CHECK(enumerate_cliques(Graph(3)).size() == 4);      // {} and singletons
  CHECK(enumerate_cliques(complete(4)).size() == 16);  // all subsets
  // enumeration is deterministic and lexicographic
  auto cliques = enumerate_cliques(complete(2));
  REQUIRE(cliques.size() == 4);
  CHECK(cliques[0] == Clique{});
  CHECK(cliques[1] == Clique{0});
  CHECK(cliques[2] == Clique{0, 1});
  CHECK(cliques[3] == Clique{1});
}

TEST_CASE("clique cap guards the enumeration") {
  CHECK_THROWS_AS(enumerate_cliques(complete(10), 100), std::runtime_error);
}

TEST_CASE("max clique size") {
  CHECK(max_clique_size(complete(4)) == 4);
  CHECK(max_clique_size(cycle(5)) == 2);
  Graph cocktail = Graph::from_edges(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});  // K4 minus matching
  CHECK(max_clique_size(cocktail) == 2);
  CHECK(testutil::isomorphic(cocktail, cycle(4)));
}

TEST_CASE("greedy star coloring follows the rule") {
  Graph p3 = path(3);
  Coloring c = greedy_star_coloring(p3, {0, 1, 2});
  CHECK(c.colors == std::vector<int>{1, 2, 3});
  CHECK(verify_coloring(p3, c).ok());

  Graph empty3(3);
  Coloring e = greedy_star_coloring(empty3, {0, 1, 2});
  CHECK(e.colors == std::vector<int>{1, 1, 1});

  Graph k4 = complete(4);
  Coloring k = greedy_star_coloring(k4, {2, 0, 3, 1});
  CHECK(k.color_count() == 4);
}

TEST_CASE("default greedy rule always star-verifies; restricted variant only stays proper") {
  DyadicRng rng(31);
  for (int it = 0; it < 120; ++it) {
    int n = 3 + static_cast<int>(rng.next_u32() % 10);
    Graph g = testutil::random_graph(rng, n, 40);
    auto order = testutil::random_order(rng, n);
    Coloring c = greedy_star_coloring(g, order);
    Report rep = verify_coloring(g, c);
    INFO(rep.summary());
    CHECK(rep.ok());
    // the j < m < i reading can miss bicolored paths through later middles;
    // it still yields a proper coloring
    Coloring b = greedy_star_coloring(g, order, StarGreedyRule::Between);
    b.kind = ColoringKind::Proper;
    CHECK(verify_coloring(g, b).ok());
  }
}

TEST_CASE("greedy proper coloring") {
  CHECK(greedy_proper_coloring(complete(3), {0, 1, 2}).color_count() == 3);
  Graph star(6);
  for (int leaf = 1; leaf < 6; ++leaf) star.add_edge(0, leaf);
  CHECK(greedy_proper_coloring(star, {0, 1, 2, 3, 4, 5}).color_count() == 2);
  Graph c5 = cycle(5);
  Coloring c = greedy_proper_coloring(c5, {0, 1, 2, 3, 4});
  CHECK(verify_coloring(c5, c).ok());
  CHECK(c.color_count() <= 3);
  CHECK(testutil::chromatic_number(c5) == 3);
}

TEST_CASE("coloring verifier finds witnesses") {
  Graph p4 = path(4);
  Coloring bad{{1, 2, 1, 2}, ColoringKind::Star};
  Report rep = verify_coloring(p4, bad);
  CHECK_FALSE(rep.ok());
  CHECK(rep.has("star"));

  Coloring good{{1, 2, 3, 1}, ColoringKind::Star};
  CHECK(verify_coloring(p4, good).ok());

  Coloring not_proper{{1, 1, 2, 3}, ColoringKind::Proper};
  CHECK(verify_coloring(p4, not_proper).has("proper"));
}

TEST_CASE("tree decomposition verifier") {
  Graph k3 = complete(3);
  TreeDecomp single;
  single.parent = {-1};
  single.bags = {{0, 1, 2}};
  CHECK(verify_tree_decomposition(k3, single).ok());
  CHECK(width(single) == 2);

  Graph p3 = path(3);
  TreeDecomp two;
  two.parent = {-1, 0};
  two.bags = {{0, 1}, {1, 2}};
  CHECK(verify_tree_decomposition(p3, two).ok());
  CHECK(width(two) == 1);

  Graph e12 = Graph::from_edges(3, {{1, 2}});
  TreeDecomp bad;
  bad.parent = {-1, 0};
  bad.bags = {{0, 1}, {2}};
  Report rep = verify_tree_decomposition(e12, bad);
  CHECK(rep.has("edge-uncovered"));

  TreeDecomp disconnected;
  disconnected.parent = {-1, 0, 1};
  disconnected.bags = {{0}, {1}, {0, 2}};
  Graph g3(3);
  CHECK(verify_tree_decomposition(g3, disconnected).has("vertex-disconnected"));
}

TEST_CASE("ktree realize and validity") {
  KTreeBuildPlan plan;
  plan.k = 2;
  plan.base = {0, 1, 2};
  plan.steps = {{{0, 1}, 3}, {{1, 2}, 4}, {{0, 2}, 5}};
  Graph g = ktree_realize(plan);
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 3 + 3 * 2);
  CHECK(exact_treewidth(g) == 2);

  KTreeBuildPlan bad = plan;
  bad.steps.push_back({{3, 4}, 6});  // 3 and 4 are not adjacent
  CHECK_THROWS_AS(ktree_realize(bad), std::invalid_argument);
}

TEST_CASE("1-tree from a path decomposition is the path plus fresh root") {
  Graph p4 = path(4);
  TreeDecomp td;
  td.parent = {-1, 0, 1};
  td.bags = {{0, 1}, {1, 2}, {2, 3}};
  KTreeEmbedding emb = ktree_embed(p4, td);
  CHECK(emb.plan.k == 1);
  CHECK(emb.root == Clique{4});
  CHECK(emb.supergraph.vertex_count() == 5);
  for (auto [u, v] : p4.edges()) CHECK(emb.supergraph.has_edge(u, v));
  CHECK(exact_treewidth(emb.supergraph) == 1);
}

TEST_CASE("embedding C4 with a width-2 decomposition adds the chord") {
  Graph c4 = cycle(4);
  TreeDecomp td;
  td.parent = {-1, 0};
  td.bags = {{0, 1, 3}, {1, 2, 3}};
  KTreeEmbedding emb = ktree_embed(c4, td);
  CHECK(emb.plan.k == 2);
  for (auto [u, v] : c4.edges()) CHECK(emb.supergraph.has_edge(u, v));
  // the k-tree on the original vertices contains the chord 1-3
  CHECK(emb.supergraph.has_edge(1, 3));
  Graph restricted = induced_subgraph(emb.supergraph, {0, 1, 2, 3});
  CHECK(exact_treewidth(restricted) == 2);
  // root vertices are fresh and form a clique adjacent per the pyramid
  CHECK(emb.root == Clique{4, 5});
  CHECK(emb.supergraph.has_edge(4, 5));
}

TEST_CASE("random embeddings stay subgraphs with correct treewidth") {
  DyadicRng rng(57);
  for (int it = 0; it < 25; ++it) {
    int n = 4 + static_cast<int>(rng.next_u32() % 7);
    auto pk = testutil::random_partial_2tree(rng, n, 30);
    REQUIRE(verify_tree_decomposition(pk.graph, pk.td).ok());
    KTreeEmbedding emb = ktree_embed(pk.graph, pk.td);
    for (auto [u, v] : pk.graph.edges()) CHECK(emb.supergraph.has_edge(u, v));
    Graph t = emb.supergraph;
    if (t.vertex_count() <= 12) CHECK(exact_treewidth(t) == 2);
  }
}

TEST_CASE("exact treewidth oracle on known families") {
  CHECK(exact_treewidth(complete(5)) == 4);
  CHECK(exact_treewidth(path(6)) == 1);
  CHECK(exact_treewidth(cycle(6)) == 2);
  CHECK(exact_treewidth(Graph(4)) == 0);
}

TEST_CASE("ktree realize output has treewidth exactly k") {
  DyadicRng rng(61);
  for (int k = 1; k <= 3; ++k) {
    for (int it = 0; it < 5; ++it) {
      int n = k + 2 + static_cast<int>(rng.next_u32() % (10 - k));
      KTreeBuildPlan plan = testutil::random_ktree_plan(rng, k, n);
      Graph g = ktree_realize(plan);
      if (g.vertex_count() <= 12 && g.vertex_count() > k + 1)
        CHECK(exact_treewidth(g) == k);
    }
  }
}
