#include <doctest.h>

#include <random>

#include "jramsey/embedding.hpp"
#include "jramsey/errors.hpp"
#include "oracles.hpp"

using namespace jramsey;

namespace {

Graph petersen() {
  const std::vector<Edge> edges{{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  return Graph::from_edges(10, edges);
}

}  // namespace

TEST_CASE("verify_embedding") {
  const Graph j = build(Jahangir{2, 3});
  CHECK(verify_embedding(j, Embedding{Cycle{6}, 7, {0, 1, 2, 3, 4, 5}}));
  const Graph p3 = build(Path{3});
  CHECK_FALSE(verify_embedding(p3, Embedding{Path{3}, 3, {0, 2, 1}}));
  CHECK_FALSE(verify_embedding(Graph::complete(3), Embedding{Path{3}, 3, {0, 1, 0}}));
  CHECK_FALSE(verify_embedding(Graph::complete(3), Embedding{Path{3}, 3, {0, 1, 3}}));
  CHECK_FALSE(verify_embedding(Graph::complete(3), Embedding{Path{3}, 4, {0, 1, 2}}));
  CHECK_FALSE(verify_embedding(Graph::complete(3), Embedding{Path{3}, 3, {0, 1}}));
  const auto v = verify_embedding(p3, Embedding{Path{3}, 3, {0, 2, 1}});
  CHECK_FALSE(v.reason.empty());
}

TEST_CASE("verify_path and disjoint paths") {
  const Graph c6 = build(Cycle{6});
  CHECK(verify_path(c6, PathWitness{{0, 1, 2, 3}}));
  CHECK_FALSE(verify_path(c6, PathWitness{{0, 2}}));
  CHECK_FALSE(verify_path(c6, PathWitness{{0, 1, 0}}));
  CHECK(verify_disjoint_paths(c6, {PathWitness{{0, 1, 2}}, PathWitness{{3, 4, 5}}}, 3));
  CHECK_FALSE(verify_disjoint_paths(c6, {PathWitness{{0, 1, 2}}, PathWitness{{2, 3, 4}}}, 3));
  CHECK_FALSE(verify_disjoint_paths(c6, {PathWitness{{0, 1, 2}}, PathWitness{{3, 4}}}, 3));
}

TEST_CASE("find_subgraph examples") {
  CHECK(find_subgraph(Graph::complete(7), Jahangir{2, 3}).found());
  CHECK(find_subgraph(complement(disjoint_union(Graph::complete(22), Graph::complete(2))), Jahangir{2, 3}).status ==
        Search::absent);
  CHECK(find_subgraph(build(Cycle{6}), Path{7}).status == Search::absent);
  CHECK(find_subgraph(build(Wheel{6}), Jahangir{2, 3}).found());
  CHECK(find_subgraph(build(Wheel{6}), Jahangir{3, 2}).found());
  CHECK(find_subgraph(build(Jahangir{2, 3}), Wheel{6}).status == Search::absent);
  const auto hit = find_subgraph(petersen(), Cycle{9});
  REQUIRE(hit.found());
  CHECK(verify_embedding(petersen(), *hit.value));
}

TEST_CASE("budget exhaustion is reported, never absent") {
  // K_{12,12} has no J_{3,3}; with a tiny budget the search cannot finish.
  const Graph host = complement(disjoint_union(Graph::complete(12), Graph::complete(12)));
  CHECK(find_subgraph(host, Jahangir{3, 3}, 10).status == Search::unknown);
  CHECK(find_subgraph(host, Jahangir{3, 3}).status == Search::absent);
  std::mt19937_64 rng(3);
  const Graph big = oracle::random_graph(60, 0.08, rng);
  CHECK(longest_path(big, 5).status == Search::unknown);
}

TEST_CASE("find_subgraph agrees with the naive checker on random graphs") {
  std::mt19937_64 rng(99);
  const std::vector<PatternSpec> specs{Path{4}, Cycle{5}, Wheel{4}, Jahangir{2, 2}, Jahangir{2, 3}, Cycle{6},
                                      Complete{4}};
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_graph(n, 0.2 + 0.1 * static_cast<double>(trial % 6), rng);
    for (const auto& spec : specs) {
      const auto r = find_subgraph(g, spec);
      REQUIRE(r.status != Search::unknown);
      CHECK(r.found() == oracle::naive_contains(g, build(spec)));
      if (r.found()) CHECK(verify_embedding(g, *r.value));
    }
  }
}

TEST_CASE("find_subgraph is monotone under adding edges") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = oracle::random_graph(10, 0.35, rng);
    GraphBuilder more(g);
    for (int k = 0; k < 5; ++k) {
      const int u = static_cast<int>(rng() % 10), v = static_cast<int>(rng() % 10);
      if (u != v) more.add_edge(u, v);
    }
    const Graph h = std::move(more).build();
    for (const PatternSpec& spec : {PatternSpec{Jahangir{2, 3}}, PatternSpec{Wheel{5}}, PatternSpec{Path{8}}}) {
      if (find_subgraph(g, spec).found()) CHECK(find_subgraph(h, spec).found());
    }
  }
}

TEST_CASE("longest path examples") {
  const auto two_cliques = longest_path(disjoint_union(Graph::complete(4), Graph::complete(6)));
  REQUIRE(two_cliques.found());
  CHECK(two_cliques.value->size() == 6);
  CHECK(longest_path(build(Cycle{9})).value->size() == 9);
  const auto pet = longest_path(petersen());
  REQUIRE(pet.found());
  CHECK(pet.value->size() == 10);
  CHECK(pet.value->vertices == oracle::brute_longest_path(petersen()));
  CHECK(longest_path(Graph(0)).value->size() == 0);
  CHECK(longest_path(Graph(3)).value->vertices == std::vector<int>{0});
}

TEST_CASE("longest path matches permutation brute force") {
  std::mt19937_64 rng(4242);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = oracle::random_graph(n, 0.15 + 0.1 * static_cast<double>(trial % 7), rng);
    const auto r = longest_path(g);
    REQUIRE(r.found());
    CHECK(verify_path(g, *r.value));
    CHECK(r.value->vertices == oracle::brute_longest_path(g));
  }
}

TEST_CASE("longest path matches exhaustive path search on sparse graphs") {
  std::mt19937_64 rng(515);
  for (int trial = 0; trial < 120; ++trial) {
    // Orders on both sides of the dynamic-programming limit.
    const int n = trial % 2 == 0 ? 10 + static_cast<int>(rng() % 7) : 25 + static_cast<int>(rng() % 4);
    const Graph g = oracle::random_graph(n, 2.6 / n, rng);
    const auto r = longest_path(g);
    REQUIRE(r.found());
    CHECK(r.value->vertices == oracle::dfs_longest_path(g));
  }
}

TEST_CASE("longest path on larger components") {
  // Above the dynamic-programming limit the branch and bound takes over;
  // a Hamiltonian cycle with chords must still give a spanning path.
  std::mt19937_64 rng(8);
  for (int n : {25, 30, 40}) {
    GraphBuilder b(n);
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    for (int k = 0; k < n / 3; ++k) {
      const int u = static_cast<int>(rng() % n), v = static_cast<int>(rng() % n);
      if (u != v) b.add_edge(u, v);
    }
    const Graph g = std::move(b).build();
    const auto r = longest_path(g);
    REQUIRE(r.found());
    CHECK(r.value->size() == n);
    CHECK(verify_path(g, *r.value));
  }
  // A 26-vertex tree: spider with legs 10, 9 and 6 around a centre.
  GraphBuilder spider(26);
  int next = 1;
  for (int leg : {10, 9, 6}) {
    int prev = 0;
    for (int i = 0; i < leg; ++i) {
      spider.add_edge(prev, next);
      prev = next++;
    }
  }
  const auto r = longest_path(std::move(spider).build());
  REQUIRE(r.found());
  CHECK(r.value->size() == 20);
}

TEST_CASE("find_path_at_least") {
  const auto c6 = find_path_at_least(build(Cycle{6}), 6);
  REQUIRE(c6.found());
  CHECK(c6.value->size() == 6);
  CHECK(find_path_at_least(disjoint_union(Graph::complete(22), Graph::complete(2)), 23).status == Search::absent);
  const auto p5 = find_path_at_least(build(Path{5}), 5);
  REQUIRE(p5.found());
  CHECK(p5.value->vertices == std::vector<int>{0, 1, 2, 3, 4});
  const auto trunc = find_path_at_least(Graph::complete(9), 4);
  REQUIRE(trunc.found());
  CHECK(trunc.value->size() == 4);
}

TEST_CASE("find_disjoint_paths") {
  const auto two = find_disjoint_paths(build(DisjointPaths{2, 5}), 2, 5);
  REQUIRE(two.found());
  CHECK(verify_disjoint_paths(build(DisjointPaths{2, 5}), *two.value, 5));
  CHECK(find_disjoint_paths(Graph::complete(9), 2, 5).status == Search::absent);
  const auto k10 = find_disjoint_paths(Graph::complete(10), 2, 5);
  REQUIRE(k10.found());
  CHECK(verify_disjoint_paths(Graph::complete(10), *k10.value, 5));
  // The greedy first path must be undone: in a "bowtie" of two triangles
  // joined at a vertex plus pendant vertices only one split works.
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {0, 5}, {4, 6}};
  const Graph bow = Graph::from_edges(7, edges);
  const auto split = find_disjoint_paths(bow, 2, 3);
  REQUIRE(split.found());
  CHECK(verify_disjoint_paths(bow, *split.value, 3));
  CHECK(find_disjoint_paths(bow, 3, 3).status == Search::absent);
}

TEST_CASE("generic engine with an explicit order") {
  Budget budget(1'000'000);
  const Graph pattern = build(Cycle{4});
  const auto r = find_subgraph_generic(build(Wheel{5}), pattern, {0, 1, 2, 3}, budget);
  REQUIRE(r.found());
  CHECK(verify_embedding(build(Wheel{5}), Embedding{Cycle{4}, 6, *r.value}));
}
