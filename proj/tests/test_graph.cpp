#include <doctest.h>

#include <random>

#include "jramsey/errors.hpp"
#include "jramsey/graph.hpp"
#include "oracles.hpp"

using namespace jramsey;

namespace {

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

Graph cycle_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
  return std::move(b).build();
}

Graph petersen() {
  const std::vector<Edge> edges{{0, 1}, {0, 4}, {0, 5}, {1, 2}, {1, 6}, {2, 3}, {2, 7}, {3, 4},
                                {3, 8}, {4, 9}, {5, 7}, {5, 8}, {6, 8}, {6, 9}, {7, 9}};
  return Graph::from_edges(10, edges);
}

}  // namespace

TEST_CASE("vertex set basics") {
  VertexSet s(130);
  CHECK(s.empty());
  s.insert(0);
  s.insert(64);
  s.insert(129);
  CHECK(s.size() == 3);
  CHECK(s.first() == 0);
  CHECK(s.next(0) == 64);
  CHECK(s.next(64) == 129);
  CHECK(s.next(129) == -1);
  s.erase(64);
  CHECK(s.members() == std::vector<int>{0, 129});
  CHECK(VertexSet::full(130).size() == 130);
  CHECK((VertexSet::full(130) - s).size() == 128);
}

TEST_CASE("complement") {
  CHECK(complement(Graph::complete(4)) == Graph(4));
  CHECK(complement(Graph(0)) == Graph(0));
  const Graph k32 = complement(disjoint_union(Graph::complete(3), Graph::complete(2)));
  CHECK(k32.edge_count() == 6);
  for (int u = 0; u < 3; ++u) {
    for (int v = 3; v < 5; ++v) CHECK(k32.adjacent(u, v));
  }
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = static_cast<int>(rng() % 40);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    CHECK(complement(complement(g)) == g);
    CHECK(g.edge_count() + complement(g).edge_count() == static_cast<std::size_t>(n * (n - 1) / 2));
  }
}

TEST_CASE("disjoint union") {
  const Graph u = disjoint_union(Graph::complete(3), Graph::complete(2));
  CHECK(u.order() == 5);
  CHECK(u.edge_count() == 4);
  CHECK(disjoint_union(Graph(2), Graph(3)) == Graph(5));
  const Graph pp = disjoint_union(path_graph(4), path_graph(4));
  CHECK(pp.order() == 8);
  CHECK(pp.edge_count() == 6);
  CHECK(connected_components(pp).size() == 2);
  CHECK(pp.adjacent(4, 5));
  CHECK_FALSE(pp.adjacent(3, 4));
}

TEST_CASE("induced subgraph") {
  const auto arc = induced(cycle_graph(5), VertexSet::of(5, std::vector<int>{0, 1, 2}));
  CHECK(arc.graph == path_graph(3));
  CHECK(arc.to_host == std::vector<int>{0, 1, 2});
  const Graph c7 = cycle_graph(7);
  CHECK(induced(c7, c7.vertices()).graph == c7);
  CHECK(induced(Graph::complete(5), VertexSet::of(5, std::vector<int>{1, 3, 4})).graph == Graph::complete(3));

  std::mt19937_64 rng(5);
  const Graph g = oracle::random_graph(20, 0.4, rng);
  VertexSet s(20);
  for (int v = 0; v < 20; v += 3) s.insert(v);
  const auto sub = induced(g, s);
  for (int i = 0; i < sub.graph.order(); ++i) {
    for (int j = 0; j < sub.graph.order(); ++j) {
      if (i != j) CHECK(sub.graph.adjacent(i, j) == g.adjacent(sub.to_host[i], sub.to_host[j]));
    }
  }
  CHECK_THROWS_AS(induced(g, VertexSet::full(25)), InvalidArgument);
}

TEST_CASE("add_edge") {
  CHECK(add_edge(Graph(2), 0, 1) == Graph::complete(2));
  CHECK(add_edge(Graph::complete(2), 0, 1) == Graph::complete(2));
  CHECK_THROWS_AS(add_edge(Graph(2), 0, 0), InvalidArgument);
  CHECK_THROWS_AS(add_edge(Graph(2), 0, 2), InvalidArgument);
  const Graph g(3);
  const Graph h = add_edge(g, 1, 2);
  CHECK(g.edge_count() == 0);
  CHECK(h.edge_count() == 1);
}

TEST_CASE("relabel") {
  const Graph p = path_graph(3);
  const std::vector<int> perm{1, 0, 2};
  const Graph q = relabel(p, perm);
  CHECK(q.adjacent(1, 0));
  CHECK(q.adjacent(0, 2));
  CHECK_FALSE(q.adjacent(1, 2));
  CHECK_THROWS_AS(relabel(p, std::vector<int>{0, 0, 1}), InvalidArgument);
}

TEST_CASE("graph6 against an independent encoder") {
  // Reference strings produced by networkx.to_graph6_bytes(header=False).
  CHECK(to_graph6(Graph(0)) == "?");
  CHECK(to_graph6(Graph(1)) == "@");
  CHECK(to_graph6(Graph::complete(2)) == "A_");
  CHECK(to_graph6(path_graph(4)) == "Ch");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(to_graph6(petersen()) == "IheA@GUAo");
  CHECK(to_graph6(Graph::complete(7)) == "F~~~w");
  CHECK(to_graph6(path_graph(63)) ==
        "~??~hCGGC@?G?_@?@??_?G?@??C??G??G??C??@???G???_??@???@????_???G???@????C????G????G????C????@?????G?????_"
        "????@?????@??????_?????G?????@??????C??????G??????G??????C??????@???????G???????_??????@???????@????????_"
        "???????G???????@????????C????????G????????G????????C????????@?????????G?????????_????????@?????????@??????"
        "????_?????????G");
  CHECK(to_graph6(Graph::complete(62)).rfind("}~~~~~~~~~~~~~~~~~~~", 0) == 0);
}

TEST_CASE("graph6 round trip") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = static_cast<int>(rng() % 31);
    const Graph g = oracle::random_graph(n, 0.5, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  for (int n : {62, 63, 64, 100, 200}) {
    const Graph g = oracle::random_graph(n, 0.2, rng);
    CHECK(from_graph6(to_graph6(g)) == g);
  }
  CHECK(from_graph6("Dhc\n") == cycle_graph(5));
  CHECK(from_graph6(">>graph6<<Dhc") == cycle_graph(5));
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), InvalidArgument);
  CHECK_THROWS_AS(from_graph6("D hc"), InvalidArgument);        // space is below 63
  CHECK_THROWS_AS(from_graph6("Dh"), InvalidArgument);          // too short
  CHECK_THROWS_AS(from_graph6("Dhcc"), InvalidArgument);        // too long
  CHECK_THROWS_AS(from_graph6("A`"), InvalidArgument);          // padding bit set
  CHECK_THROWS_AS(from_graph6("~?"), InvalidArgument);          // truncated long header
  CHECK_THROWS_AS(from_graph6("D\x7fhc"), InvalidArgument);    // non-printable
}

TEST_CASE("builder rejects bad edges") {
  GraphBuilder b(3);
  CHECK_THROWS_AS(b.add_edge(1, 1), InvalidArgument);
  CHECK_THROWS_AS(b.add_edge(0, 3), InvalidArgument);
  CHECK_THROWS_AS(b.add_edge(-1, 0), InvalidArgument);
}

TEST_CASE("connected components") {
  const Graph g = disjoint_union(cycle_graph(4), disjoint_union(Graph(2), path_graph(3)));
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 4);
  CHECK(comps[0].members() == std::vector<int>{0, 1, 2, 3});
  CHECK(comps[1].members() == std::vector<int>{4});
  CHECK(comps[3].members() == std::vector<int>{6, 7, 8});
}
