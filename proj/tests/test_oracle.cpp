#include <doctest.h>

#include <random>
#include <set>

#include "jramsey/errors.hpp"
#include "jramsey/oracle.hpp"
#include "jramsey/report.hpp"
#include "oracles.hpp"

using namespace jramsey;

TEST_CASE("canonical form is invariant under relabeling") {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = static_cast<int>(rng() % 17);
    const Graph g = oracle::random_graph(n, 0.1 + 0.1 * static_cast<double>(trial % 8), rng);
    const auto perm = oracle::random_permutation(n, rng);
    CHECK(canonical_form(g) == canonical_form(relabel(g, perm)));
  }
  const Graph c5 = build(Cycle{5});
  CHECK(canonical_form(c5) == canonical_form(relabel(c5, std::vector<int>{3, 0, 4, 1, 2})));
}

TEST_CASE("canonical form on symmetric graphs") {
  // Highly regular graphs stress the automorphism pruning.
  for (int n : {1, 8, 16}) {
    CHECK(canonical_form(Graph(n)).code == to_graph6(Graph(n)));
    CHECK(canonical_form(Graph::complete(n)).code == to_graph6(Graph::complete(n)));
  }
  const Graph k88 = complement(build(CliqueUnion{{8, 8}}));
  std::mt19937_64 rng(2);
  CHECK(canonical_form(k88) == canonical_form(relabel(k88, oracle::random_permutation(16, rng))));
  // 4x4 rook's graph and the Shrikhande graph share parameters but differ.
  GraphBuilder rook(16), shri(16);
  for (int a = 0; a < 16; ++a) {
    for (int b = a + 1; b < 16; ++b) {
      const int ra = a / 4, ca = a % 4, rb = b / 4, cb = b % 4;
      if (ra == rb || ca == cb) rook.add_edge(a, b);
      const int dr = (rb - ra + 4) % 4, dc = (cb - ca + 4) % 4;
      const bool s = (dr == 0 && (dc == 1 || dc == 3)) || (dc == 0 && (dr == 1 || dr == 3)) ||
                     (dr == 1 && dc == 1) || (dr == 3 && dc == 3);
      if (s) shri.add_edge(a, b);
    }
  }
  const Graph r = std::move(rook).build(), s = std::move(shri).build();
  CHECK(r.edge_count() == s.edge_count());
  CHECK(canonical_form(r) != canonical_form(s));
  CHECK(canonical_form(s) == canonical_form(relabel(s, oracle::random_permutation(16, rng))));
  CHECK_THROWS_AS(canonical_form(Graph(17)), InvalidArgument);
}

TEST_CASE("canonical form separates non-isomorphic graphs") {
  const Graph k13 = complement(build(CliqueUnion{{1, 3}}));  // star plus the triangle's complement
  GraphBuilder star(4);
  star.add_edge(0, 1).add_edge(0, 2).add_edge(0, 3);
  CHECK(canonical_form(build(Path{4})) != canonical_form(std::move(star).build()));
  (void)k13;

  // Equal forms iff isomorphic, against brute force on random pairs.
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 3);
    const Graph a = oracle::random_graph(n, 0.5, rng);
    const Graph b = oracle::random_graph(n, 0.5, rng);
    CHECK((canonical_form(a) == canonical_form(b)) == oracle::isomorphic(a, b));
  }
}

TEST_CASE("enumeration counts agree with orbit marking") {
  const std::vector<std::int64_t> known{1, 1, 2, 4, 11, 34, 156};
  for (int n = 0; n <= 6; ++n) {
    CAPTURE(n);
    const auto classes = enumerate_graphs(n);
    CHECK(static_cast<std::int64_t>(classes.size()) == known[static_cast<std::size_t>(n)]);
    CHECK(oracle::orbit_marking_count(n) == known[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("order-6 classes are pairwise non-isomorphic") {
  const auto classes = enumerate_graphs(6);
  std::set<std::string> forms;
  for (const auto& g : classes) forms.insert(canonical_form(g).code);
  CHECK(forms.size() == 156);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::size_t j = i + 1; j < classes.size(); ++j) {
      if (classes[i].edge_count() == classes[j].edge_count()) CHECK_FALSE(oracle::isomorphic(classes[i], classes[j]));
    }
  }
  CHECK(enumerate_graphs(6) == classes);
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(enumerate_graphs(10), InvalidArgument);
  CHECK_THROWS_AS(enumerate_graphs(-1), InvalidArgument);
}

TEST_CASE("arrows examples") {
  CHECK(arrows(6, Path{4}, Jahangir{2, 2}).arrows);
  const auto five = arrows(5, Path{4}, Jahangir{2, 2});
  CHECK_FALSE(five.arrows);
  REQUIRE(five.counterexample);
  CHECK(five.counterexample->order() == 5);
  CHECK_FALSE(oracle::naive_contains(*five.counterexample, build(Path{4})));
  CHECK_FALSE(oracle::naive_contains(complement(*five.counterexample), build(Jahangir{2, 2})));
  CHECK(arrows(3, Path{2}, Complete{1}).arrows);
}

TEST_CASE("arrowing is monotone in the order") {
  const std::vector<std::pair<PatternSpec, PatternSpec>> pairs{
      {Path{3}, Path{3}}, {Path{4}, Cycle{4}}, {Complete{3}, Complete{3}}, {Path{4}, Jahangir{2, 2}}};
  for (const auto& [g, h] : pairs) {
    bool seen = false;
    for (int order = 1; order <= 7; ++order) {
      const bool a = arrows(order, g, h).arrows;
      if (seen) CHECK(a);
      seen = seen || a;
    }
  }
}

TEST_CASE("small Ramsey values") {
  auto value = [](const PatternSpec& g, const PatternSpec& h) {
    const auto r = ramsey_number(g, h, 8);
    REQUIRE(std::holds_alternative<RamseyCertificate>(r));
    return std::get<RamseyCertificate>(r).value;
  };
  CHECK(value(Complete{3}, Complete{3}) == 6);
  CHECK(value(Path{3}, Path{3}) == 3);
  CHECK(value(Path{3}, Path{3}) == value(Path{3}, Path{3}));
  CHECK(value(Path{4}, Jahangir{2, 2}) == 6);
  CHECK(value(Cycle{4}, Cycle{4}) == 6);

  const auto bound = ramsey_number(Path{4}, Jahangir{2, 2}, 5);
  REQUIRE(std::holds_alternative<RamseyBound>(bound));
  CHECK(std::get<RamseyBound>(bound).at_least == 5);
  CHECK_THROWS_AS(ramsey_number(Path{4}, Jahangir{2, 2}, 11), InvalidArgument);
}

TEST_CASE("certificates round-trip and re-verify") {
  const auto r = ramsey_number(Path{4}, Jahangir{2, 2}, 8);
  const auto& cert = std::get<RamseyCertificate>(r);
  CHECK(cert.upper.classes == 156);
  CHECK(verify_certificate(cert));
  const auto text = to_json(cert).dump();
  const auto back = certificate_from_json(nlohmann::json::parse(text));
  CHECK(back.value == cert.value);
  CHECK(back.lower_witness == cert.lower_witness);
  CHECK(back.upper == cert.upper);

  auto bad = cert;
  bad.upper.checksum ^= 1;
  CHECK_FALSE(verify_certificate(bad));
  bad = cert;
  bad.value = 5;
  CHECK_FALSE(verify_certificate(bad));
  auto j = to_json(cert);
  j["lower_witness"] = to_graph6(Graph::complete(5));
  CHECK_THROWS_AS(certificate_from_json(nlohmann::json::parse(j.dump())), InvalidArgument);
}
