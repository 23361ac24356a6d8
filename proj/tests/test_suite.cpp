#include <doctest.h>

#include "jramsey/errors.hpp"
#include "jramsey/suite.hpp"

using namespace jramsey;

TEST_CASE("suite names and defaults") {
  const auto t1 = parse_suite("thm1-s2m3");
  CHECK(t1.n == 23);
  CHECK(t1.order == 25);
  CHECK(t1.component_cap == 20);
  const auto t2e = parse_suite("thm2-s3m2");
  CHECK(t2e.n == 12);
  CHECK(t2e.order == 23);
  CHECK(t2e.component_cap == 11);
  const auto t2o = parse_suite("thm2-s3m3");
  CHECK(t2o.n == 32);
  CHECK(t2o.order == 64);
  const auto t3 = parse_suite("thm3-s2m3");
  CHECK(t3.t == 2);
  CHECK(t3.order == 48);
  CHECK(parse_suite("thm3paths-s2m3", std::nullopt, 3).order == 3 * 23 + 2);
  for (const char* bad : {"thm4-s2m3", "thm1-s3m3", "thm2-s2m2", "thm1", "thm1-s2m3x", ""}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_suite(bad), InvalidArgument);
  }
  CHECK_THROWS_AS(parse_suite("thm1-s2m3", std::nullopt, 2), InvalidArgument);
}

TEST_CASE("random graphs respect the component cap") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const Graph g = random_bounded_components(64, 20, seed);
    CHECK(g.order() == 64);
    for (const auto& c : connected_components(g)) CHECK(c.size() <= 20);
  }
  CHECK(random_bounded_components(30, 5, 9) == random_bounded_components(30, 5, 9));
  CHECK_FALSE(random_bounded_components(30, 5, 9) == random_bounded_components(30, 5, 10));
  CHECK_THROWS_AS(random_bounded_components(10, 2, 1), InvalidArgument);
}

TEST_CASE("padded cliques") {
  const Graph g = padded_cliques(2, 23, 48, 4);
  CHECK(g.order() == 48);
  CHECK(g.edge_count() == 2 * 23 * 22 / 2);
  int isolated = 0;
  for (int v = 0; v < 48; ++v) isolated += g.degree(v) == 0;
  CHECK(isolated == 2);
}

TEST_CASE("uniform_int stays in range and is reproducible") {
  std::mt19937_64 a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const auto x = uniform_int(a, 3, 20);
    CHECK(x >= 3);
    CHECK(x <= 20);
    CHECK(x == uniform_int(b, 3, 20));
  }
  // splitmix64 reference value for input 0.
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafull);
}

TEST_CASE("suite runs are deterministic across job counts") {
  const auto spec = parse_suite("thm1-s2m3");
  const auto a = run_suite(spec, 7, 12, 1);
  const auto b = run_suite(spec, 7, 12, 4);
  REQUIRE(a.cases.size() == 12);
  CHECK(a.passed() == 12);
  for (std::size_t i = 0; i < a.cases.size(); ++i) CHECK(a.cases[i].trace == b.cases[i].trace);
  CHECK(summary_json(a) == summary_json(b));
}

TEST_CASE("empty suite passes") {
  const auto r = run_suite(parse_suite("thm2-s3m2"), 1, 0, 3);
  CHECK(r.cases.empty());
  CHECK(r.passed() == 0);
  CHECK(summary_json(r).find("\"count\": 0") != std::string::npos);
}

TEST_CASE("padded suite yields paths") {
  const auto r = run_suite(parse_suite("thm3paths-s2m3"), 3, 5, 2);
  CHECK(r.passed() == 5);
  for (const auto& c : r.cases) CHECK(c.outcome == "paths_in_f");
}
