#pragma once

// Deliberately naive reference implementations. They only use Graph
// accessors, never the library's search, canonical form or enumeration code.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "jramsey/graph.hpp"

namespace oracle {

using jramsey::Graph;

// Every injective map of the pattern's vertices, each checked edge by edge.
inline bool naive_contains(const Graph& host, const Graph& pattern) {
  const int k = pattern.order(), n = host.order();
  if (k > n) return false;
  const auto edges = pattern.edges();
  std::vector<int> map(static_cast<std::size_t>(k));
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == k) {
      for (auto [u, v] : edges) {
        if (!host.adjacent(map[static_cast<std::size_t>(u)], map[static_cast<std::size_t>(v)])) return false;
      }
      return true;
    }
    for (int v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = true;
      map[static_cast<std::size_t>(i)] = v;
      const bool hit = self(self, i + 1);
      used[static_cast<std::size_t>(v)] = false;
      if (hit) return true;
    }
    return false;
  };
  return rec(rec, 0);
}

// Longest path over all vertex permutations: every path is the prefix of
// some permutation. Returns the lexicographically least maximum path.
inline std::vector<int> brute_longest_path(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::size_t len = perm.empty() ? 0 : 1;
    while (len < perm.size() && g.adjacent(perm[len - 1], perm[len])) ++len;
    std::vector<int> prefix(perm.begin(), perm.begin() + static_cast<long>(len));
    if (prefix.size() > best.size() || (prefix.size() == best.size() && prefix < best)) best = prefix;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Longest path by extending every simple path one vertex at a time; feasible
// for sparse graphs well beyond the reach of the permutation version.
inline std::vector<int> dfs_longest_path(const Graph& g) {
  std::vector<int> best, cur;
  std::vector<bool> on(static_cast<std::size_t>(g.order()), false);
  auto rec = [&](auto&& self, int v) -> void {
    cur.push_back(v);
    on[static_cast<std::size_t>(v)] = true;
    if (cur.size() > best.size() || (cur.size() == best.size() && cur < best)) best = cur;
    for (int u = 0; u < g.order(); ++u) {
      if (g.adjacent(v, u) && !on[static_cast<std::size_t>(u)]) self(self, u);
    }
    on[static_cast<std::size_t>(v)] = false;
    cur.pop_back();
  };
  for (int v = 0; v < g.order(); ++v) rec(rec, v);
  return best;
}

// Isomorphism classes of order n by marking the orbit of every labelled
// graph under all n! relabelings.
inline std::int64_t orbit_marking_count(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  const int bits = static_cast<int>(pairs.size());
  std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
  for (int b = 0; b < bits; ++b) {
    auto [i, j] = pairs[static_cast<std::size_t>(b)];
    index[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = b;
    index[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = b;
  }
  // For each permutation, where each pair bit goes.
  std::vector<std::vector<int>> images;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::vector<int> img(static_cast<std::size_t>(bits));
    for (int b = 0; b < bits; ++b) {
      auto [i, j] = pairs[static_cast<std::size_t>(b)];
      img[static_cast<std::size_t>(b)] =
          index[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])][static_cast<std::size_t>(perm[static_cast<std::size_t>(j)])];
    }
    images.push_back(std::move(img));
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<bool> seen(std::size_t{1} << bits, false);
  std::int64_t classes = 0;
  for (std::uint64_t code = 0; code < (std::uint64_t{1} << bits); ++code) {
    if (seen[code]) continue;
    ++classes;
    for (const auto& img : images) {
      std::uint64_t mapped = 0;
      for (int b = 0; b < bits; ++b) {
        if ((code >> b) & 1u) mapped |= std::uint64_t{1} << img[static_cast<std::size_t>(b)];
      }
      seen[mapped] = true;
    }
  }
  return classes;
}

// Brute-force isomorphism test for small graphs.
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(static_cast<std::size_t>(a.order()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (auto [u, v] : a.edges()) {
      if (!b.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  jramsey::GraphBuilder b(n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (coin(rng)) b.add_edge(i, j);
    }
  }
  return std::move(b).build();
}

inline std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace oracle
