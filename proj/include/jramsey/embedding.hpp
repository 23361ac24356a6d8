#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "jramsey/families.hpp"
#include "jramsey/graph.hpp"

namespace jramsey {

inline constexpr std::uint64_t kDefaultBudget = 200'000'000;

/// Injective map from the vertices of build(pattern) into a host graph.
struct Embedding {
  PatternSpec pattern;
  int host_order = 0;
  std::vector<int> map;
  bool operator==(const Embedding&) const = default;
};

/// Ordered vertex list; consecutive entries must be adjacent in the host.
struct PathWitness {
  std::vector<int> vertices;
  int size() const { return static_cast<int>(vertices.size()); }
  int front() const { return vertices.front(); }
  int back() const { return vertices.back(); }
  bool operator==(const PathWitness&) const = default;
  auto operator<=>(const PathWitness&) const = default;
};

/// Outcome of a check: ok, or a machine-readable reason for the failure.
struct Verdict {
  bool ok = true;
  std::string reason;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

Verdict verify_embedding(const Graph& host, const Embedding& emb);
Verdict verify_path(const Graph& host, const PathWitness& path);
// Paths pairwise vertex-disjoint, each verified and at least min_size long.
Verdict verify_disjoint_paths(const Graph& host, const std::vector<PathWitness>& paths, int min_size);

enum class Search { found, absent, unknown };

template <class T>
struct SearchResult {
  Search status = Search::unknown;
  std::optional<T> value;

  bool found() const { return status == Search::found; }
};

/// Node-expansion budget shared by the steps of one search.
class Budget {
 public:
  explicit Budget(std::uint64_t limit) : remaining_(limit) {}
  // False once the budget is spent; the caller must then abandon the search.
  bool spend(std::uint64_t n = 1) {
    if (remaining_ < n) {
      remaining_ = 0;
      exhausted_ = true;
      return false;
    }
    remaining_ -= n;
    return true;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t remaining() const { return remaining_; }

 private:
  std::uint64_t remaining_;
  bool exhausted_ = false;
};

/// Subgraph (not induced) containment. Path specs go through
/// find_path_at_least, DisjointPaths through find_disjoint_paths, everything
/// else through the backtracking engine; Wheel and Jahangir patterns are
/// searched hub first and then around the rim. Every returned embedding has
/// passed verify_embedding.
SearchResult<Embedding> find_subgraph(const Graph& host, const PatternSpec& spec, std::uint64_t budget = kDefaultBudget);

/// The backtracking engine on its own, for an arbitrary pattern graph. When
/// order is empty a connectivity-respecting order is derived (most placed
/// neighbours first, then degree, then index).
SearchResult<std::vector<int>> find_subgraph_generic(const Graph& host, const Graph& pattern,
                                                     std::vector<int> order, Budget& budget);

/// Exact maximum path. Among maximum paths the lexicographically least
/// vertex sequence is returned (so the lower endpoint comes first).
/// Components of at most kDpComponentLimit vertices use subset dynamic
/// programming; larger ones use branch and bound.
inline constexpr int kDpComponentLimit = 24;
SearchResult<PathWitness> longest_path(const Graph& g, std::uint64_t budget = kDefaultBudget);

/// Some path on at least n vertices, truncated to exactly n; absent means the
/// longest path is shorter than n.
SearchResult<PathWitness> find_path_at_least(const Graph& g, int n, std::uint64_t budget = kDefaultBudget);

/// t vertex-disjoint paths on n vertices each, found greedily with
/// backtracking over the choice of earlier paths.
SearchResult<std::vector<PathWitness>> find_disjoint_paths(const Graph& g, int t, int n,
                                                           std::uint64_t budget = kDefaultBudget);

}  // namespace jramsey
