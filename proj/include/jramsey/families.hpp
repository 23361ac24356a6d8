#pragma once

#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "jramsey/graph.hpp"

namespace jramsey {

struct Path {
  int n;
  bool operator==(const Path&) const = default;
};
struct Cycle {
  int n;
  bool operator==(const Cycle&) const = default;
};
// Rim of k vertices plus a hub adjacent to all of them.
struct Wheel {
  int k;
  bool operator==(const Wheel&) const = default;
};
// Rim cycle of s*m vertices plus a hub adjacent to m rim vertices spaced s apart.
struct Jahangir {
  int s;
  int m;
  bool operator==(const Jahangir&) const = default;
};
struct DisjointPaths {
  int t;
  int n;
  bool operator==(const DisjointPaths&) const = default;
};
struct Complete {
  int n;
  bool operator==(const Complete&) const = default;
};
struct CliqueUnion {
  std::vector<int> sizes;
  bool operator==(const CliqueUnion&) const = default;
};

using PatternSpec = std::variant<Path, Cycle, Wheel, Jahangir, DisjointPaths, Complete, CliqueUnion>;

// Throws InvalidArgument when a family parameter is out of range.
void validate(const PatternSpec& spec);
int pattern_order(const PatternSpec& spec);

/// Canonical labelling:
///   Path/Cycle    0..n-1 in traversal order
///   Wheel         rim 0..k-1, hub k
///   Jahangir      rim 0..sm-1 in cyclic order, hub sm, spokes to 0, s, ..., (m-1)s
///   DisjointPaths / CliqueUnion  blocks laid out consecutively
Graph build(const PatternSpec& spec);

/// Text form used on the command line: "P23", "C6", "W6", "J2,3", "2P23",
/// "K5", "K3+K1". Case-insensitive, no whitespace.
PatternSpec parse_pattern(std::string_view text);
std::string to_string(const PatternSpec& spec);

// Lower-bound constructions from the three theorems.
struct Thm1Case {
  int n, s, m;
};
struct Thm2EvenMCase {
  int n, s, m;
};
struct Thm2OddMCase {
  int n, s, m;
};
struct Thm3Case {
  int t, n, s, m;
};
using TheoremCase = std::variant<Thm1Case, Thm2EvenMCase, Thm2OddMCase, Thm3Case>;

std::string to_string(const TheoremCase& tc);
void validate(const TheoremCase& tc);

/// Thm1 -> K_{n-1} u K_{sm/2-1};  Thm2EvenM -> 2K_{n-1};
/// Thm2OddM -> K_1 u 2K_{n-1};  Thm3 -> K_{sm/2-1} u K_{tn-1}.
Graph extremal_graph(const TheoremCase& tc);

/// Whether the complete multipartite graph with the given part sizes has a
/// cycle of length cycle_len. Two parts use the exact bipartite rule
/// (even length, smaller side at least half of it). Three or more parts fall
/// back to explicit search while the total order is at most
/// kMultipartiteSearchCap and throw Unsupported above it.
inline constexpr int kMultipartiteSearchCap = 12;
bool multipartite_contains_even_cycle(const std::vector<int>& part_sizes, int cycle_len);

/// Exact test for pattern being a subgraph of the complete multipartite graph
/// with these parts: a proper colouring of the pattern whose colour classes
/// fit the part sizes.
bool fits_complete_multipartite(const Graph& pattern, const std::vector<int>& part_sizes);

}  // namespace jramsey
