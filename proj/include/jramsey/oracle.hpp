#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "jramsey/embedding.hpp"
#include "jramsey/families.hpp"
#include "jramsey/graph.hpp"

namespace jramsey {

/// graph6 of the canonical relabeling; equal iff the graphs are isomorphic.
struct CanonicalForm {
  int order = 0;
  std::string code;
  bool operator==(const CanonicalForm&) const = default;
  auto operator<=>(const CanonicalForm&) const = default;
};

inline constexpr int kCanonicalCap = 16;

/// Partition refinement plus an individualization tree pruned by the
/// automorphisms found along the way. Also returns the labeling: vertex v of
/// g is vertex labeling[v] of the canonical graph.
CanonicalForm canonical_form(const Graph& g, std::vector<int>* labeling = nullptr);

inline constexpr int kEnumerationCap = 9;

/// One graph per isomorphism class of order n, in increasing order of
/// canonical code. Generated by adding a vertex to every class of order n-1
/// in every possible way. Orders above kEnumerationCap need allow_large.
std::vector<Graph> enumerate_graphs(int n, bool allow_large = false);

struct UpperRecord {
  int order = 0;
  std::int64_t classes = 0;
  std::uint64_t checksum = 0;  // FNV-1a over the canonical codes, one per line
  bool operator==(const UpperRecord&) const = default;
};

struct ArrowResult {
  bool arrows = false;
  std::optional<Graph> counterexample;  // least class in enumeration order
  UpperRecord record;                   // classes checked at this order
};

/// Whether every graph F of the given order has g in F or h in complement(F).
/// Classes are checked on a few threads; the verdict does not depend on that.
ArrowResult arrows(int order, const PatternSpec& g, const PatternSpec& h, bool allow_large = false);

std::uint64_t canonical_checksum(const std::vector<Graph>& classes);

struct RamseyCertificate {
  PatternSpec g, h;
  int value = 0;
  Graph lower_witness;  // order value-1: no g in it, no h in its complement
  UpperRecord upper;
};

/// The value was not reached below the cap.
struct RamseyBound {
  PatternSpec g, h;
  int at_least = 0;
};

/// Orders 1 .. cap-1 are checked in turn; the first that arrows is the value.
/// Later orders are not visited: adding an isolated vertex keeps both
/// containments, so arrowing is monotone in the order.
std::variant<RamseyCertificate, RamseyBound> ramsey_number(const PatternSpec& g, const PatternSpec& h, int cap);

/// Rebuilds the evidence: the lower witness is re-checked with the search
/// engine and the upper record against a fresh enumeration.
Verdict verify_certificate(const RamseyCertificate& cert);

}  // namespace jramsey
