#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "jramsey/embedding.hpp"
#include "jramsey/graph.hpp"

namespace jramsey {

enum class SuiteKind { thm1, thm2, thm3, thm3_paths };

/// A named random family plus the extractor it drives.
///   thm1-sXmY       P_n-free graphs of order n + sm/2 - 1, expect J in the complement
///   thm2-sXmY       P_n-free graphs of order 2n-1 (even m) or 2n (odd m), same
///   thm3-sXmY       P_n-free graphs of order tn + sm/2 - 1, same
///   thm3paths-sXmY  t K_n plus isolated vertices, shuffled, expect t paths in F
/// n defaults to the least value the extractor accepts, t to 2.
struct SuiteSpec {
  std::string name;
  SuiteKind kind = SuiteKind::thm1;
  int s = 0, m = 0, n = 0, t = 1;
  int order = 0;
  int component_cap = 0;  // random families only
};

inline constexpr int kComponentCap = 20;

SuiteSpec parse_suite(const std::string& name, std::optional<int> n = std::nullopt, std::optional<int> t = std::nullopt);

/// splitmix64 finalizer; also the per-case seed derivation
/// case_seed = splitmix64(seed ^ splitmix64(index)).
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [lo, hi] from mt19937_64 by rejection, so the stream
/// does not depend on the standard library's distribution code.
std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi);

/// Component sizes uniform in [3, cap] until the order is covered (the last
/// one truncated), each component G(size, 1/2) with one coin per pair in
/// row-major order, then a Fisher-Yates shuffle of all labels.
Graph random_bounded_components(int order, int cap, std::uint64_t seed);

/// t disjoint K_n plus isolated vertices up to the order, shuffled as above.
Graph padded_cliques(int t, int n, int order, std::uint64_t seed);

Graph suite_case_graph(const SuiteSpec& spec, std::uint64_t seed, int index);

struct CaseResult {
  int index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string outcome;  // witness kind, or the error class
  std::string error;
  std::string trace;  // one compact JSON line
};

struct SuiteReport {
  SuiteSpec spec;
  std::uint64_t seed = 0;
  std::vector<CaseResult> cases;
  int passed() const;
};

/// Cases run on `jobs` worker threads; results are stored by index, so the
/// report is independent of scheduling.
SuiteReport run_suite(const SuiteSpec& spec, std::uint64_t seed, int count, int jobs = 1,
                      std::uint64_t budget = kDefaultBudget);

std::string summary_json(const SuiteReport& report);

}  // namespace jramsey
