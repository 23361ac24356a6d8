#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "jramsey/embedding.hpp"
#include "jramsey/errors.hpp"
#include "jramsey/families.hpp"
#include "jramsey/graph.hpp"

namespace jramsey {

/// Vertex-disjoint maximum paths L_1, ..., L_j taken from successive residual
/// graphs. When a residual has no edges the next path is a fabricated edge on
/// its two least vertices, recorded in augmented_edges (the host plus those
/// edges is F_1).
struct PathSystem {
  Graph host;
  std::vector<PathWitness> paths;
  std::vector<Edge> augmented_edges;
  VertexSet remainder;
};

struct ExtractionTrace {
  std::string theorem;
  std::string case_id;
  int n = 0, s = 0, m = 0, t = 0;
  int k = 0;  // vertex count of the longest path in F, 0 if never computed
  std::vector<PathWitness> paths;
  std::vector<Edge> augmented_edges;
  // Named vertex groups: quadruples C_i, couples A_i / B_i, pairs Y_i.
  std::vector<std::pair<std::string, std::vector<int>>> groups;
  // Role -> vertex, in the order the selections were made.
  std::vector<std::pair<std::string, int>> selections;
  std::vector<std::string> notes;
  bool forced = false;

  bool operator==(const ExtractionTrace&) const = default;
};

struct PathsInF {
  std::vector<PathWitness> paths;
};
struct JahangirInComplement {
  Embedding embedding;  // into complement(F)
};

struct DichotomyWitness {
  std::variant<PathsInF, JahangirInComplement> outcome;
  ExtractionTrace trace;
  bool verified = false;

  bool has_paths() const { return std::holds_alternative<PathsInF>(outcome); }
  bool has_jahangir() const { return std::holds_alternative<JahangirInComplement>(outcome); }
};

/// A selection step the proof derives from path maximality failed. With an
/// exact longest-path engine this is a bug or a precondition breach.
class MaximalityViolation : public std::runtime_error {
 public:
  MaximalityViolation(const std::string& what, ExtractionTrace trace)
      : std::runtime_error(what), trace_(std::move(trace)) {}
  const ExtractionTrace& trace() const { return trace_; }

 private:
  ExtractionTrace trace_;
};

/// The wheel W_sm expected in the complement was not found. exhausted()
/// distinguishes a spent budget from an exhaustive "absent".
class WheelNotFound : public std::runtime_error {
 public:
  WheelNotFound(const std::string& what, bool exhausted) : std::runtime_error(what), exhausted_(exhausted) {}
  bool exhausted() const { return exhausted_; }

 private:
  bool exhausted_;
};

struct ExtractorOptions {
  std::uint64_t budget = kDefaultBudget;
  // Run outside the theorems' parameter ranges; the trace is marked forced.
  bool force = false;
};

PathSystem build_path_system(const Graph& f, int count, std::uint64_t budget = kDefaultBudget);

/// Even s >= 2, m >= 3, n >= (2sm-1)(sm/2-1)+1, order >= n + sm/2 - 1.
DichotomyWitness extract_theorem1(const Graph& f, int n, int s, int m, const ExtractorOptions& opts = {});

/// Odd s >= 3; even m with order >= 2n-1 and n >= (sm/2)(sm-2), or odd m
/// with order >= 2n and n >= ((sm-1)/2)(sm-1).
DichotomyWitness extract_theorem2(const Graph& f, int n, int s, int m, const ExtractorOptions& opts = {});

/// Same vertex images; the Jahangir spokes are the wheel spokes at rim
/// positions 0, s, 2s, ...
Embedding wheel_to_jahangir(const Embedding& wheel, int s, int m);

/// t disjoint P_n in F, or J_{s,m} in complement(F), by peeling one path at
/// a time with extract_theorem1.
DichotomyWitness extract_t_paths(const Graph& f, int t, int n, int s, int m, const ExtractorOptions& opts = {});

/// Re-checks the witness against F (paths) or complement(F) (Jahangir).
Verdict verify_witness(const Graph& f, const DichotomyWitness& w, int min_path_size);

/// Builds the lower-bound graph and confirms it has neither the path
/// structure nor a J_{s,m} in its complement.
Verdict verify_extremal(const TheoremCase& tc);
/// Same checks on a caller-supplied graph, re-derived from its structure.
Verdict verify_extremal_graph(const TheoremCase& tc, const Graph& g);

}  // namespace jramsey
