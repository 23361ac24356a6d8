#include "jramsey/oracle.hpp"

#include <algorithm>
#include <bit>
#include <climits>
#include <future>
#include <map>
#include <numeric>
#include <thread>

#include "jramsey/errors.hpp"

namespace jramsey {

namespace {

using Row = std::uint32_t;
using Cells = std::vector<std::vector<int>>;

Row mask_of(const std::vector<int>& cell) {
  Row m = 0;
  for (int v : cell) m |= Row{1} << v;
  return m;
}

// Coarsest equitable refinement of an ordered partition. Fragments of a
// split cell are ordered by their neighbour count into the splitter, so the
// result commutes with relabeling.
void refine(const std::vector<Row>& adj, Cells& cells) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t w = 0; w < cells.size() && !changed; ++w) {
      const Row splitter = mask_of(cells[w]);
      Cells next;
      next.reserve(cells.size() + 4);
      for (const auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        for (int v : cell) keyed.emplace_back(std::popcount(adj[static_cast<std::size_t>(v)] & splitter), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t start = next.size();
        next.emplace_back();
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i > 0 && keyed[i].first != keyed[i - 1].first) next.emplace_back();
          next.back().push_back(keyed[i].second);
        }
        if (next.size() - start > 1) changed = true;
      }
      if (changed) cells = std::move(next);
    }
  }
}

class Canonizer {
 public:
  explicit Canonizer(const Graph& g) : n_(g.order()), adj_(static_cast<std::size_t>(g.order()), 0) {
    for (int v = 0; v < n_; ++v) {
      for (int u = g.neighbors(v).first(); u >= 0; u = g.neighbors(v).next(u)) adj_[static_cast<std::size_t>(v)] |= Row{1} << u;
    }
  }

  // best_seq_[i] is the vertex placed at canonical position i.
  const std::vector<int>& run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back(static_cast<std::size_t>(n_));
      std::iota(cells[0].begin(), cells[0].end(), 0);
      refine(adj_, cells);
    }
    std::vector<int> prefix;
    search(cells, prefix);
    return best_seq_;
  }

 private:
  static constexpr int kContinue = INT_MAX;

  int search(const Cells& cells, std::vector<int>& prefix) {
    const int depth = static_cast<int>(prefix.size());
    auto target = std::find_if(cells.begin(), cells.end(), [](const auto& c) { return c.size() > 1; });
    if (target == cells.end()) return leaf(cells, prefix);

    std::vector<int> children = *target;
    std::sort(children.begin(), children.end());
    const std::size_t ti = static_cast<std::size_t>(target - cells.begin());
    std::vector<int> explored;
    for (int c : children) {
      if (!explored.empty() && in_explored_orbit(prefix, explored, c)) continue;
      Cells next;
      next.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != ti) {
          next.push_back(cells[i]);
          continue;
        }
        next.push_back({c});
        std::vector<int> rest;
        for (int v : cells[i]) {
          if (v != c) rest.push_back(v);
        }
        next.push_back(std::move(rest));
      }
      refine(adj_, next);
      prefix.push_back(c);
      const int r = search(next, prefix);
      prefix.pop_back();
      explored.push_back(c);
      if (r < depth) return r;
    }
    return kContinue;
  }

  int leaf(const Cells& cells, const std::vector<int>& prefix) {
    std::vector<int> seq;
    seq.reserve(static_cast<std::size_t>(n_));
    for (const auto& c : cells) seq.push_back(c.front());
    std::vector<int> pos(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) pos[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
    std::vector<Row> code(static_cast<std::size_t>(n_), 0);
    for (int i = 0; i < n_; ++i) {
      const Row row = adj_[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])];
      for (int u = 0; u < n_; ++u) {
        if ((row >> u) & 1u) code[static_cast<std::size_t>(i)] |= Row{1} << (n_ - 1 - pos[static_cast<std::size_t>(u)]);
      }
    }
    if (first_seq_.empty() && best_seq_.empty()) {
      first_seq_ = best_seq_ = seq;
      first_code_ = best_code_ = code;
      first_prefix_ = best_prefix_ = prefix;
      return kContinue;
    }
    if (code == first_code_) return automorphism(first_seq_, seq, first_prefix_, prefix);
    if (code == best_code_) return automorphism(best_seq_, seq, best_prefix_, prefix);
    if (code > best_code_) {
      best_code_ = std::move(code);
      best_seq_ = std::move(seq);
      best_prefix_ = prefix;
    }
    return kContinue;
  }

  // Two leaves with equal codes give an automorphism. It maps the earlier
  // leaf's subtree at the divergence point onto the current one, so the
  // search resumes at that node.
  int automorphism(const std::vector<int>& a, const std::vector<int>& b, const std::vector<int>& pa,
                   const std::vector<int>& pb) {
    std::vector<int> gamma(static_cast<std::size_t>(n_));
    for (int i = 0; i < n_; ++i) gamma[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])] = b[static_cast<std::size_t>(i)];
    automorphisms_.push_back(std::move(gamma));
    std::size_t level = 0;
    while (level < pa.size() && level < pb.size() && pa[level] == pb[level]) ++level;
    return static_cast<int>(level);
  }

  bool in_explored_orbit(const std::vector<int>& prefix, const std::vector<int>& explored, int c) {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    for (const auto& gamma : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(),
                               [&](int v) { return gamma[static_cast<std::size_t>(v)] == v; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) parent[static_cast<std::size_t>(find(v))] = find(gamma[static_cast<std::size_t>(v)]);
    }
    const int rc = find(c);
    return std::any_of(explored.begin(), explored.end(), [&](int e) { return find(e) == rc; });
  }

  int n_;
  std::vector<Row> adj_;
  std::vector<int> first_seq_, best_seq_, first_prefix_, best_prefix_;
  std::vector<Row> first_code_, best_code_;
  std::vector<std::vector<int>> automorphisms_;
};

unsigned worker_count(std::size_t work) {
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(std::min(hw, 8u), std::max<std::size_t>(work, 1)));
}

}  // namespace

CanonicalForm canonical_form(const Graph& g, std::vector<int>* labeling) {
  if (g.order() > kCanonicalCap) {
    throw InvalidArgument("canonical_form: order " + std::to_string(g.order()) + " exceeds the cap of " +
                          std::to_string(kCanonicalCap));
  }
  Canonizer canon(g);
  const auto& seq = canon.run();
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  for (int i = 0; i < g.order(); ++i) perm[static_cast<std::size_t>(seq[static_cast<std::size_t>(i)])] = i;
  CanonicalForm out{g.order(), to_graph6(relabel(g, perm))};
  if (labeling) *labeling = std::move(perm);
  return out;
}

std::vector<Graph> enumerate_graphs(int n, bool allow_large) {
  if (n < 0) throw InvalidArgument("enumerate_graphs: negative order");
  if (n > kEnumerationCap && !allow_large) {
    throw InvalidArgument("enumerate_graphs: order " + std::to_string(n) + " exceeds the cap of " +
                          std::to_string(kEnumerationCap) + " (override required)");
  }
  if (n > kCanonicalCap) throw InvalidArgument("enumerate_graphs: order beyond the canonical form cap");

  std::vector<Graph> level{Graph(0)};
  for (int k = 1; k <= n; ++k) {
    // Each worker extends a contiguous slice of parents; the union is
    // deduplicated by canonical code, so the result is thread-independent.
    const unsigned workers = worker_count(level.size());
    std::vector<std::future<std::vector<std::string>>> parts;
    const std::size_t chunk = (level.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t lo = w * chunk;
      const std::size_t hi = std::min(level.size(), lo + chunk);
      if (lo >= hi) break;
      parts.push_back(std::async(std::launch::async, [&level, lo, hi, k] {
        std::vector<std::string> codes;
        for (std::size_t i = lo; i < hi; ++i) {
          const Graph& parent = level[i];
          for (std::uint32_t nb = 0; nb < (std::uint32_t{1} << (k - 1)); ++nb) {
            GraphBuilder b(k);
            for (auto [u, v] : parent.edges()) b.add_edge(u, v);
            for (int u = 0; u < k - 1; ++u) {
              if ((nb >> u) & 1u) b.add_edge(u, k - 1);
            }
            codes.push_back(canonical_form(std::move(b).build()).code);
          }
        }
        std::sort(codes.begin(), codes.end());
        codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
        return codes;
      }));
    }
    std::vector<std::string> all;
    for (auto& p : parts) {
      auto codes = p.get();
      all.insert(all.end(), codes.begin(), codes.end());
    }
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    level.clear();
    level.reserve(all.size());
    for (const auto& code : all) level.push_back(from_graph6(code));
  }
  return level;
}

std::uint64_t canonical_checksum(const std::vector<Graph>& classes) {
  std::uint64_t h = 14695981039346656037ull;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ull;
  };
  for (const auto& g : classes) {
    for (char c : canonical_form(g).code) mix(static_cast<unsigned char>(c));
    mix('\n');
  }
  return h;
}

ArrowResult arrows(int order, const PatternSpec& g, const PatternSpec& h, bool allow_large) {
  validate(g);
  validate(h);
  const auto classes = enumerate_graphs(order, allow_large);

  auto holds = [&](const Graph& f) {
    auto in_f = find_subgraph(f, g);
    if (in_f.status == Search::unknown) throw BudgetExhausted("arrows: search for " + to_string(g) + " exhausted its budget");
    if (in_f.found()) return true;
    auto in_comp = find_subgraph(complement(f), h);
    if (in_comp.status == Search::unknown) {
      throw BudgetExhausted("arrows: search for " + to_string(h) + " exhausted its budget");
    }
    return in_comp.found();
  };

  // Each worker reports the first failing index of its slice; the least
  // one overall is the counterexample.
  const unsigned workers = worker_count(classes.size());
  const std::size_t chunk = (classes.size() + workers - 1) / workers;
  std::vector<std::future<std::size_t>> parts;
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(classes.size(), lo + chunk);
    if (lo >= hi) break;
    parts.push_back(std::async(std::launch::async, [&, lo, hi] {
      for (std::size_t i = lo; i < hi; ++i) {
        if (!holds(classes[i])) return i;
      }
      return classes.size();
    }));
  }
  std::size_t failure = classes.size();
  for (auto& p : parts) failure = std::min(failure, p.get());

  ArrowResult out;
  out.arrows = failure == classes.size();
  if (!out.arrows) out.counterexample = classes[failure];
  out.record = UpperRecord{order, static_cast<std::int64_t>(classes.size()), canonical_checksum(classes)};
  return out;
}

std::variant<RamseyCertificate, RamseyBound> ramsey_number(const PatternSpec& g, const PatternSpec& h, int cap) {
  validate(g);
  validate(h);
  if (cap < 1 || cap > kEnumerationCap + 1) {
    throw InvalidArgument("ramsey: cap must lie in 1.." + std::to_string(kEnumerationCap + 1));
  }
  Graph previous(0);  // order 0 graph: contains neither pattern
  for (int order = 1; order < cap; ++order) {
    auto r = arrows(order, g, h);
    if (r.arrows) return RamseyCertificate{g, h, order, previous, r.record};
    previous = std::move(*r.counterexample);
  }
  return RamseyBound{g, h, cap};
}

Verdict verify_certificate(const RamseyCertificate& cert) {
  const auto& lw = cert.lower_witness;
  if (cert.value < 1) return Verdict::fail("value must be positive");
  if (lw.order() != cert.value - 1) return Verdict::fail("lower witness order is not value - 1");
  auto in_g = find_subgraph(lw, cert.g);
  if (in_g.status != Search::absent) return Verdict::fail("lower witness contains " + to_string(cert.g));
  auto in_h = find_subgraph(complement(lw), cert.h);
  if (in_h.status != Search::absent) return Verdict::fail("complement of the lower witness contains " + to_string(cert.h));
  if (cert.upper.order != cert.value) return Verdict::fail("upper record is not at the certified order");
  auto r = arrows(cert.value, cert.g, cert.h);
  if (!r.arrows) return Verdict::fail("order " + std::to_string(cert.value) + " does not arrow");
  if (r.record.classes != cert.upper.classes) return Verdict::fail("upper record class count differs from enumeration");
  if (r.record.checksum != cert.upper.checksum) return Verdict::fail("upper record checksum differs from enumeration");
  return Verdict::pass();
}

}  // namespace jramsey
