#include "jramsey/embedding.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

#include "jramsey/errors.hpp"

namespace jramsey {

Verdict verify_embedding(const Graph& host, const Embedding& emb) {
  Graph pattern;
  try {
    pattern = build(emb.pattern);
  } catch (const InvalidArgument& e) {
    return Verdict::fail(std::string("invalid pattern: ") + e.what());
  }
  if (emb.host_order != host.order()) {
    return Verdict::fail("host order mismatch: embedding says " + std::to_string(emb.host_order) + ", host has " +
                         std::to_string(host.order()));
  }
  if (static_cast<int>(emb.map.size()) != pattern.order()) {
    return Verdict::fail("map covers " + std::to_string(emb.map.size()) + " of " + std::to_string(pattern.order()) +
                         " pattern vertices");
  }
  VertexSet seen(host.order());
  for (std::size_t i = 0; i < emb.map.size(); ++i) {
    const int image = emb.map[i];
    if (image < 0 || image >= host.order()) {
      return Verdict::fail("pattern vertex " + std::to_string(i) + " maps outside the host");
    }
    if (seen.contains(image)) return Verdict::fail("map not injective at host vertex " + std::to_string(image));
    seen.insert(image);
  }
  for (auto [u, v] : pattern.edges()) {
    const int hu = emb.map[static_cast<std::size_t>(u)];
    const int hv = emb.map[static_cast<std::size_t>(v)];
    if (!host.adjacent(hu, hv)) {
      return Verdict::fail("pattern edge " + std::to_string(u) + "-" + std::to_string(v) + " maps to non-edge " +
                           std::to_string(hu) + "-" + std::to_string(hv));
    }
  }
  return Verdict::pass();
}

Verdict verify_path(const Graph& host, const PathWitness& path) {
  VertexSet seen(host.order());
  for (std::size_t i = 0; i < path.vertices.size(); ++i) {
    const int v = path.vertices[i];
    if (v < 0 || v >= host.order()) return Verdict::fail("path vertex " + std::to_string(v) + " outside the host");
    if (seen.contains(v)) return Verdict::fail("path repeats vertex " + std::to_string(v));
    seen.insert(v);
    if (i > 0 && !host.adjacent(path.vertices[i - 1], v)) {
      return Verdict::fail("path step " + std::to_string(path.vertices[i - 1]) + "-" + std::to_string(v) +
                           " is not an edge");
    }
  }
  return Verdict::pass();
}

Verdict verify_disjoint_paths(const Graph& host, const std::vector<PathWitness>& paths, int min_size) {
  VertexSet used(host.order());
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (auto v = verify_path(host, paths[i]); !v) return Verdict::fail("path " + std::to_string(i) + ": " + v.reason);
    if (paths[i].size() < min_size) {
      return Verdict::fail("path " + std::to_string(i) + " has " + std::to_string(paths[i].size()) +
                           " vertices, needs " + std::to_string(min_size));
    }
    for (int v : paths[i].vertices) {
      if (used.contains(v)) return Verdict::fail("paths share vertex " + std::to_string(v));
      used.insert(v);
    }
  }
  return Verdict::pass();
}

// ---------------------------------------------------------------------------
// Generic backtracking subgraph search.

namespace {

std::vector<int> default_order(const Graph& pattern) {
  const int n = pattern.order();
  std::vector<int> order;
  std::vector<int> placed_neighbors(static_cast<std::size_t>(n), 0);
  std::vector<bool> placed(static_cast<std::size_t>(n), false);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (placed[static_cast<std::size_t>(v)]) continue;
      if (pick < 0) {
        pick = v;
        continue;
      }
      auto key = [&](int x) { return std::pair(placed_neighbors[static_cast<std::size_t>(x)], pattern.degree(x)); };
      if (key(v) > key(pick)) pick = v;
    }
    placed[static_cast<std::size_t>(pick)] = true;
    order.push_back(pick);
    for (int w = pattern.neighbors(pick).first(); w >= 0; w = pattern.neighbors(pick).next(w)) {
      ++placed_neighbors[static_cast<std::size_t>(w)];
    }
  }
  return order;
}

class Matcher {
 public:
  Matcher(const Graph& host, const Graph& pattern, std::vector<int> order, Budget& budget)
      : host_(host), pattern_(pattern), order_(std::move(order)), budget_(budget),
        map_(static_cast<std::size_t>(pattern.order()), -1), used_(host.order()) {
    std::vector<int> position(static_cast<std::size_t>(pattern.order()), -1);
    for (std::size_t i = 0; i < order_.size(); ++i) position[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int pv = order_[i];
      std::vector<int> earlier;
      for (int w = pattern.neighbors(pv).first(); w >= 0; w = pattern.neighbors(pv).next(w)) {
        if (position[static_cast<std::size_t>(w)] < static_cast<int>(i)) earlier.push_back(w);
      }
      earlier_.push_back(std::move(earlier));
      VertexSet eligible(host.order());
      for (int h = 0; h < host.order(); ++h) {
        if (host.degree(h) >= pattern.degree(pv)) eligible.insert(h);
      }
      eligible_.push_back(std::move(eligible));
    }
    scratch_.assign(order_.size(), VertexSet(host.order()));
  }

  Search run() {
    if (dfs(0)) return Search::found;
    return budget_.exhausted() ? Search::unknown : Search::absent;
  }

  const std::vector<int>& map() const { return map_; }

 private:
  bool dfs(std::size_t depth) {
    if (depth == order_.size()) return true;
    VertexSet& cand = scratch_[depth];
    cand = eligible_[depth];
    cand -= used_;
    for (int q : earlier_[depth]) cand &= host_.neighbors(map_[static_cast<std::size_t>(q)]);
    const int pv = order_[depth];
    for (int h = cand.first(); h >= 0; h = cand.next(h)) {
      if (!budget_.spend()) return false;
      map_[static_cast<std::size_t>(pv)] = h;
      used_.insert(h);
      if (dfs(depth + 1)) return true;
      used_.erase(h);
      if (budget_.exhausted()) return false;
    }
    map_[static_cast<std::size_t>(pv)] = -1;
    return false;
  }

  const Graph& host_;
  const Graph& pattern_;
  std::vector<int> order_;
  Budget& budget_;
  std::vector<int> map_;
  VertexSet used_;
  std::vector<std::vector<int>> earlier_;
  std::vector<VertexSet> eligible_;
  std::vector<VertexSet> scratch_;
};

}  // namespace

SearchResult<std::vector<int>> find_subgraph_generic(const Graph& host, const Graph& pattern, std::vector<int> order,
                                                     Budget& budget) {
  if (pattern.order() > host.order()) return {Search::absent, std::nullopt};
  if (pattern.edge_count() > host.edge_count()) return {Search::absent, std::nullopt};
  if (order.empty()) order = default_order(pattern);
  if (static_cast<int>(order.size()) != pattern.order()) {
    throw InvalidArgument("find_subgraph_generic: search order must list every pattern vertex once");
  }
  Matcher matcher(host, pattern, std::move(order), budget);
  Search status = matcher.run();
  if (status != Search::found) return {status, std::nullopt};
  return {Search::found, matcher.map()};
}

SearchResult<Embedding> find_subgraph(const Graph& host, const PatternSpec& spec, std::uint64_t budget) {
  validate(spec);
  if (budget == 0) throw InvalidArgument("find_subgraph: budget must be positive");
  SearchResult<Embedding> result;
  Embedding emb{spec, host.order(), {}};

  if (const auto* p = std::get_if<Path>(&spec)) {
    auto path = find_path_at_least(host, p->n, budget);
    result.status = path.status;
    if (path.found()) emb.map = path.value->vertices;
  } else if (const auto* d = std::get_if<DisjointPaths>(&spec)) {
    auto paths = find_disjoint_paths(host, d->t, d->n, budget);
    result.status = paths.status;
    if (paths.found()) {
      for (const auto& path : *paths.value) emb.map.insert(emb.map.end(), path.vertices.begin(), path.vertices.end());
    }
  } else {
    const Graph pattern = build(spec);
    std::vector<int> order;
    auto rim_first = [&](int rim) {
      order.push_back(rim);
      for (int i = 0; i < rim; ++i) order.push_back(i);
    };
    if (const auto* w = std::get_if<Wheel>(&spec)) rim_first(w->k);
    if (const auto* j = std::get_if<Jahangir>(&spec)) rim_first(j->s * j->m);
    Budget b(budget);
    auto found = find_subgraph_generic(host, pattern, std::move(order), b);
    result.status = found.status;
    if (found.found()) emb.map = std::move(*found.value);
  }

  if (result.found()) {
    if (auto v = verify_embedding(host, emb); !v) {
      throw std::logic_error("find_subgraph produced an invalid embedding: " + v.reason);
    }
    result.value = std::move(emb);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Longest path.

namespace {

using Mask = std::uint32_t;

// Exact lexicographically least maximum path of a connected graph with at
// most kDpComponentLimit vertices.
class SmallPathSolver {
 public:
  SmallPathSolver(const Graph& g, Budget& budget) : n_(g.order()), budget_(budget) {
    adj_.resize(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      Mask row = 0;
      for (int w = g.neighbors(v).first(); w >= 0; w = g.neighbors(v).next(w)) row |= Mask{1} << w;
      adj_[static_cast<std::size_t>(v)] = row;
    }
    all_ = (Mask{1} << n_) - 1;
  }

  // Empty optional when the budget ran out.
  std::optional<std::vector<int>> solve() {
    if (n_ == 0) return std::vector<int>{};
    if (n_ == 1) return std::vector<int>{0};
    // A Hamiltonian path found in lexicographic DFS order is the answer
    // outright; most dense components end here. Otherwise (proved absent or
    // attempt cap reached) the subset table settles the maximum.
    const std::uint64_t cap =
        std::min<std::uint64_t>(budget_.remaining(), 4000 + 200 * static_cast<std::uint64_t>(n_) * n_);
    Budget attempt(cap);
    std::vector<int> path;
    for (int start = 0; start < n_; ++start) {
      path.assign(1, start);
      if (hamiltonian_dfs(start, Mask{1} << start, path, attempt)) {
        budget_.spend(cap - attempt.remaining());
        return path;
      }
      if (attempt.exhausted()) break;
    }
    if (!budget_.spend(cap - attempt.remaining())) return std::nullopt;
    return dynamic_programming();
  }

 private:
  Mask reach_within(int v, Mask allowed) const {
    Mask seen = adj_[static_cast<std::size_t>(v)] & allowed;
    Mask frontier = seen;
    while (frontier) {
      Mask grown = 0;
      for (Mask f = frontier; f; f &= f - 1) grown |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
      grown &= allowed & ~seen;
      seen |= grown;
      frontier = grown;
    }
    return seen;
  }

  bool hamiltonian_dfs(int v, Mask visited, std::vector<int>& path, Budget& attempt) {
    if (visited == all_) return true;
    const Mask rest = all_ & ~visited;
    if (reach_within(v, rest) != rest) return false;
    int dead_ends = 0;
    const Mask open = rest | (Mask{1} << v);
    for (Mask r = rest; r; r &= r - 1) {
      const int u = std::countr_zero(r);
      if (std::popcount(adj_[static_cast<std::size_t>(u)] & open) <= 1 && ++dead_ends > 1) return false;
    }
    for (Mask next = adj_[static_cast<std::size_t>(v)] & rest; next; next &= next - 1) {
      if (!attempt.spend()) return false;
      const int w = std::countr_zero(next);
      path.push_back(w);
      if (hamiltonian_dfs(w, visited | (Mask{1} << w), path, attempt)) return true;
      path.pop_back();
      if (attempt.exhausted()) return false;
    }
    return false;
  }

  // ends_[mask] holds every v such that some path visits exactly mask and
  // ends (equivalently starts) at v.
  std::optional<std::vector<int>> dynamic_programming() {
    ends_.assign(std::size_t{1} << n_, 0);
    for (int v = 0; v < n_; ++v) ends_[std::size_t{1} << v] = Mask{1} << v;
    int best = 1;
    for (std::size_t mask = 1; mask < ends_.size(); ++mask) {
      const Mask tips = ends_[mask];
      if (!tips) continue;
      if (!budget_.spend()) return std::nullopt;
      best = std::max(best, std::popcount(static_cast<Mask>(mask)));
      for (Mask t = tips; t; t &= t - 1) {
        const int v = std::countr_zero(t);
        for (Mask ext = adj_[static_cast<std::size_t>(v)] & ~static_cast<Mask>(mask); ext; ext &= ext - 1) {
          const int u = std::countr_zero(ext);
          ends_[mask | (std::size_t{1} << u)] |= Mask{1} << u;
        }
      }
    }
    return reconstruct(best);
  }

  // Is there a path on exactly `length` vertices inside `avail` starting at w?
  bool extendable(int w, Mask avail, int length) {
    const Mask wbit = Mask{1} << w;
    for (Mask sub = avail;; sub = (sub - 1) & avail) {
      if ((sub & wbit) && std::popcount(sub) == length && (ends_[sub] & wbit)) return true;
      if (sub == 0) break;
    }
    return false;
  }

  std::optional<std::vector<int>> reconstruct(int length) {
    std::vector<int> path;
    Mask used = 0;
    for (int step = 0; step < length; ++step) {
      const Mask avail = all_ & ~used;
      const Mask options = step == 0 ? avail : adj_[static_cast<std::size_t>(path.back())] & avail;
      bool placed = false;
      for (Mask o = options; o; o &= o - 1) {
        const int w = std::countr_zero(o);
        if (!budget_.spend(1 + (std::uint64_t{1} << std::popcount(avail) >> 4))) return std::nullopt;
        if (extendable(w, avail, length - step)) {
          path.push_back(w);
          used |= Mask{1} << w;
          placed = true;
          break;
        }
      }
      if (!placed) throw std::logic_error("longest path reconstruction lost the optimum");
    }
    return path;
  }

  int n_;
  Budget& budget_;
  std::vector<Mask> adj_;
  Mask all_ = 0;
  std::vector<Mask> ends_;
};

// Lexicographic-order DFS with a reachability bound. In maximum mode the
// first path of each new record length is kept, which makes the final record
// the lexicographically least maximum path; with a target it stops at the
// first path of that many vertices.
class PathBranchAndBound {
 public:
  PathBranchAndBound(const Graph& g, Budget& budget, int target)
      : g_(g), budget_(budget), target_(target), visited_(g.order()) {}

  std::optional<std::vector<int>> solve() {
    for (int start = 0; start < g_.order() && !done_; ++start) {
      path_.assign(1, start);
      visited_ = VertexSet(g_.order());
      visited_.insert(start);
      dfs(start);
      if (budget_.exhausted()) return std::nullopt;
    }
    return best_;
  }

 private:
  int needed() const { return target_ > 0 ? target_ : static_cast<int>(best_.size()) + 1; }

  void dfs(int v) {
    if (path_.size() > best_.size()) {
      best_ = path_;
      if ((target_ > 0 && static_cast<int>(best_.size()) >= target_) || static_cast<int>(best_.size()) == g_.order()) {
        done_ = true;
        return;
      }
    }
    const VertexSet open = g_.vertices() - visited_;
    VertexSet reach = g_.neighbors(v) & open;
    VertexSet frontier = reach;
    while (!frontier.empty()) {
      VertexSet grown(g_.order());
      for (int u = frontier.first(); u >= 0; u = frontier.next(u)) grown |= g_.neighbors(u);
      grown &= open;
      grown -= reach;
      reach |= grown;
      frontier = std::move(grown);
    }
    if (static_cast<int>(path_.size()) + reach.size() < needed()) return;
    const VertexSet next = g_.neighbors(v) & open;
    for (int w = next.first(); w >= 0; w = next.next(w)) {
      if (!budget_.spend()) return;
      path_.push_back(w);
      visited_.insert(w);
      dfs(w);
      visited_.erase(w);
      path_.pop_back();
      if (done_ || budget_.exhausted()) return;
    }
  }

  const Graph& g_;
  Budget& budget_;
  int target_;
  VertexSet visited_;
  std::vector<int> path_;
  std::vector<int> best_;
  bool done_ = false;
};

// Lexicographically least maximum path of a connected graph, in local labels.
std::optional<std::vector<int>> component_longest_path(const Graph& comp, Budget& budget) {
  if (comp.order() <= kDpComponentLimit) return SmallPathSolver(comp, budget).solve();
  return PathBranchAndBound(comp, budget, 0).solve();
}

std::vector<int> lift(const std::vector<int>& local, const std::vector<int>& to_host) {
  std::vector<int> out;
  out.reserve(local.size());
  for (int v : local) out.push_back(to_host[static_cast<std::size_t>(v)]);
  return out;
}

}  // namespace

SearchResult<PathWitness> longest_path(const Graph& g, std::uint64_t budget) {
  if (budget == 0) throw InvalidArgument("longest_path: budget must be positive");
  Budget b(budget);
  PathWitness best;
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < best.size()) continue;
    auto sub = induced(g, comp);
    auto local = component_longest_path(sub.graph, b);
    if (!local) return {Search::unknown, std::nullopt};
    PathWitness candidate{lift(*local, sub.to_host)};
    if (candidate.size() > best.size() || (candidate.size() == best.size() && candidate.vertices < best.vertices)) {
      best = std::move(candidate);
    }
  }
  return {Search::found, std::move(best)};
}

namespace {

SearchResult<PathWitness> path_at_least(const Graph& g, int n, Budget& b) {
  for (const auto& comp : connected_components(g)) {
    if (comp.size() < n) continue;
    auto sub = induced(g, comp);
    std::optional<std::vector<int>> local;
    if (sub.graph.order() <= kDpComponentLimit) {
      local = SmallPathSolver(sub.graph, b).solve();
    } else {
      local = PathBranchAndBound(sub.graph, b, n).solve();
    }
    if (!local) return {Search::unknown, std::nullopt};
    if (static_cast<int>(local->size()) >= n) {
      local->resize(static_cast<std::size_t>(n));
      return {Search::found, PathWitness{lift(*local, sub.to_host)}};
    }
  }
  return {Search::absent, std::nullopt};
}

}  // namespace

SearchResult<PathWitness> find_path_at_least(const Graph& g, int n, std::uint64_t budget) {
  if (n < 1) throw InvalidArgument("find_path_at_least: n must be >= 1");
  if (budget == 0) throw InvalidArgument("find_path_at_least: budget must be positive");
  Budget b(budget);
  return path_at_least(g, n, b);
}

// ---------------------------------------------------------------------------
// Disjoint paths.

namespace {

class DisjointPathSearch {
 public:
  DisjointPathSearch(const Graph& g, int n, Budget& budget) : g_(g), n_(n), budget_(budget) {}

  // found / absent / unknown for t paths inside `residual`.
  Search run(const VertexSet& residual, int t, std::vector<PathWitness>& out) {
    if (t == 0) return Search::found;
    if (residual.size() < t * n_) return Search::absent;
    auto sub = induced(g_, residual);
    int capacity = 0;
    for (const auto& comp : connected_components(sub.graph)) capacity += comp.size() / n_;
    if (capacity < t) return Search::absent;
    if (t == 1) {
      auto single = path_at_least(sub.graph, n_, budget_);
      if (single.status != Search::found) return single.status;
      out.push_back(PathWitness{lift(single.value->vertices, sub.to_host)});
      return Search::found;
    }
    // Enumerate n-vertex paths (lower endpoint first) and recurse on the rest.
    std::vector<int> path;
    VertexSet on_path(g_.order());
    Search verdict = Search::absent;
    for (int start = residual.first(); start >= 0 && verdict != Search::found; start = residual.next(start)) {
      path.assign(1, start);
      on_path.insert(start);
      verdict = extend(residual, t, path, on_path, out);
      on_path.erase(start);
      if (verdict == Search::unknown) return verdict;
    }
    return verdict;
  }

 private:
  Search extend(const VertexSet& residual, int t, std::vector<int>& path, VertexSet& on_path,
                std::vector<PathWitness>& out) {
    if (static_cast<int>(path.size()) == n_) {
      if (n_ > 1 && path.back() < path.front()) return Search::absent;
      std::vector<PathWitness> rest;
      Search s = run(residual - on_path, t - 1, rest);
      if (s == Search::found) {
        out.push_back(PathWitness{path});
        out.insert(out.end(), rest.begin(), rest.end());
      }
      return s;
    }
    const VertexSet next = (g_.neighbors(path.back()) & residual) - on_path;
    for (int w = next.first(); w >= 0; w = next.next(w)) {
      if (!budget_.spend()) return Search::unknown;
      path.push_back(w);
      on_path.insert(w);
      Search s = extend(residual, t, path, on_path, out);
      on_path.erase(w);
      path.pop_back();
      if (s != Search::absent) return s;
    }
    return Search::absent;
  }

  const Graph& g_;
  int n_;
  Budget& budget_;
};

}  // namespace

SearchResult<std::vector<PathWitness>> find_disjoint_paths(const Graph& g, int t, int n, std::uint64_t budget) {
  if (t < 1 || n < 1) throw InvalidArgument("find_disjoint_paths: needs t >= 1 and n >= 1");
  if (budget == 0) throw InvalidArgument("find_disjoint_paths: budget must be positive");
  Budget b(budget);
  std::vector<PathWitness> paths;
  Search s = DisjointPathSearch(g, n, b).run(g.vertices(), t, paths);
  if (s != Search::found) return {s, std::nullopt};
  if (auto v = verify_disjoint_paths(g, paths, n); !v) {
    throw std::logic_error("find_disjoint_paths produced invalid paths: " + v.reason);
  }
  return {Search::found, std::move(paths)};
}

}  // namespace jramsey
