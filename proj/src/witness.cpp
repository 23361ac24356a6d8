#include "jramsey/witness.hpp"

#include <algorithm>
#include <optional>

namespace jramsey {

namespace {

PathWitness longest_or_throw(const Graph& g, std::uint64_t budget) {
  auto result = longest_path(g, budget);
  if (result.status == Search::unknown) throw BudgetExhausted("longest path search exhausted its budget");
  return std::move(*result.value);
}

PathWitness lift(const PathWitness& p, const std::vector<int>& to_host) {
  PathWitness out;
  out.vertices.reserve(p.vertices.size());
  for (int v : p.vertices) out.vertices.push_back(to_host[static_cast<std::size_t>(v)]);
  return out;
}

std::vector<int> lift(const std::vector<int>& vs, const std::vector<int>& to_host) {
  std::vector<int> out;
  out.reserve(vs.size());
  for (int v : vs) out.push_back(to_host[static_cast<std::size_t>(v)]);
  return out;
}

void lift_trace(ExtractionTrace& trace, const std::vector<int>& to_host) {
  for (auto& p : trace.paths) p = lift(p, to_host);
  for (auto& [u, v] : trace.augmented_edges) {
    u = to_host[static_cast<std::size_t>(u)];
    v = to_host[static_cast<std::size_t>(v)];
  }
  for (auto& group : trace.groups) group.second = lift(group.second, to_host);
  for (auto& sel : trace.selections) sel.second = to_host[static_cast<std::size_t>(sel.second)];
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

std::string indexed(const char* role, int i) { return std::string(role) + "_" + std::to_string(i); }

// Finish an extraction: verify against F or complement(F) and stamp the result.
DichotomyWitness finish(const Graph& f, DichotomyWitness w, int min_path_size) {
  if (auto v = verify_witness(f, w, min_path_size); !v) {
    throw MaximalityViolation("extracted witness failed verification: " + v.reason, w.trace);
  }
  w.verified = true;
  return w;
}

DichotomyWitness path_witness(PathWitness p, ExtractionTrace trace) {
  trace.case_id = "PathInF";
  trace.paths = {p};
  return DichotomyWitness{PathsInF{{std::move(p)}}, std::move(trace), false};
}

// Complete complement: any injective placement works.
DichotomyWitness trivial_jahangir(const Graph& f, int s, int m, ExtractionTrace trace) {
  trace.case_id = trace.theorem == "1" ? "Thm1-k1" : "Thm2-OddM-k1";
  Embedding emb{Jahangir{s, m}, f.order(), {}};
  for (int i = 0; i <= s * m; ++i) emb.map.push_back(i);
  return DichotomyWitness{JahangirInComplement{std::move(emb)}, std::move(trace), false};
}

// Rim assembly from a path system: the path endpoints plus some of the
// extra vertices form the rim, one extra is the hub. The extras occupy rim
// positions in one residue class mod s, the spokes use another, and the two
// endpoints of one path are never rim neighbours. Endpoints are filled in
// position order with backtracking.
class RimAssembly {
 public:
  RimAssembly(const Graph& f, const std::vector<PathWitness>& paths, std::vector<int> extras, int s, int m)
      : f_(f), extras_(std::move(extras)), s_(s), m_(m), rim_(s * m) {
    for (std::size_t i = 0; i < paths.size(); ++i) {
      endpoints_.push_back(paths[i].front());
      owner_.push_back(static_cast<int>(i));
      endpoints_.push_back(paths[i].back());
      owner_.push_back(static_cast<int>(i));
    }
  }

  std::optional<Embedding> run() {
    const int specials = rim_ - static_cast<int>(endpoints_.size());
    if (specials < 1 || specials + 1 > static_cast<int>(extras_.size())) return std::nullopt;
    for (int h = static_cast<int>(extras_.size()) - 1; h >= 0; --h) {
      hub_ = extras_[static_cast<std::size_t>(h)];
      special_vertices_.clear();
      for (int i = 0; i < static_cast<int>(extras_.size()) && static_cast<int>(special_vertices_.size()) < specials; ++i) {
        if (i != h) special_vertices_.push_back(extras_[static_cast<std::size_t>(i)]);
      }
      for (spoke_class_ = 0; spoke_class_ < s_; ++spoke_class_) {
        for (int q = 0; q < s_; ++q) {
          if (q == spoke_class_) continue;
          std::vector<int> slots;
          for (int p = q; p < rim_; p += s_) slots.push_back(p);
          if (auto emb = try_slots(slots, specials)) return emb;
        }
      }
    }
    return std::nullopt;
  }

  int hub() const { return hub_; }

 private:
  bool rim_ok(int a, int b) const { return !f_.adjacent(a, b); }

  std::optional<Embedding> try_slots(const std::vector<int>& slots, int specials) {
    // Choose which slots of the class hold the extras, lexicographically.
    std::vector<int> pick(static_cast<std::size_t>(specials));
    for (int i = 0; i < specials; ++i) pick[static_cast<std::size_t>(i)] = i;
    const int total = static_cast<int>(slots.size());
    if (specials > total) return std::nullopt;
    while (true) {
      rim_vertices_.assign(static_cast<std::size_t>(rim_), -1);
      bool ok = true;
      for (int i = 0; i < specials; ++i) {
        rim_vertices_[static_cast<std::size_t>(slots[static_cast<std::size_t>(pick[static_cast<std::size_t>(i)])])] =
            special_vertices_[static_cast<std::size_t>(i)];
      }
      for (int p = 0; p < rim_ && ok; ++p) {
        const int a = rim_vertices_[static_cast<std::size_t>(p)];
        const int b = rim_vertices_[static_cast<std::size_t>((p + 1) % rim_)];
        if (a >= 0 && b >= 0 && !rim_ok(a, b)) ok = false;
      }
      if (ok) {
        used_.assign(endpoints_.size(), false);
        if (fill(0)) return embedding();
      }
      // Next combination.
      int i = specials - 1;
      while (i >= 0 && pick[static_cast<std::size_t>(i)] == total - specials + i) --i;
      if (i < 0) return std::nullopt;
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < specials; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  int owner_of(int v) const {
    for (std::size_t i = 0; i < endpoints_.size(); ++i) {
      if (endpoints_[i] == v) return owner_[i];
    }
    return -1;
  }

  bool compatible(int a, int b) const {
    if (!rim_ok(a, b)) return false;
    const int oa = owner_of(a);
    return oa < 0 || oa != owner_of(b);
  }

  bool fill(int p) {
    if (p == rim_) return true;
    if (rim_vertices_[static_cast<std::size_t>(p)] >= 0) return placed_ok(p) && fill(p + 1);
    for (std::size_t e = 0; e < endpoints_.size(); ++e) {
      if (used_[e]) continue;
      rim_vertices_[static_cast<std::size_t>(p)] = endpoints_[e];
      used_[e] = true;
      if (placed_ok(p) && fill(p + 1)) return true;
      used_[e] = false;
      rim_vertices_[static_cast<std::size_t>(p)] = -1;
    }
    return false;
  }

  bool placed_ok(int p) const {
    const int v = rim_vertices_[static_cast<std::size_t>(p)];
    if (p % s_ == spoke_class_ && f_.adjacent(hub_, v)) return false;
    if (p > 0 && !compatible(rim_vertices_[static_cast<std::size_t>(p - 1)], v)) return false;
    const int next = rim_vertices_[static_cast<std::size_t>((p + 1) % rim_)];
    if (next >= 0 && (p + 1 < rim_ || p + 1 == rim_) && !compatible(v, next)) return false;
    return true;
  }

  Embedding embedding() const {
    Embedding emb{Jahangir{s_, m_}, f_.order(), {}};
    for (int j = 0; j < rim_; ++j) emb.map.push_back(rim_vertices_[static_cast<std::size_t>((j + spoke_class_) % rim_)]);
    emb.map.push_back(hub_);
    return emb;
  }

  const Graph& f_;
  std::vector<int> endpoints_;
  std::vector<int> owner_;
  std::vector<int> extras_;
  int s_, m_, rim_;
  int hub_ = -1;
  int spoke_class_ = 0;
  std::vector<int> special_vertices_;
  std::vector<int> rim_vertices_;
  std::vector<bool> used_;
};

// Path-system branch shared by Theorem 1 Case 1 and Theorem 2 Cases 1 and 3.
// `scope` restricts the system to F[scope]; extras come from its remainder.
JahangirInComplement path_system_branch(const Graph& f, const VertexSet& scope, int count, int extras_needed, int s,
                                        int m, std::uint64_t budget, ExtractionTrace& trace) {
  auto sub = induced(f, scope);
  PathSystem ps;
  try {
    ps = build_path_system(sub.graph, count, budget);
  } catch (const InvalidArgument& e) {
    throw MaximalityViolation(std::string("path system: ") + e.what(), trace);
  }
  for (const auto& p : ps.paths) trace.paths.push_back(lift(p, sub.to_host));
  for (auto [u, v] : ps.augmented_edges) {
    trace.augmented_edges.emplace_back(sub.to_host[static_cast<std::size_t>(u)], sub.to_host[static_cast<std::size_t>(v)]);
  }
  const auto remainder = lift(ps.remainder.members(), sub.to_host);
  if (static_cast<int>(remainder.size()) < extras_needed) {
    throw MaximalityViolation("path system leaves " + std::to_string(remainder.size()) + " vertices, need " +
                                  std::to_string(extras_needed),
                              trace);
  }
  std::vector<int> extras(remainder.begin(), remainder.begin() + extras_needed);
  static constexpr const char* kExtraNames[] = {"x", "y", "z"};
  for (int i = 0; i < extras_needed; ++i) {
    trace.selections.emplace_back(i < 3 ? kExtraNames[i] : indexed("extra", i + 1), extras[static_cast<std::size_t>(i)]);
  }
  std::vector<PathWitness> lifted_paths(trace.paths.end() - count, trace.paths.end());
  RimAssembly assembly(f, lifted_paths, extras, s, m);
  auto emb = assembly.run();
  if (!emb) throw MaximalityViolation("no rim arrangement of the path-system endpoints", trace);
  trace.selections.emplace_back("hub", assembly.hub());
  return JahangirInComplement{std::move(*emb)};
}

ExtractionTrace new_trace(const char* theorem, int n, int s, int m, int t, bool forced) {
  ExtractionTrace trace;
  trace.theorem = theorem;
  trace.n = n;
  trace.s = s;
  trace.m = m;
  trace.t = t;
  trace.forced = forced;
  return trace;
}

std::optional<PathWitness> path_in_f(const Graph& f, int n, std::uint64_t budget) {
  auto found = find_path_at_least(f, n, budget);
  if (found.status == Search::unknown) throw BudgetExhausted("path search exhausted its budget");
  if (!found.found()) return std::nullopt;
  return std::move(*found.value);
}

}  // namespace

PathSystem build_path_system(const Graph& f, int count, std::uint64_t budget) {
  require(count >= 1, "path system needs count >= 1");
  PathSystem ps{f, {}, {}, f.vertices()};
  VertexSet residual = f.vertices();
  for (int i = 0; i < count; ++i) {
    if (residual.size() < 2) {
      throw InvalidArgument("path system: residual exhausted after " + std::to_string(i) + " of " +
                            std::to_string(count) + " paths");
    }
    auto sub = induced(f, residual);
    PathWitness path = longest_or_throw(sub.graph, budget);
    if (path.size() <= 1) {
      const int u = residual.first();
      const int v = residual.next(u);
      path.vertices = {u, v};
      ps.augmented_edges.emplace_back(u, v);
    } else {
      path = lift(path, sub.to_host);
    }
    for (int v : path.vertices) residual.erase(v);
    ps.paths.push_back(std::move(path));
  }
  ps.remainder = residual;
  return ps;
}

DichotomyWitness extract_theorem1(const Graph& f, int n, int s, int m, const ExtractorOptions& opts) {
  require(s >= 2 && m >= 2 && n >= 1, "Theorem 1 extraction needs s >= 2, m >= 2, n >= 1");
  const int sm = s * m;
  if (!opts.force) {
    require(s % 2 == 0, "Theorem 1 needs even s");
    require(m >= 3, "Theorem 1 needs m >= 3");
    require(n >= (2 * sm - 1) * (sm / 2 - 1) + 1,
            "Theorem 1 needs n >= (2sm-1)(sm/2-1)+1 = " + std::to_string((2 * sm - 1) * (sm / 2 - 1) + 1));
    require(f.order() >= n + sm / 2 - 1, "Theorem 1 needs order >= n + sm/2 - 1 = " + std::to_string(n + sm / 2 - 1));
  }
  ExtractionTrace trace = new_trace("1", n, s, m, 1, opts.force);

  if (auto p = path_in_f(f, n, opts.budget)) {
    trace.k = p->size();
    return finish(f, path_witness(std::move(*p), std::move(trace)), n);
  }

  const PathWitness l1 = longest_or_throw(f, opts.budget);
  const int k = l1.size();
  trace.k = k;
  if (k <= 1) {
    if (f.order() < sm + 1) throw MaximalityViolation("edgeless host smaller than J_{s,m}", trace);
    return finish(f, trivial_jahangir(f, s, m, std::move(trace)), n);
  }

  if (k <= 2 * sm - 1) {
    trace.case_id = "Thm1-Case1";
    auto jahangir = path_system_branch(f, f.vertices(), sm / 2 - 1, 3, s, m, opts.budget, trace);
    return finish(f, DichotomyWitness{std::move(jahangir), std::move(trace), false}, n);
  }

  // Case 2: quadruples of consecutive vertices of L_1 against pairs of outside vertices.
  trace.case_id = "Thm1-Case2";
  trace.paths = {l1};
  const auto& l = l1.vertices;
  const int q = sm / 2 - 1;
  VertexSet outside = f.vertices();
  for (int v : l) outside.erase(v);
  const auto ys = outside.members();
  if (static_cast<int>(ys.size()) < sm / 2) {
    throw MaximalityViolation("fewer than sm/2 vertices outside the longest path", trace);
  }
  std::vector<int> rim;
  for (int i = 1; i <= q; ++i) {
    std::vector<int> quad(l.begin() + (4 * i - 3), l.begin() + (4 * i + 1));
    const int ya = ys[static_cast<std::size_t>(i - 1)];
    const int yb = ys[static_cast<std::size_t>(i)];
    trace.groups.emplace_back(indexed("C", i), quad);
    trace.groups.emplace_back(indexed("Y", i), std::vector<int>{ya, yb});
    std::sort(quad.begin(), quad.end());
    auto c = std::find_if(quad.begin(), quad.end(), [&](int v) { return !f.adjacent(v, ya) && !f.adjacent(v, yb); });
    if (c == quad.end()) {
      throw MaximalityViolation("every vertex of C_" + std::to_string(i) + " is adjacent to Y_" + std::to_string(i),
                                trace);
    }
    trace.selections.emplace_back(indexed("y", i), ya);
    trace.selections.emplace_back(indexed("c", i), *c);
    rim.push_back(ya);
    rim.push_back(*c);
  }
  rim.push_back(ys[static_cast<std::size_t>(q)]);
  trace.selections.emplace_back(indexed("y", q + 1), ys[static_cast<std::size_t>(q)]);
  rim.push_back(l.back());
  trace.selections.emplace_back("l_1k", l.back());
  trace.selections.emplace_back("hub", l.front());

  Embedding emb{Jahangir{s, m}, f.order(), rim};
  emb.map.push_back(l.front());
  return finish(f, DichotomyWitness{JahangirInComplement{std::move(emb)}, std::move(trace), false}, n);
}

Embedding wheel_to_jahangir(const Embedding& wheel, int s, int m) {
  const auto* spec = std::get_if<Wheel>(&wheel.pattern);
  require(spec != nullptr, "wheel_to_jahangir: embedding is not of a wheel");
  require(s >= 2 && m >= 2, "wheel_to_jahangir: needs s >= 2 and m >= 2");
  require(spec->k == s * m, "wheel_to_jahangir: rim length " + std::to_string(spec->k) + " differs from sm = " +
                                std::to_string(s * m));
  // Both families put the rim at 0..sm-1 and the hub at sm.
  return Embedding{Jahangir{s, m}, wheel.host_order, wheel.map};
}

DichotomyWitness extract_theorem2(const Graph& f, int n, int s, int m, const ExtractorOptions& opts) {
  require(s >= 2 && m >= 2 && n >= 1, "Theorem 2 extraction needs s >= 2, m >= 2, n >= 1");
  const int sm = s * m;
  const bool even_m = m % 2 == 0;
  if (!opts.force) {
    require(s >= 3 && s % 2 == 1, "Theorem 2 needs odd s >= 3");
    if (even_m) {
      require(n >= (sm / 2) * (sm - 2), "Theorem 2 (even m) needs n >= (sm/2)(sm-2) = " +
                                            std::to_string((sm / 2) * (sm - 2)));
      require(f.order() >= 2 * n - 1, "Theorem 2 (even m) needs order >= 2n-1 = " + std::to_string(2 * n - 1));
    } else {
      require(m >= 3, "Theorem 2 (odd m) needs m >= 3");
      require(n >= ((sm - 1) / 2) * (sm - 1), "Theorem 2 (odd m) needs n >= ((sm-1)/2)(sm-1) = " +
                                                  std::to_string(((sm - 1) / 2) * (sm - 1)));
      require(f.order() >= 2 * n, "Theorem 2 (odd m) needs order >= 2n = " + std::to_string(2 * n));
    }
  }
  ExtractionTrace trace = new_trace("2", n, s, m, 1, opts.force);

  if (auto p = path_in_f(f, n, opts.budget)) {
    trace.k = p->size();
    return finish(f, path_witness(std::move(*p), std::move(trace)), n);
  }

  if (even_m) {
    trace.case_id = "Thm2-EvenM";
    auto wheel = find_subgraph(complement(f), Wheel{sm}, opts.budget);
    if (wheel.status == Search::unknown) throw WheelNotFound("wheel search exhausted its budget", true);
    if (!wheel.found()) throw WheelNotFound("complement contains no W_" + std::to_string(sm), false);
    trace.selections.emplace_back("hub", wheel.value->map.back());
    for (int i = 0; i < sm; ++i) trace.selections.emplace_back(indexed("rim", i), wheel.value->map[static_cast<std::size_t>(i)]);
    trace.notes.push_back("J_{s,m} is the wheel with only the spokes at rim positions 0, s, 2s, ... kept");
    auto emb = wheel_to_jahangir(*wheel.value, s, m);
    return finish(f, DichotomyWitness{JahangirInComplement{std::move(emb)}, std::move(trace), false}, n);
  }

  const PathWitness l1 = longest_or_throw(f, opts.budget);
  const int k = l1.size();
  trace.k = k;
  if (k <= 1) {
    if (f.order() < sm + 1) throw MaximalityViolation("edgeless host smaller than J_{s,m}", trace);
    return finish(f, trivial_jahangir(f, s, m, std::move(trace)), n);
  }
  const int count = (sm - 1) / 2;

  if (k < sm - 1) {
    trace.case_id = "Thm2-OddM-Case1";
    auto jahangir = path_system_branch(f, f.vertices(), count, 2, s, m, opts.budget, trace);
    return finish(f, DichotomyWitness{std::move(jahangir), std::move(trace), false}, n);
  }

  VertexSet v1 = f.vertices();
  for (int v : l1.vertices) v1.erase(v);
  auto sub1 = induced(f, v1);
  const PathWitness l2 = lift(longest_or_throw(sub1.graph, opts.budget), sub1.to_host);
  const int t = l2.size();

  if (t < sm - 1) {
    trace.case_id = "Thm2-OddM-Case3";
    trace.paths.push_back(l1);
    trace.notes.push_back("path system of (sm-1)/2 paths built inside F[V_1], V_1 = V(F) minus L_1; |L_2| = " +
                          std::to_string(t));
    auto jahangir = path_system_branch(f, v1, count, 2, s, m, opts.budget, trace);
    return finish(f, DichotomyWitness{std::move(jahangir), std::move(trace), false}, n);
  }

  // Case 2: couples A_i on L_1 and B_i on L_2, hub x outside both paths.
  trace.case_id = "Thm2-OddM-Case2";
  trace.paths = {l1, l2};
  VertexSet v2 = v1;
  for (int v : l2.vertices) v2.erase(v);
  if (v2.size() < 2) throw MaximalityViolation("fewer than two vertices outside L_1 and L_2", trace);
  const int x = v2.first();
  const int y = v2.next(x);
  trace.selections.emplace_back("x", x);
  trace.selections.emplace_back("y", y);

  auto couple = [](const std::vector<int>& path, int i) {
    const int len = static_cast<int>(path.size());
    // Positions are 1-based along the path: odd i -> (i+1, i+2), even i -> (len-i, len-i+1).
    const int first = i % 2 == 1 ? i + 1 : len - i;
    return std::vector<int>{path[static_cast<std::size_t>(first - 1)], path[static_cast<std::size_t>(first)]};
  };
  auto pick_non_neighbor = [&](std::vector<int> pair, const std::string& what) {
    std::sort(pair.begin(), pair.end());
    for (int v : pair) {
      if (!f.adjacent(v, x)) return v;
    }
    throw MaximalityViolation("both vertices of " + what + " are adjacent to x", trace);
  };

  const int q = (sm - 3) / 2;
  std::vector<int> rim{l1.front()};
  for (int i = 1; i <= q; ++i) {
    auto a_pair = couple(l1.vertices, i);
    auto b_pair = couple(l2.vertices, i);
    trace.groups.emplace_back(indexed("A", i), a_pair);
    trace.groups.emplace_back(indexed("B", i), b_pair);
    const int b = pick_non_neighbor(b_pair, indexed("B", i));
    const int a = pick_non_neighbor(a_pair, indexed("A", i));
    trace.selections.emplace_back(indexed("b", i), b);
    trace.selections.emplace_back(indexed("a", i), a);
    rim.push_back(b);
    rim.push_back(a);
  }
  rim.push_back(l2.back());
  rim.push_back(y);
  trace.selections.emplace_back("l_11", l1.front());
  trace.selections.emplace_back("l_2t", l2.back());

  for (int p = 0; p < sm; ++p) {
    const int a = rim[static_cast<std::size_t>(p)];
    const int b = rim[static_cast<std::size_t>((p + 1) % sm)];
    if (f.adjacent(a, b)) {
      throw MaximalityViolation("rim pair " + std::to_string(a) + "-" + std::to_string(b) + " is an edge of F", trace);
    }
  }
  int spoke_class = -1;
  for (int r = 0; r < s && spoke_class < 0; ++r) {
    bool ok = true;
    for (int p = r; p < sm; p += s) ok = ok && !f.adjacent(x, rim[static_cast<std::size_t>(p)]);
    if (ok) spoke_class = r;
  }
  if (spoke_class < 0) throw MaximalityViolation("no spoke class avoids the F-neighbours of x", trace);
  trace.selections.emplace_back("hub", x);

  Embedding emb{Jahangir{s, m}, f.order(), {}};
  for (int j = 0; j < sm; ++j) emb.map.push_back(rim[static_cast<std::size_t>((j + spoke_class) % sm)]);
  emb.map.push_back(x);
  return finish(f, DichotomyWitness{JahangirInComplement{std::move(emb)}, std::move(trace), false}, n);
}

DichotomyWitness extract_t_paths(const Graph& f, int t, int n, int s, int m, const ExtractorOptions& opts) {
  require(t >= 1, "Theorem 3 needs t >= 1");
  require(s >= 2 && m >= 2 && n >= 1, "Theorem 3 extraction needs s >= 2, m >= 2, n >= 1");
  const int sm = s * m;
  if (!opts.force) {
    require(s % 2 == 0, "Theorem 3 needs even s");
    require(m >= 3, "Theorem 3 needs m >= 3");
    require(n >= (sm / 2 - 1) * (2 * sm - 1) + 1,
            "Theorem 3 needs n >= (sm/2-1)(2sm-1)+1 = " + std::to_string((sm / 2 - 1) * (2 * sm - 1) + 1));
    require(f.order() >= t * n + sm / 2 - 1,
            "Theorem 3 needs order >= tn + sm/2 - 1 = " + std::to_string(t * n + sm / 2 - 1));
  }

  ExtractionTrace trace = new_trace("3", n, s, m, t, opts.force);
  std::vector<PathWitness> paths;
  VertexSet residual = f.vertices();
  for (int step = 1; step <= t; ++step) {
    auto sub = induced(f, residual);
    DichotomyWitness inner;
    try {
      inner = extract_theorem1(sub.graph, n, s, m, opts);
    } catch (MaximalityViolation& e) {
      ExtractionTrace lifted = e.trace();
      lift_trace(lifted, sub.to_host);
      lifted.theorem = "3";
      lifted.case_id = "Thm3-step" + std::to_string(step) + ":" + lifted.case_id;
      throw MaximalityViolation(e.what(), std::move(lifted));
    }
    if (auto* j = std::get_if<JahangirInComplement>(&inner.outcome)) {
      ExtractionTrace lifted = std::move(inner.trace);
      lift_trace(lifted, sub.to_host);
      lifted.theorem = "3";
      lifted.t = t;
      lifted.case_id = "Thm3-step" + std::to_string(step) + ":" + lifted.case_id;
      lifted.notes.push_back("residual after " + std::to_string(step - 1) + " paths; complement of F[residual] is an induced subgraph of complement(F)");
      Embedding emb{j->embedding.pattern, f.order(), lift(j->embedding.map, sub.to_host)};
      return finish(f, DichotomyWitness{JahangirInComplement{std::move(emb)}, std::move(lifted), false}, n);
    }
    PathWitness path = lift(std::get<PathsInF>(inner.outcome).paths.front(), sub.to_host);
    for (int v : path.vertices) residual.erase(v);
    paths.push_back(std::move(path));
  }
  trace.case_id = "Thm3-step" + std::to_string(t);
  trace.paths = paths;
  DichotomyWitness out{PathsInF{std::move(paths)}, std::move(trace), false};
  if (static_cast<int>(std::get<PathsInF>(out.outcome).paths.size()) != t) {
    throw MaximalityViolation("expected " + std::to_string(t) + " paths", out.trace);
  }
  return finish(f, std::move(out), n);
}

Verdict verify_witness(const Graph& f, const DichotomyWitness& w, int min_path_size) {
  if (const auto* p = std::get_if<PathsInF>(&w.outcome)) {
    if (p->paths.empty()) return Verdict::fail("no paths in witness");
    return verify_disjoint_paths(f, p->paths, min_path_size);
  }
  const auto& emb = std::get<JahangirInComplement>(w.outcome).embedding;
  if (!std::holds_alternative<Jahangir>(emb.pattern)) return Verdict::fail("complement witness is not a Jahangir graph");
  return verify_embedding(complement(f), emb);
}

// ---------------------------------------------------------------------------
// Lower-bound constructions.

namespace {

struct ExtremalParams {
  int n, s, m, t;
  int expected_order;
};

ExtremalParams params_of(const TheoremCase& tc) {
  return std::visit(
      [](const auto& c) -> ExtremalParams {
        using T = std::decay_t<decltype(c)>;
        const int sm = c.s * c.m;
        if constexpr (std::is_same_v<T, Thm1Case>) return {c.n, c.s, c.m, 1, c.n - 1 + sm / 2 - 1};
        if constexpr (std::is_same_v<T, Thm2EvenMCase>) return {c.n, c.s, c.m, 1, 2 * c.n - 2};
        if constexpr (std::is_same_v<T, Thm2OddMCase>) return {c.n, c.s, c.m, 1, 2 * c.n - 1};
        if constexpr (std::is_same_v<T, Thm3Case>) return {c.n, c.s, c.m, c.t, c.t * c.n - 1 + sm / 2 - 1};
      },
      tc);
}

// Component sizes when every component is a clique, otherwise empty.
std::optional<std::vector<int>> clique_parts(const Graph& g) {
  std::vector<int> parts;
  for (const auto& comp : connected_components(g)) {
    const int size = comp.size();
    for (int v = comp.first(); v >= 0; v = comp.next(v)) {
      if (g.degree(v) != size - 1) return std::nullopt;
    }
    parts.push_back(size);
  }
  return parts;
}

constexpr std::uint64_t kCrossCheckBudget = 5'000'000;

}  // namespace

Verdict verify_extremal(const TheoremCase& tc) {
  Graph g;
  try {
    g = extremal_graph(tc);
  } catch (const InvalidArgument& e) {
    return Verdict::fail(std::string("invalid case: ") + e.what());
  }
  return verify_extremal_graph(tc, g);
}

Verdict verify_extremal_graph(const TheoremCase& tc, const Graph& g) {
  try {
    validate(tc);
  } catch (const InvalidArgument& e) {
    return Verdict::fail(std::string("invalid case: ") + e.what());
  }
  const auto p = params_of(tc);
  if (g.order() != p.expected_order) {
    return Verdict::fail("order " + std::to_string(g.order()) + " differs from the lower-bound order " +
                         std::to_string(p.expected_order));
  }

  // No path structure in G. Every path lies inside one component, so
  // sum(floor(|C| / n)) bounds the number of disjoint P_n.
  int capacity = 0;
  for (const auto& comp : connected_components(g)) capacity += comp.size() / p.n;
  if (capacity >= p.t) {
    if (p.t == 1) {
      auto path = find_path_at_least(g, p.n);
      if (path.found()) return Verdict::fail("graph contains P_" + std::to_string(p.n));
      if (path.status == Search::unknown) return Verdict::fail("could not rule out P_" + std::to_string(p.n));
    } else {
      auto paths = find_disjoint_paths(g, p.t, p.n);
      if (paths.found()) return Verdict::fail("graph contains " + std::to_string(p.t) + "P_" + std::to_string(p.n));
      if (paths.status == Search::unknown) return Verdict::fail("could not rule out the disjoint paths");
    }
  } else if (p.t == 1 && g.order() <= 30) {
    if (find_path_at_least(g, p.n).status != Search::absent) {
      return Verdict::fail("path search disagrees with the component bound");
    }
  }

  // No J_{s,m} in the complement.
  const Jahangir jspec{p.s, p.m};
  const Graph pattern = build(jspec);
  const Graph comp = complement(g);
  auto parts = clique_parts(g);
  if (parts) {
    if (fits_complete_multipartite(pattern, *parts)) {
      return Verdict::fail("J_{s,m} fits the complete multipartite complement");
    }
    if (parts->size() == 2 && !std::holds_alternative<Thm2EvenMCase>(tc) && !std::holds_alternative<Thm2OddMCase>(tc)) {
      // J contains C_sm, so a cycle-free bipartite complement settles it a second way.
      if (multipartite_contains_even_cycle(*parts, p.s * p.m)) {
        return Verdict::fail("complement contains C_sm; the bipartite cycle criterion cannot exclude J_{s,m}");
      }
    }
    auto cross = find_subgraph(comp, jspec, kCrossCheckBudget);
    if (cross.found()) return Verdict::fail("generic search found J_{s,m} despite the multipartite criterion");
  } else {
    auto direct = find_subgraph(comp, jspec, kDefaultBudget);
    if (direct.found()) return Verdict::fail("complement contains J_{s,m}");
    if (direct.status == Search::unknown) return Verdict::fail("could not rule out J_{s,m} in the complement");
  }
  return Verdict::pass();
}

}  // namespace jramsey
