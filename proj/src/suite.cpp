#include "jramsey/suite.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <regex>
#include <thread>

#include "jramsey/errors.hpp"
#include "jramsey/report.hpp"
#include "jramsey/witness.hpp"

namespace jramsey {

SuiteSpec parse_suite(const std::string& name, std::optional<int> n, std::optional<int> t) {
  static const std::regex re(R"((thm1|thm2|thm3|thm3paths)-s(\d{1,3})m(\d{1,3}))");
  std::smatch match;
  if (!std::regex_match(name, match, re)) {
    throw InvalidArgument("unknown suite '" + name + "' (expected thm1|thm2|thm3|thm3paths followed by -s<S>m<M>)");
  }
  SuiteSpec spec;
  spec.name = name;
  spec.s = std::stoi(match[2]);
  spec.m = std::stoi(match[3]);
  const std::string family = match[1];
  const int s = spec.s, m = spec.m, sm = s * m;
  if (s < 2 || m < 2) throw InvalidArgument("suite " + name + ": needs s >= 2 and m >= 2");
  if (t && family != "thm3" && family != "thm3paths") throw InvalidArgument("suite " + name + ": t only applies to thm3");
  if (t && *t < 1) throw InvalidArgument("suite " + name + ": t must be positive");

  if (family == "thm2") {
    if (s % 2 == 0) throw InvalidArgument("suite " + name + ": thm2 needs odd s");
    spec.kind = SuiteKind::thm2;
    if (m % 2 == 0) {
      spec.n = n.value_or((sm / 2) * (sm - 2));
      spec.order = 2 * spec.n - 1;
    } else {
      if (m < 3) throw InvalidArgument("suite " + name + ": odd m must be at least 3");
      spec.n = n.value_or(((sm - 1) / 2) * (sm - 1));
      spec.order = 2 * spec.n;
    }
  } else {
    if (s % 2 != 0 || m < 3) throw InvalidArgument("suite " + name + ": needs even s and m >= 3");
    spec.kind = family == "thm1" ? SuiteKind::thm1 : family == "thm3" ? SuiteKind::thm3 : SuiteKind::thm3_paths;
    spec.n = n.value_or((2 * sm - 1) * (sm / 2 - 1) + 1);
    spec.t = family == "thm1" ? 1 : t.value_or(2);
    spec.order = spec.t * spec.n + sm / 2 - 1;
  }
  if (spec.n < 2) throw InvalidArgument("suite " + name + ": n must be at least 2");
  spec.component_cap = std::min(kComponentCap, spec.n - 1);
  return spec;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) { return splitmix64(seed ^ splitmix64(index)); }

std::int64_t uniform_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

namespace {

Graph shuffled(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  for (int i = g.order() - 1; i > 0; --i) {
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(uniform_int(rng, 0, i))]);
  }
  return relabel(g, perm);
}

}  // namespace

Graph random_bounded_components(int order, int cap, std::uint64_t seed) {
  if (order < 0) throw InvalidArgument("random graph: negative order");
  if (cap < 3) throw InvalidArgument("random graph: component cap must be at least 3");
  std::mt19937_64 rng(seed);
  GraphBuilder b(order);
  for (int start = 0; start < order;) {
    const int size = std::min<int>(static_cast<int>(uniform_int(rng, 3, cap)), order - start);
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) {
        if (rng() >> 63) b.add_edge(start + i, start + j);
      }
    }
    start += size;
  }
  return shuffled(std::move(b).build(), rng);
}

Graph padded_cliques(int t, int n, int order, std::uint64_t seed) {
  if (t < 0 || n < 0 || t * n > order) throw InvalidArgument("padded cliques: t*n exceeds the order");
  std::mt19937_64 rng(seed);
  GraphBuilder b(order);
  for (int c = 0; c < t; ++c) {
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) b.add_edge(c * n + i, c * n + j);
    }
  }
  return shuffled(std::move(b).build(), rng);
}

Graph suite_case_graph(const SuiteSpec& spec, std::uint64_t seed, int index) {
  const std::uint64_t cs = case_seed(seed, static_cast<std::uint64_t>(index));
  if (spec.kind == SuiteKind::thm3_paths) return padded_cliques(spec.t, spec.n, spec.order, cs);
  return random_bounded_components(spec.order, spec.component_cap, cs);
}

namespace {

CaseResult run_case(const SuiteSpec& spec, std::uint64_t seed, int index, std::uint64_t budget) {
  CaseResult r;
  r.index = index;
  r.seed = case_seed(seed, static_cast<std::uint64_t>(index));
  const Graph f = suite_case_graph(spec, seed, index);
  Json line;
  line["index"] = index;
  line["graph6"] = to_graph6(f);
  const ExtractorOptions opts{budget, false};
  try {
    DichotomyWitness w;
    switch (spec.kind) {
      case SuiteKind::thm1: w = extract_theorem1(f, spec.n, spec.s, spec.m, opts); break;
      case SuiteKind::thm2: w = extract_theorem2(f, spec.n, spec.s, spec.m, opts); break;
      case SuiteKind::thm3:
      case SuiteKind::thm3_paths: w = extract_t_paths(f, spec.t, spec.n, spec.s, spec.m, opts); break;
    }
    const bool want_paths = spec.kind == SuiteKind::thm3_paths;
    r.outcome = w.has_paths() ? "paths_in_f" : "jahangir_in_complement";
    const bool verified = static_cast<bool>(verify_witness(f, w, spec.n));
    r.ok = verified && w.has_paths() == want_paths;
    if (!r.ok) r.error = verified ? "unexpected witness kind" : "witness failed verification";
    line["result"] = to_json(w);
  } catch (const MaximalityViolation& e) {
    r.outcome = "maximality_violation";
    r.error = e.what();
    line["result"] = to_json(e.trace());
  } catch (const WheelNotFound& e) {
    r.outcome = e.exhausted() ? "budget_exhausted" : "wheel_not_found";
    r.error = e.what();
  } catch (const BudgetExhausted& e) {
    r.outcome = "budget_exhausted";
    r.error = e.what();
  } catch (const InvalidArgument& e) {
    r.outcome = "precondition";
    r.error = e.what();
  }
  line["ok"] = r.ok;
  line["outcome"] = r.outcome;
  if (!r.error.empty()) line["error"] = r.error;
  r.trace = line.dump();
  return r;
}

}  // namespace

int SuiteReport::passed() const {
  return static_cast<int>(std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.ok; }));
}

SuiteReport run_suite(const SuiteSpec& spec, std::uint64_t seed, int count, int jobs, std::uint64_t budget) {
  if (count < 0) throw InvalidArgument("suite: negative count");
  SuiteReport report{spec, seed, std::vector<CaseResult>(static_cast<std::size_t>(count))};
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) report.cases[static_cast<std::size_t>(i)] = run_case(spec, seed, i, budget);
  };
  const int threads = std::clamp(jobs, 1, std::max(1, count));
  std::vector<std::thread> pool;
  for (int i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return report;
}

std::string summary_json(const SuiteReport& report) {
  Json j;
  j["suite"] = report.spec.name;
  j["params"] = {{"n", report.spec.n}, {"s", report.spec.s}, {"m", report.spec.m}, {"t", report.spec.t},
                 {"order", report.spec.order}};
  j["seed"] = report.seed;
  j["count"] = report.cases.size();
  j["passed"] = report.passed();
  j["failed"] = static_cast<int>(report.cases.size()) - report.passed();
  Json cases = Json::array();
  for (const auto& c : report.cases) {
    Json cj{{"index", c.index}, {"ok", c.ok}, {"outcome", c.outcome}};
    if (!c.error.empty()) cj["error"] = c.error;
    cases.push_back(cj);
  }
  j["cases"] = cases;
  return j.dump(2);
}

}  // namespace jramsey
