#include "jramsey/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>

#include "jramsey/embedding.hpp"
#include "jramsey/errors.hpp"

namespace jramsey {

namespace {

template <class... Fs>
struct overloaded : Fs... {
  using Fs::operator()...;
};

void require(bool ok, const std::string& message) {
  if (!ok) throw InvalidArgument(message);
}

Graph clique_union(const std::vector<int>& sizes) {
  Graph g(0);
  for (int size : sizes) g = disjoint_union(g, Graph::complete(size));
  return g;
}

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
  return std::move(b).build();
}

int parse_int(std::string_view text, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() || value < 0 || value > 100000) {
    throw InvalidArgument("pattern '" + std::string(whole) + "': bad integer '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

void validate(const PatternSpec& spec) {
  std::visit(overloaded{
                 [](const Path& p) { require(p.n >= 1, "path needs n >= 1"); },
                 [](const Cycle& c) { require(c.n >= 3, "cycle needs n >= 3"); },
                 [](const Wheel& w) { require(w.k >= 3, "wheel needs rim k >= 3"); },
                 [](const Jahangir& j) {
                   require(j.s >= 2, "Jahangir graph needs s >= 2");
                   require(j.m >= 2, "Jahangir graph needs m >= 2");
                 },
                 [](const DisjointPaths& d) {
                   require(d.t >= 1, "disjoint paths need t >= 1");
                   require(d.n >= 1, "disjoint paths need n >= 1");
                 },
                 [](const Complete& k) { require(k.n >= 1, "complete graph needs n >= 1"); },
                 [](const CliqueUnion& u) {
                   require(!u.sizes.empty(), "clique union needs at least one block");
                   for (int size : u.sizes) require(size >= 1, "clique union blocks need size >= 1");
                 },
             },
             spec);
}

int pattern_order(const PatternSpec& spec) {
  return std::visit(overloaded{
                        [](const Path& p) { return p.n; },
                        [](const Cycle& c) { return c.n; },
                        [](const Wheel& w) { return w.k + 1; },
                        [](const Jahangir& j) { return j.s * j.m + 1; },
                        [](const DisjointPaths& d) { return d.t * d.n; },
                        [](const Complete& k) { return k.n; },
                        [](const CliqueUnion& u) { return std::accumulate(u.sizes.begin(), u.sizes.end(), 0); },
                    },
                    spec);
}

Graph build(const PatternSpec& spec) {
  validate(spec);
  return std::visit(overloaded{
                        [](const Path& p) { return path_graph(p.n); },
                        [](const Cycle& c) { return add_edge(path_graph(c.n), c.n - 1, 0); },
                        [](const Wheel& w) {
                          GraphBuilder b(w.k + 1);
                          for (int i = 0; i < w.k; ++i) {
                            b.add_edge(i, (i + 1) % w.k);
                            b.add_edge(i, w.k);
                          }
                          return std::move(b).build();
                        },
                        [](const Jahangir& j) {
                          const int rim = j.s * j.m;
                          GraphBuilder b(rim + 1);
                          for (int i = 0; i < rim; ++i) b.add_edge(i, (i + 1) % rim);
                          for (int i = 0; i < j.m; ++i) b.add_edge(i * j.s, rim);
                          return std::move(b).build();
                        },
                        [](const DisjointPaths& d) {
                          Graph g(0);
                          for (int i = 0; i < d.t; ++i) g = disjoint_union(g, path_graph(d.n));
                          return g;
                        },
                        [](const Complete& k) { return Graph::complete(k.n); },
                        [](const CliqueUnion& u) { return clique_union(u.sizes); },
                    },
                    spec);
}

PatternSpec parse_pattern(std::string_view text) {
  std::string lower(text);
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  std::string_view s = lower;
  require(!s.empty(), "empty pattern");
  for (char c : s) {
    require(!std::isspace(static_cast<unsigned char>(c)), "pattern '" + std::string(text) + "' contains whitespace");
  }

  PatternSpec spec;
  if (s.find('+') != std::string_view::npos) {
    CliqueUnion u;
    std::size_t start = 0;
    while (true) {
      auto plus = s.find('+', start);
      auto part = s.substr(start, plus == std::string_view::npos ? std::string_view::npos : plus - start);
      require(part.size() >= 2 && part[0] == 'k', "pattern '" + std::string(text) + "': clique union blocks must be K<n>");
      u.sizes.push_back(parse_int(part.substr(1), text));
      if (plus == std::string_view::npos) break;
      start = plus + 1;
    }
    spec = std::move(u);
  } else if (std::isdigit(static_cast<unsigned char>(s[0]))) {
    auto p = s.find('p');
    require(p != std::string_view::npos, "pattern '" + std::string(text) + "': expected <t>P<n>");
    spec = DisjointPaths{parse_int(s.substr(0, p), text), parse_int(s.substr(p + 1), text)};
  } else {
    auto rest = s.substr(1);
    switch (s[0]) {
      case 'p': spec = Path{parse_int(rest, text)}; break;
      case 'c': spec = Cycle{parse_int(rest, text)}; break;
      case 'w': spec = Wheel{parse_int(rest, text)}; break;
      case 'k': spec = Complete{parse_int(rest, text)}; break;
      case 'j': {
        auto comma = rest.find(',');
        require(comma != std::string_view::npos, "pattern '" + std::string(text) + "': expected J<s>,<m>");
        spec = Jahangir{parse_int(rest.substr(0, comma), text), parse_int(rest.substr(comma + 1), text)};
        break;
      }
      default: throw InvalidArgument("unknown pattern family in '" + std::string(text) + "'");
    }
  }
  try {
    validate(spec);
  } catch (const InvalidArgument& e) {
    throw InvalidArgument("pattern '" + std::string(text) + "': " + e.what());
  }
  return spec;
}

std::string to_string(const PatternSpec& spec) {
  return std::visit(overloaded{
                        [](const Path& p) { return "P" + std::to_string(p.n); },
                        [](const Cycle& c) { return "C" + std::to_string(c.n); },
                        [](const Wheel& w) { return "W" + std::to_string(w.k); },
                        [](const Jahangir& j) { return "J" + std::to_string(j.s) + "," + std::to_string(j.m); },
                        [](const DisjointPaths& d) { return std::to_string(d.t) + "P" + std::to_string(d.n); },
                        [](const Complete& k) { return "K" + std::to_string(k.n); },
                        [](const CliqueUnion& u) {
                          std::string out;
                          for (int size : u.sizes) out += (out.empty() ? "K" : "+K") + std::to_string(size);
                          return out;
                        },
                    },
                    spec);
}

std::string to_string(const TheoremCase& tc) {
  auto nsm = [](int n, int s, int m) {
    return "n=" + std::to_string(n) + ",s=" + std::to_string(s) + ",m=" + std::to_string(m);
  };
  return std::visit(overloaded{
                        [&](const Thm1Case& c) { return "Thm1(" + nsm(c.n, c.s, c.m) + ")"; },
                        [&](const Thm2EvenMCase& c) { return "Thm2EvenM(" + nsm(c.n, c.s, c.m) + ")"; },
                        [&](const Thm2OddMCase& c) { return "Thm2OddM(" + nsm(c.n, c.s, c.m) + ")"; },
                        [&](const Thm3Case& c) { return "Thm3(t=" + std::to_string(c.t) + "," + nsm(c.n, c.s, c.m) + ")"; },
                    },
                    tc);
}

void validate(const TheoremCase& tc) {
  std::visit(overloaded{
                 [](const Thm1Case& c) {
                   require(c.s >= 2 && c.s % 2 == 0, "Thm1 needs even s >= 2");
                   require(c.m >= 3, "Thm1 needs m >= 3");
                   require(c.n >= 1, "Thm1 needs n >= 1");
                 },
                 [](const Thm2EvenMCase& c) {
                   require(c.s >= 3 && c.s % 2 == 1, "Thm2 needs odd s >= 3");
                   require(c.m >= 2 && c.m % 2 == 0, "Thm2EvenM needs even m >= 2");
                   require(c.n >= 1, "Thm2EvenM needs n >= 1");
                 },
                 [](const Thm2OddMCase& c) {
                   require(c.s >= 3 && c.s % 2 == 1, "Thm2 needs odd s >= 3");
                   require(c.m >= 3 && c.m % 2 == 1, "Thm2OddM needs odd m >= 3");
                   require(c.n >= 1, "Thm2OddM needs n >= 1");
                 },
                 [](const Thm3Case& c) {
                   require(c.s >= 2 && c.s % 2 == 0, "Thm3 needs even s >= 2");
                   require(c.m >= 3, "Thm3 needs m >= 3");
                   require(c.t >= 1, "Thm3 needs t >= 1");
                   require(c.n >= 1, "Thm3 needs n >= 1");
                 },
             },
             tc);
}

Graph extremal_graph(const TheoremCase& tc) {
  validate(tc);
  return std::visit(overloaded{
                        [](const Thm1Case& c) { return clique_union({c.n - 1, c.s * c.m / 2 - 1}); },
                        [](const Thm2EvenMCase& c) { return clique_union({c.n - 1, c.n - 1}); },
                        [](const Thm2OddMCase& c) { return clique_union({1, c.n - 1, c.n - 1}); },
                        [](const Thm3Case& c) { return clique_union({c.s * c.m / 2 - 1, c.t * c.n - 1}); },
                    },
                    tc);
}

bool multipartite_contains_even_cycle(const std::vector<int>& part_sizes, int cycle_len) {
  require(!part_sizes.empty(), "multipartite cycle check needs at least one part");
  require(cycle_len >= 3, "cycle length must be >= 3");
  for (int p : part_sizes) require(p >= 0, "part sizes must be non-negative");

  std::vector<int> parts;
  for (int p : part_sizes) {
    if (p > 0) parts.push_back(p);
  }
  if (parts.size() <= 1) return false;
  if (parts.size() == 2) {
    return cycle_len % 2 == 0 && std::min(parts[0], parts[1]) >= cycle_len / 2;
  }
  const int total = std::accumulate(parts.begin(), parts.end(), 0);
  if (total > kMultipartiteSearchCap) {
    throw Unsupported("multipartite cycle check: " + std::to_string(parts.size()) + " parts of total order " +
                      std::to_string(total) + " exceed the explicit-search cap");
  }
  Graph host = complement(clique_union(parts));
  auto result = find_subgraph(host, Cycle{cycle_len}, 50'000'000);
  if (result.status == Search::unknown) throw BudgetExhausted("multipartite cycle check: search budget exhausted");
  return result.status == Search::found;
}

namespace {

struct ColouringSearch {
  const Graph& pattern;
  std::vector<int> order;
  std::vector<int> capacity;
  std::vector<int> colour;

  bool run(std::size_t depth) {
    if (depth == order.size()) return true;
    const int v = order[depth];
    // Parts with equal remaining capacity that are still unused are interchangeable.
    std::vector<int> tried_untouched;
    for (std::size_t c = 0; c < capacity.size(); ++c) {
      if (capacity[c] == 0) continue;
      bool clash = false;
      for (int w = pattern.neighbors(v).first(); w >= 0; w = pattern.neighbors(v).next(w)) {
        if (colour[static_cast<std::size_t>(w)] == static_cast<int>(c)) {
          clash = true;
          break;
        }
      }
      if (clash) continue;
      bool untouched = std::none_of(colour.begin(), colour.end(), [&](int x) { return x == static_cast<int>(c); });
      if (untouched) {
        if (std::find(tried_untouched.begin(), tried_untouched.end(), capacity[c]) != tried_untouched.end()) continue;
        tried_untouched.push_back(capacity[c]);
      }
      colour[static_cast<std::size_t>(v)] = static_cast<int>(c);
      --capacity[c];
      if (run(depth + 1)) return true;
      ++capacity[c];
      colour[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }
};

}  // namespace

bool fits_complete_multipartite(const Graph& pattern, const std::vector<int>& part_sizes) {
  const int total = std::accumulate(part_sizes.begin(), part_sizes.end(), 0);
  if (pattern.order() > total) return false;
  ColouringSearch search{pattern, {}, part_sizes, std::vector<int>(static_cast<std::size_t>(pattern.order()), -1)};
  // Breadth-first order so each vertex meets its constraints early.
  VertexSet placed(pattern.order());
  for (int root = 0; root < pattern.order(); ++root) {
    if (placed.contains(root)) continue;
    std::size_t head = search.order.size();
    search.order.push_back(root);
    placed.insert(root);
    while (head < search.order.size()) {
      int v = search.order[head++];
      for (int w = pattern.neighbors(v).first(); w >= 0; w = pattern.neighbors(v).next(w)) {
        if (!placed.contains(w)) {
          placed.insert(w);
          search.order.push_back(w);
        }
      }
    }
  }
  return search.run(0);
}

}  // namespace jramsey
