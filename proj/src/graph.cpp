#include "jramsey/graph.hpp"

#include <bit>
#include <string>

#include "jramsey/errors.hpp"

namespace jramsey {

namespace {

std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }

void check_vertex(int order, int v, const char* what) {
  if (v < 0 || v >= order) {
    throw InvalidArgument(std::string(what) + ": vertex " + std::to_string(v) +
                          " out of range for order " + std::to_string(order));
  }
}

}  // namespace

VertexSet::VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {
  if (universe < 0) throw InvalidArgument("VertexSet: negative universe");
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (int v = 0; v < universe; ++v) s.insert(v);
  return s;
}

VertexSet VertexSet::of(int universe, std::span<const int> members) {
  VertexSet s(universe);
  for (int v : members) {
    check_vertex(universe, v, "VertexSet");
    s.insert(v);
  }
  return s;
}

int VertexSet::size() const {
  int total = 0;
  for (auto w : words_) total += std::popcount(w);
  return total;
}

bool VertexSet::empty() const {
  for (auto w : words_) {
    if (w != 0) return false;
  }
  return true;
}

int VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<int>(i * 64) + std::countr_zero(words_[i]);
  }
  return -1;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= universe_) return -1;
  std::size_t i = static_cast<std::size_t>(start) >> 6;
  std::uint64_t w = words_[i] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w != 0) return static_cast<int>(i * 64) + std::countr_zero(w);
    if (++i == words_.size()) return -1;
    w = words_[i];
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int v = first(); v >= 0; v = next(v)) out.push_back(v);
  return out;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool VertexSet::intersects(const VertexSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

Graph::Graph(int order) {
  if (order < 0) throw InvalidArgument("Graph: negative order");
  rows_.assign(static_cast<std::size_t>(order), VertexSet(order));
}

Graph Graph::from_edges(int order, std::span<const Edge> edges) {
  GraphBuilder b(order);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return std::move(b).build();
}

Graph Graph::complete(int order) {
  GraphBuilder b(order);
  for (int u = 0; u < order; ++u) {
    for (int v = u + 1; v < order; ++v) b.add_edge(u, v);
  }
  return std::move(b).build();
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& row : rows_) twice += static_cast<std::size_t>(row.size());
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < order(); ++u) {
    for (int v = neighbors(u).next(u); v >= 0; v = neighbors(u).next(v)) out.emplace_back(u, v);
  }
  return out;
}

GraphBuilder& GraphBuilder::add_edge(int u, int v) {
  check_vertex(order(), u, "add_edge");
  check_vertex(order(), v, "add_edge");
  if (u == v) throw InvalidArgument("add_edge: loop at vertex " + std::to_string(u));
  graph_.rows_[static_cast<std::size_t>(u)].insert(v);
  graph_.rows_[static_cast<std::size_t>(v)].insert(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(int u, int v) {
  check_vertex(order(), u, "remove_edge");
  check_vertex(order(), v, "remove_edge");
  graph_.rows_[static_cast<std::size_t>(u)].erase(v);
  graph_.rows_[static_cast<std::size_t>(v)].erase(u);
  return *this;
}

Graph complement(const Graph& g) {
  GraphBuilder b(g.order());
  for (int u = 0; u < g.order(); ++u) {
    for (int v = u + 1; v < g.order(); ++v) {
      if (!g.adjacent(u, v)) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  GraphBuilder b(g.order() + h.order());
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + g.order(), v + g.order());
  return std::move(b).build();
}

InducedSubgraph induced(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.to_host = s.members();
  for (int v : out.to_host) check_vertex(g.order(), v, "induced");
  std::vector<int> local(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    local[static_cast<std::size_t>(out.to_host[i])] = static_cast<int>(i);
  }
  GraphBuilder b(static_cast<int>(out.to_host.size()));
  for (std::size_t i = 0; i < out.to_host.size(); ++i) {
    const auto& row = g.neighbors(out.to_host[i]);
    for (int w = row.next(out.to_host[i]); w >= 0; w = row.next(w)) {
      int j = local[static_cast<std::size_t>(w)];
      if (j >= 0) b.add_edge(static_cast<int>(i), j);
    }
  }
  out.graph = std::move(b).build();
  return out;
}

Graph add_edge(const Graph& g, int u, int v) {
  GraphBuilder b(g);
  b.add_edge(u, v);
  return std::move(b).build();
}

Graph relabel(const Graph& g, std::span<const int> perm) {
  if (static_cast<int>(perm.size()) != g.order()) throw InvalidArgument("relabel: permutation size mismatch");
  VertexSet seen(g.order());
  for (int p : perm) {
    check_vertex(g.order(), p, "relabel");
    if (seen.contains(p)) throw InvalidArgument("relabel: not a permutation");
    seen.insert(p);
  }
  GraphBuilder b(g.order());
  for (auto [u, v] : g.edges()) {
    b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  }
  return std::move(b).build();
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet unseen = g.vertices();
  while (!unseen.empty()) {
    VertexSet comp(g.order());
    VertexSet frontier(g.order());
    frontier.insert(unseen.first());
    while (!frontier.empty()) {
      comp |= frontier;
      VertexSet grown(g.order());
      for (int v = frontier.first(); v >= 0; v = frontier.next(v)) grown |= g.neighbors(v);
      frontier = grown - comp;
    }
    unseen -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

// graph6: order header, then the upper triangle in column-major order
// x(0,1), x(0,2), x(1,2), x(0,3), ... packed big-endian six bits per byte.

std::string to_graph6(const Graph& g) {
  std::string out;
  const auto n = static_cast<std::uint64_t>(g.order());
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  } else {
    out += "~~";
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(63 + ((n >> shift) & 63)));
  }
  int acc = 0;
  int nbits = 0;
  for (int v = 1; v < g.order(); ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.adjacent(u, v) ? 1 : 0);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = 0;
        nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

Graph from_graph6(std::string_view text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
  if (text.empty()) throw InvalidArgument("graph6: empty input");
  for (char c : text) {
    if (c < 63 || c > 126) throw InvalidArgument("graph6: character outside the printable range 63..126");
  }
  auto value = [](char c) { return static_cast<std::uint64_t>(c - 63); };

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (text[0] != '~') {
    n = value(text[0]);
    pos = 1;
  } else if (text.size() >= 2 && text[1] != '~') {
    if (text.size() < 4) throw InvalidArgument("graph6: truncated length header");
    n = (value(text[1]) << 12) | (value(text[2]) << 6) | value(text[3]);
    if (n <= 62) throw InvalidArgument("graph6: non-canonical length header");
    pos = 4;
  } else {
    if (text.size() < 8) throw InvalidArgument("graph6: truncated length header");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | value(text[i]);
    if (n <= 258047) throw InvalidArgument("graph6: non-canonical length header");
    pos = 8;
  }
  if (n > 100000) throw InvalidArgument("graph6: order " + std::to_string(n) + " too large");

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::uint64_t chars = (bits + 5) / 6;
  if (text.size() - pos != chars) {
    throw InvalidArgument("graph6: expected " + std::to_string(chars) + " adjacency characters, got " +
                          std::to_string(text.size() - pos));
  }
  GraphBuilder b(static_cast<int>(n));
  std::uint64_t k = 0;
  for (int v = 1; v < static_cast<int>(n); ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const auto word = value(text[pos + k / 6]);
      if ((word >> (5 - k % 6)) & 1u) b.add_edge(u, v);
    }
  }
  if (k % 6 != 0) {
    const auto last = value(text.back());
    const auto pad_mask = (std::uint64_t{1} << (6 - k % 6)) - 1;
    if (last & pad_mask) throw InvalidArgument("graph6: nonzero padding bits");
  }
  return std::move(b).build();
}

}  // namespace jramsey
