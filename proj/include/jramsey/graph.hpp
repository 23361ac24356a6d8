#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace jramsey {

using Edge = std::pair<int, int>;

/// Subset of the vertex indices 0..universe-1 of some graph, stored as a
/// packed bit row.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(int universe);

  static VertexSet full(int universe);
  static VertexSet of(int universe, std::span<const int> members);

  int universe() const { return universe_; }
  bool contains(int v) const {
    return (words_[static_cast<std::size_t>(v) >> 6] >> (v & 63)) & 1u;
  }
  void insert(int v) { words_[static_cast<std::size_t>(v) >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[static_cast<std::size_t>(v) >> 6] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const;
  bool empty() const;
  // Least member, or -1.
  int first() const;
  // Least member greater than v, or -1.
  int next(int v) const;
  std::vector<int> members() const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  bool intersects(const VertexSet& other) const;
  bool operator==(const VertexSet&) const = default;

  std::span<const std::uint64_t> words() const { return words_; }

 private:
  int universe_ = 0;
  std::vector<std::uint64_t> words_;
};

/// Finite simple undirected graph on vertices 0..order-1 with one packed
/// adjacency row per vertex. Values are immutable once built; use
/// GraphBuilder or the free functions below to derive new graphs.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);

  static Graph from_edges(int order, std::span<const Edge> edges);
  static Graph complete(int order);

  int order() const { return static_cast<int>(rows_.size()); }
  std::size_t edge_count() const;
  bool adjacent(int u, int v) const { return rows_[static_cast<std::size_t>(u)].contains(v); }
  const VertexSet& neighbors(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  int degree(int v) const { return rows_[static_cast<std::size_t>(v)].size(); }
  VertexSet vertices() const { return VertexSet::full(order()); }
  // Edges (u, v) with u < v in row-major order.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  friend class GraphBuilder;
  std::vector<VertexSet> rows_;
};

class GraphBuilder {
 public:
  explicit GraphBuilder(int order) : graph_(order) {}
  explicit GraphBuilder(Graph start) : graph_(std::move(start)) {}

  GraphBuilder& add_edge(int u, int v);
  GraphBuilder& remove_edge(int u, int v);
  int order() const { return graph_.order(); }
  Graph build() && { return std::move(graph_); }
  const Graph& peek() const { return graph_; }

 private:
  Graph graph_;
};

struct InducedSubgraph {
  Graph graph;
  // to_host[i] is the host vertex behind local vertex i; strictly increasing.
  std::vector<int> to_host;
};

Graph complement(const Graph& g);
Graph disjoint_union(const Graph& g, const Graph& h);
InducedSubgraph induced(const Graph& g, const VertexSet& s);
Graph add_edge(const Graph& g, int u, int v);
// Vertex v of g becomes vertex perm[v] of the result.
Graph relabel(const Graph& g, std::span<const int> perm);

std::vector<VertexSet> connected_components(const Graph& g);

std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace jramsey
