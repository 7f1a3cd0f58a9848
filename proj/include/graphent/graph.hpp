#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace graphent {

using Vertex = std::size_t;

/// Undirected edge stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable after construction. Edges are deduplicated and kept in
/// lexicographic (min endpoint, max endpoint) order, which is also the
/// column order of every incidence-type matrix.
class Graph {
 public:
  /// Throws OutOfRange when n == 0 or an endpoint is >= n, LoopEdge on (u,u).
  /// Duplicate pairs (in either direction) are collapsed.
  Graph(std::size_t n, std::span<const Edge> edges);
  explicit Graph(std::size_t n) : Graph(n, {}) {}

  std::size_t order() const noexcept { return n_; }
  std::size_t size() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_[v]; }
  bool has_edge(Vertex u, Vertex v) const;

  std::size_t max_degree() const noexcept;
  std::size_t min_degree() const noexcept;
  /// r = number of vertices with degree > 0.
  std::size_t non_isolated_count() const noexcept;
  bool is_connected() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::size_t> degrees_;
};

/// A graph together with one direction per edge.
///
/// forward()[k] == true means edges()[k] = {u,v} is the arc u -> v,
/// otherwise v -> u.
class OrientedGraph {
 public:
  OrientedGraph(Graph underlying, std::vector<bool> forward);

  /// Every edge directed from the smaller to the larger endpoint.
  static OrientedGraph canonical(const Graph& g);

  const Graph& underlying() const noexcept { return graph_; }
  const std::vector<bool>& forward() const noexcept { return forward_; }

  /// +1 for the arc u -> v, -1 for v -> u, 0 when u and v are not adjacent.
  int direction(Vertex u, Vertex v) const;

  friend bool operator==(const OrientedGraph&, const OrientedGraph&) = default;

 private:
  Graph graph_;
  std::vector<bool> forward_;
};

/// All-pairs shortest path lengths of a connected graph.
class DistanceTable {
 public:
  DistanceTable(std::size_t n, std::vector<std::uint32_t> entries)
      : n_(n), entries_(std::move(entries)) {}

  std::size_t order() const noexcept { return n_; }
  std::uint32_t operator()(Vertex i, Vertex j) const { return entries_[i * n_ + j]; }

 private:
  std::size_t n_;
  std::vector<std::uint32_t> entries_;
};

/// BFS from every vertex. Throws DisconnectedGraph.
DistanceTable distances(const Graph& g);

// Structural predicates used by the equality characterizations.
bool is_regular(const Graph& g);
bool is_complete(const Graph& g);
bool is_star(const Graph& g);
bool is_path(const Graph& g);
bool is_tree(const Graph& g);
/// Every vertex has degree exactly one.
bool is_perfect_matching(const Graph& g);
/// (n-3)/2 disjoint K2 plus one P3, n odd.
bool is_matching_plus_p3(const Graph& g);

}  // namespace graphent
