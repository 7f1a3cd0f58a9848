#include "graphent/graph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "graphent/error.hpp"

namespace graphent {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : n_(n) {
  if (n == 0) throw Error(ErrorCode::OutOfRange, "graph must have at least one vertex");
  edges_.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::OutOfRange, "edge endpoint " + std::to_string(std::max(e.u, e.v)) +
                                             " >= n = " + std::to_string(n));
    }
    if (e.u == e.v) throw Error(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(e.u));
    edges_.push_back({std::min(e.u, e.v), std::max(e.u, e.v)});
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

  adjacency_.resize(n);
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  degrees_.reserve(n);
  for (auto& nb : adjacency_) {
    std::sort(nb.begin(), nb.end());
    degrees_.push_back(nb.size());
  }
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= n_ || v >= n_) return false;
  const auto& nb = adjacency_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::size_t Graph::max_degree() const noexcept {
  return *std::max_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::min_degree() const noexcept {
  return *std::min_element(degrees_.begin(), degrees_.end());
}

std::size_t Graph::non_isolated_count() const noexcept {
  return static_cast<std::size_t>(
      std::count_if(degrees_.begin(), degrees_.end(), [](std::size_t d) { return d > 0; }));
}

bool Graph::is_connected() const {
  std::vector<bool> seen(n_, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n_;
}

OrientedGraph::OrientedGraph(Graph underlying, std::vector<bool> forward)
    : graph_(std::move(underlying)), forward_(std::move(forward)) {
  if (forward_.size() != graph_.size()) {
    throw Error(ErrorCode::InvalidArgument, "orientation must assign one direction per edge");
  }
}

OrientedGraph OrientedGraph::canonical(const Graph& g) {
  return OrientedGraph(g, std::vector<bool>(g.size(), true));
}

int OrientedGraph::direction(Vertex u, Vertex v) const {
  const Edge key{std::min(u, v), std::max(u, v)};
  const auto& es = graph_.edges();
  auto it = std::lower_bound(es.begin(), es.end(), key);
  if (it == es.end() || *it != key) return 0;
  const bool fwd = forward_[static_cast<std::size_t>(it - es.begin())];
  // fwd: key.u -> key.v
  return (u == key.u) == fwd ? 1 : -1;
}

DistanceTable distances(const Graph& g) {
  const std::size_t n = g.order();
  constexpr auto kUnreached = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> d(n * n, kUnreached);
  std::queue<Vertex> q;
  for (Vertex s = 0; s < n; ++s) {
    std::uint32_t* row = d.data() + s * n;
    row[s] = 0;
    q.push(s);
    while (!q.empty()) {
      Vertex v = q.front();
      q.pop();
      for (Vertex w : g.neighbors(v)) {
        if (row[w] == kUnreached) {
          row[w] = row[v] + 1;
          q.push(w);
        }
      }
    }
    for (Vertex t = 0; t < n; ++t) {
      if (row[t] == kUnreached) {
        throw Error(ErrorCode::DisconnectedGraph,
                    "no path between " + std::to_string(s) + " and " + std::to_string(t));
      }
    }
  }
  return DistanceTable(n, std::move(d));
}

bool is_regular(const Graph& g) { return g.max_degree() == g.min_degree(); }

bool is_complete(const Graph& g) { return g.size() == g.order() * (g.order() - 1) / 2; }

bool is_tree(const Graph& g) { return g.size() + 1 == g.order() && g.is_connected(); }

bool is_star(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2 || !is_tree(g)) return false;
  return g.max_degree() == n - 1;
}

bool is_path(const Graph& g) {
  if (g.order() == 1) return g.size() == 0;
  return is_tree(g) && g.max_degree() <= 2;
}

bool is_perfect_matching(const Graph& g) {
  const auto& d = g.degrees();
  return std::all_of(d.begin(), d.end(), [](std::size_t x) { return x == 1; });
}

bool is_matching_plus_p3(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3 || n % 2 == 0 || g.size() != (n - 3) / 2 + 2) return false;
  std::size_t centers = 0;
  for (Vertex v = 0; v < n; ++v) {
    const std::size_t d = g.degree(v);
    if (d == 2) {
      ++centers;
      // both neighbors must be leaves
      for (Vertex w : g.neighbors(v)) {
        if (g.degree(w) != 1) return false;
      }
    } else if (d != 1) {
      return false;
    }
  }
  return centers == 1;
}

}  // namespace graphent
