#include "graphent/generators.hpp"

#include <random>
#include <string>

#include "graphent/error.hpp"

namespace graphent {
namespace {

// 53 random mantissa bits, independent of the standard library's
// distribution implementations.
double unit_interval(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

LabeledGraphs::LabeledGraphs(std::size_t n) : n_(n) {
  if (n < 1 || n > 7) {
    throw Error(ErrorCode::OutOfRange,
                "labeled graph enumeration supports 1 <= n <= 7, got " + std::to_string(n));
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs_.push_back({i, j});
  }
}

Graph LabeledGraphs::at(std::uint64_t index) const {
  if (index >= count()) throw Error(ErrorCode::OutOfRange, "graph index out of range");
  std::vector<Edge> edges;
  for (std::size_t k = 0; k < pairs_.size(); ++k) {
    if ((index >> k) & 1U) edges.push_back(pairs_[k]);
  }
  return Graph(n_, edges);
}

LabeledTrees::LabeledTrees(std::size_t n) : n_(n), count_(1) {
  if (n < 2 || n > 9) {
    throw Error(ErrorCode::OutOfRange,
                "labeled tree enumeration supports 2 <= n <= 9, got " + std::to_string(n));
  }
  for (std::size_t k = 0; k + 2 < n; ++k) count_ *= n;
}

Graph LabeledTrees::at(std::uint64_t index) const {
  if (index >= count_) throw Error(ErrorCode::OutOfRange, "tree index out of range");
  std::vector<std::size_t> seq(n_ - 2);
  // most significant digit first, so index order is lexicographic
  for (std::size_t k = seq.size(); k-- > 0;) {
    seq[k] = static_cast<std::size_t>(index % n_);
    index /= n_;
  }
  return tree_from_pruefer(n_, seq);
}

Graph tree_from_pruefer(std::size_t n, std::span<const std::size_t> sequence) {
  if (n < 2 || sequence.size() + 2 != n) {
    throw Error(ErrorCode::InvalidArgument, "Prüfer sequence must have length n-2");
  }
  std::vector<std::size_t> degree(n, 1);
  for (std::size_t x : sequence) {
    if (x >= n) throw Error(ErrorCode::OutOfRange, "Prüfer entry out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t x : sequence) {
    std::size_t leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.push_back({leaf, x});
    --degree[leaf];
    --degree[x];
  }
  std::size_t a = n, b = n;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1) (a == n ? a : b) = v;
  }
  edges.push_back({a, b});
  return Graph(n, edges);
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "complete") return Family::Complete;
  if (name == "path") return Family::Path;
  if (name == "star") return Family::Star;
  if (name == "cycle") return Family::Cycle;
  if (name == "matching") return Family::Matching;
  return std::nullopt;
}

Graph make_family(Family kind, std::size_t n) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "family order must be >= 1");
  std::vector<Edge> edges;
  switch (kind) {
    case Family::Complete:
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
      }
      break;
    case Family::Path:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
      break;
    case Family::Star:
      for (std::size_t i = 1; i < n; ++i) edges.push_back({0, i});
      break;
    case Family::Cycle:
      if (n < 3) throw Error(ErrorCode::InvalidArgument, "cycle needs n >= 3");
      for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
      break;
    case Family::Matching:
      if (n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "matching needs even n");
      for (std::size_t i = 0; i < n; i += 2) edges.push_back({i, i + 1});
      break;
  }
  return Graph(n, edges);
}

Graph random_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "G(n,p) needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (unit_interval(rng) < p) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

OrientedGraph random_orientation(const Graph& g, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<bool> forward;
  forward.reserve(g.size());
  for (std::size_t k = 0; k < g.size(); ++k) forward.push_back((rng() >> 63) != 0);
  return OrientedGraph(g, std::move(forward));
}

}  // namespace graphent
