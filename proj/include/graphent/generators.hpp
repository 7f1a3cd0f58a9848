#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "graphent/graph.hpp"

namespace graphent {

/// All 2^(n(n-1)/2) labeled graphs on n vertices, 1 <= n <= 7.
///
/// Graph k has upper-triangle bit i set for the i-th pair of the
/// lexicographic pair list (0,1), (0,2), ..., (n-2,n-1). Random access
/// lets workers split the index range.
class LabeledGraphs {
 public:
  explicit LabeledGraphs(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return std::uint64_t{1} << pairs_.size(); }
  Graph at(std::uint64_t index) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t k = 0; k < count(); ++k) f(at(k));
  }

 private:
  std::size_t n_;
  std::vector<Edge> pairs_;
};

/// All n^(n-2) labeled trees on n vertices, 2 <= n <= 9, indexed by their
/// Prüfer sequence read as a base-n number.
class LabeledTrees {
 public:
  explicit LabeledTrees(std::size_t n);

  std::size_t order() const noexcept { return n_; }
  std::uint64_t count() const noexcept { return count_; }
  Graph at(std::uint64_t index) const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::uint64_t k = 0; k < count_; ++k) f(at(k));
  }

 private:
  std::size_t n_;
  std::uint64_t count_;
};

/// Decodes a Prüfer sequence of length n-2 with entries < n.
Graph tree_from_pruefer(std::size_t n, std::span<const std::size_t> sequence);

enum class Family { Complete, Path, Star, Cycle, Matching };

std::optional<Family> parse_family(std::string_view name);

/// Deterministic named families. Vertex 0 is the star's center; the path
/// and cycle visit 0,1,...,n-1; the matching pairs (0,1), (2,3), ...
Graph make_family(Family kind, std::size_t n);

/// Erdős–Rényi G(n,p), reproducible from seed on every platform.
Graph random_gnp(std::size_t n, double p, std::uint64_t seed);

/// Uniformly random direction per edge, reproducible from seed.
OrientedGraph random_orientation(const Graph& g, std::uint64_t seed);

}  // namespace graphent
