#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

/// Random-access list of graphs that workers can split by index range.
///
/// Spellings: all:<n> (every labeled graph of order 1..n), trees:<n>,
/// gnp:<n>,<p>,<count> and gnp:<nmin>-<nmax>,<p>,<count>. Random members
/// are seeded from (seed, index) so any partition reproduces them.
class Corpus {
 public:
  static Corpus parse(std::string_view spec, std::uint64_t seed = 0);
  static Corpus all_graphs(std::size_t max_order);
  static Corpus trees(std::size_t order);
  static Corpus gnp(std::size_t min_order, std::size_t max_order, double p, std::uint64_t count,
                    std::uint64_t seed);
  static Corpus explicit_graphs(std::vector<Graph> graphs, std::string descriptor);

  const std::string& descriptor() const noexcept { return descriptor_; }
  std::uint64_t size() const noexcept { return size_; }
  Graph at(std::uint64_t index) const;

 private:
  enum class Source { AllGraphs, Trees, Gnp, Explicit };

  Source source_ = Source::Explicit;
  std::string descriptor_;
  std::uint64_t size_ = 0;
  std::size_t min_order_ = 1;
  std::size_t max_order_ = 1;
  double p_ = 0.0;
  std::uint64_t seed_ = 0;
  std::vector<std::uint64_t> offsets_;  // AllGraphs: first index of each order
  std::vector<Graph> graphs_;
};

/// SplitMix64 finalizer; used to derive independent per-item seeds.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept;

/// FNV-1a of a byte string.
std::uint64_t fnv1a(std::string_view bytes) noexcept;

}  // namespace graphent
