#include "graphent/corpus.hpp"

#include <charconv>
#include <cmath>

#include "graphent/error.hpp"
#include "graphent/generators.hpp"

namespace graphent {
namespace {

template <typename T>
T parse_number(std::string_view s, std::string_view what) {
  T value{};
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size()) {
    throw Error(ErrorCode::InvalidArgument, "bad " + std::string(what) + " '" + std::string(s) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) noexcept {
  std::uint64_t z = a + 0x9e3779b97f4a7c15ULL * (b + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t fnv1a(std::string_view bytes) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ULL;
  }
  return h;
}

Corpus Corpus::all_graphs(std::size_t max_order) {
  if (max_order < 1 || max_order > 7) {
    throw Error(ErrorCode::OutOfRange, "all:<n> supports 1 <= n <= 7");
  }
  Corpus c;
  c.source_ = Source::AllGraphs;
  c.descriptor_ = "all:" + std::to_string(max_order);
  c.max_order_ = max_order;
  for (std::size_t n = 1; n <= max_order; ++n) {
    c.offsets_.push_back(c.size_);
    c.size_ += LabeledGraphs(n).count();
  }
  return c;
}

Corpus Corpus::trees(std::size_t order) {
  Corpus c;
  c.source_ = Source::Trees;
  c.descriptor_ = "trees:" + std::to_string(order);
  c.min_order_ = c.max_order_ = order;
  c.size_ = LabeledTrees(order).count();
  return c;
}

Corpus Corpus::gnp(std::size_t min_order, std::size_t max_order, double p, std::uint64_t count,
                   std::uint64_t seed) {
  if (min_order < 1 || max_order < min_order) {
    throw Error(ErrorCode::InvalidArgument, "gnp order range must satisfy 1 <= min <= max");
  }
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorCode::InvalidArgument, "p must lie in [0,1]");
  Corpus c;
  c.source_ = Source::Gnp;
  char pbuf[32];
  auto [end, ec] = std::to_chars(pbuf, pbuf + sizeof pbuf, p);
  c.descriptor_ = "gnp:" + std::to_string(min_order) +
                  (max_order != min_order ? "-" + std::to_string(max_order) : std::string{}) + "," +
                  std::string(pbuf, end) + "," + std::to_string(count);
  c.min_order_ = min_order;
  c.max_order_ = max_order;
  c.p_ = p;
  c.size_ = count;
  c.seed_ = seed;
  return c;
}

Corpus Corpus::explicit_graphs(std::vector<Graph> graphs, std::string descriptor) {
  Corpus c;
  c.source_ = Source::Explicit;
  c.descriptor_ = std::move(descriptor);
  c.size_ = graphs.size();
  c.graphs_ = std::move(graphs);
  return c;
}

Corpus Corpus::parse(std::string_view spec, std::uint64_t seed) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) {
    throw Error(ErrorCode::InvalidArgument, "corpus must look like all:<n>, trees:<n> or gnp:...");
  }
  const std::string_view family = spec.substr(0, colon);
  const std::string_view args = spec.substr(colon + 1);
  if (family == "all") return all_graphs(parse_number<std::size_t>(args, "order"));
  if (family == "trees") return trees(parse_number<std::size_t>(args, "order"));
  if (family == "gnp") {
    const auto parts = split(args, ',');
    if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "gnp corpus needs <n>,<p>,<count>");
    const auto range = split(parts[0], '-');
    if (range.size() > 2) throw Error(ErrorCode::InvalidArgument, "bad gnp order range");
    const auto lo = parse_number<std::size_t>(range[0], "order");
    const auto hi = range.size() == 2 ? parse_number<std::size_t>(range[1], "order") : lo;
    return gnp(lo, hi, parse_number<double>(parts[1], "probability"),
               parse_number<std::uint64_t>(parts[2], "count"), seed);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown corpus family '" + std::string(family) + "'");
}

Graph Corpus::at(std::uint64_t index) const {
  if (index >= size_) throw Error(ErrorCode::OutOfRange, "corpus index out of range");
  switch (source_) {
    case Source::AllGraphs: {
      std::size_t n = offsets_.size();
      while (offsets_[n - 1] > index) --n;
      return LabeledGraphs(n).at(index - offsets_[n - 1]);
    }
    case Source::Trees:
      return LabeledTrees(min_order_).at(index);
    case Source::Gnp: {
      const std::uint64_t s = mix_seed(seed_, index);
      const std::size_t span = max_order_ - min_order_ + 1;
      const std::size_t n = min_order_ + static_cast<std::size_t>(s % span);
      return random_gnp(n, p_, mix_seed(s, 1));
    }
    case Source::Explicit:
      return graphs_[index];
  }
  throw Error(ErrorCode::InvalidArgument, "corrupt corpus");
}

}  // namespace graphent
