#include "graphent/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "graphent/error.hpp"

namespace graphent {
namespace {

constexpr std::size_t kMaxGraph6Order = 62;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t parse_index(std::string_view tok, std::size_t line_no) {
  std::int64_t value = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw Error(ErrorCode::MalformedToken,
                "line " + std::to_string(line_no) + ": '" + std::string(tok) + "'");
  }
  if (value < 0) {
    throw Error(ErrorCode::NegativeIndex,
                "line " + std::to_string(line_no) + ": " + std::to_string(value));
  }
  return static_cast<std::size_t>(value);
}

struct PairList {
  std::size_t order = 1;
  std::vector<Edge> pairs;  // as written, not normalized
};

PairList parse_pairs(std::string_view text) {
  PairList out;
  std::optional<std::size_t> header;
  std::size_t line_no = 0;
  std::size_t max_index_plus_one = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = trim(text.substr(0, nl));
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) {
      throw Error(ErrorCode::MalformedToken,
                  "line " + std::to_string(line_no) + ": expected two tokens");
    }
    if (tokens[0] == "n") {
      if (header) {
        throw Error(ErrorCode::MalformedToken,
                    "line " + std::to_string(line_no) + ": duplicate order header");
      }
      header = parse_index(tokens[1], line_no);
      continue;
    }
    const std::size_t u = parse_index(tokens[0], line_no);
    const std::size_t v = parse_index(tokens[1], line_no);
    if (u == v) {
      throw Error(ErrorCode::LoopEdge,
                  "line " + std::to_string(line_no) + ": loop at " + std::to_string(u));
    }
    max_index_plus_one = std::max({max_index_plus_one, u + 1, v + 1});
    out.pairs.push_back({u, v});
  }
  out.order = std::max<std::size_t>({header.value_or(0), max_index_plus_one, 1});
  return out;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  const PairList parsed = parse_pairs(text);
  return Graph(parsed.order, parsed.pairs);
}

OrientedGraph parse_arc_list(std::string_view text) {
  const PairList parsed = parse_pairs(text);
  std::map<Edge, bool> direction;  // normalized edge -> (min -> max)
  for (const Edge& arc : parsed.pairs) {
    const Edge key{std::min(arc.u, arc.v), std::max(arc.u, arc.v)};
    const bool fwd = arc.u < arc.v;
    auto [it, inserted] = direction.emplace(key, fwd);
    if (!inserted && it->second != fwd) {
      throw Error(ErrorCode::ContradictoryArcs, "arcs " + std::to_string(key.u) + "<->" +
                                                    std::to_string(key.v) + " in both directions");
    }
  }
  Graph g(parsed.order, parsed.pairs);
  std::vector<bool> forward;
  forward.reserve(g.size());
  for (const Edge& e : g.edges()) forward.push_back(direction.at(e));
  return OrientedGraph(std::move(g), std::move(forward));
}

Graph parse_graph6(std::string_view bytes) {
  if (!bytes.empty() && bytes.back() == '\n') bytes.remove_suffix(1);
  if (!bytes.empty() && bytes.back() == '\r') bytes.remove_suffix(1);
  if (bytes.empty()) throw Error(ErrorCode::TruncatedBitStream, "empty graph6 string");
  for (char c : bytes) {
    const auto b = static_cast<unsigned char>(c);
    if (b < 63 || b > 126) {
      throw Error(ErrorCode::ByteOutOfRange, "byte " + std::to_string(b) + " outside 63..126");
    }
  }
  const std::size_t n = static_cast<unsigned char>(bytes[0]) - 63;
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::OutOfRange, "multi-byte graph6 orders (n >= 63) are not supported");
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t payload = (bits + 5) / 6;
  const std::size_t available = bytes.size() - 1;
  if (available < payload) {
    throw Error(ErrorCode::TruncatedBitStream, "need " + std::to_string(payload) +
                                                   " data bytes, got " + std::to_string(available));
  }
  if (available > payload) {
    throw Error(ErrorCode::TrailingBytes,
                std::to_string(available - payload) + " unexpected byte(s) after bit stream");
  }
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const auto chunk = static_cast<unsigned>(static_cast<unsigned char>(bytes[1 + k / 6]) - 63);
      if ((chunk >> (5 - k % 6)) & 1U) edges.push_back({i, j});
    }
  }
  return Graph(n, edges);
}

std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw Error(ErrorCode::OutOfRange, "multi-byte graph6 orders (n >= 63) are not supported");
  }
  const std::size_t bits = n * (n - 1) / 2;
  std::vector<unsigned> chunks((bits + 5) / 6, 0);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (g.has_edge(i, j)) chunks[k / 6] |= 1U << (5 - k % 6);
    }
  }
  std::string out;
  out.reserve(1 + chunks.size());
  out.push_back(static_cast<char>(63 + n));
  for (unsigned c : chunks) out.push_back(static_cast<char>(63 + c));
  return out;
}

std::string to_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

std::string to_arc_list(const OrientedGraph& g) {
  const Graph& base = g.underlying();
  std::string out = "n " + std::to_string(base.order()) + "\n";
  for (std::size_t k = 0; k < base.size(); ++k) {
    const Edge& e = base.edges()[k];
    const auto [from, to] = g.forward()[k] ? std::pair{e.u, e.v} : std::pair{e.v, e.u};
    out += std::to_string(from) + " " + std::to_string(to) + "\n";
  }
  return out;
}

}  // namespace graphent
