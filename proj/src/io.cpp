#include "rdegree/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "rdegree/error.hpp"

namespace rdegree {

namespace {

constexpr char kGraph6Offset = 63;
constexpr std::size_t kGraph6ShortMax = 62;

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::uint64_t parse_id(std::string_view token, std::size_t line_number) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_number) +
                                            ": expected a nonnegative integer, got '" +
                                            std::string(token) + "'");
  }
  return value;
}

}  // namespace

EdgeListGraph parse_edge_list(std::istream& in) {
  std::optional<std::uint64_t> declared;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::string line;
  std::size_t line_number = 0;
  bool seen_content = false;
  while (std::getline(in, line)) {
    ++line_number;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens.front().front() == '#') continue;
    const bool first = !seen_content;
    seen_content = true;
    if (tokens.size() != 2) {
      throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line_number) +
                                              ": expected two tokens, got " +
                                              std::to_string(tokens.size()));
    }
    if (first && tokens[0] == "n") {
      declared = parse_id(tokens[1], line_number);
      continue;
    }
    raw.emplace_back(parse_id(tokens[0], line_number), parse_id(tokens[1], line_number));
  }

  EdgeListGraph result;
  std::vector<Edge> edges;
  edges.reserve(raw.size());
  if (declared) {
    for (auto [u, v] : raw) {
      if (u >= *declared || v >= *declared) {
        throw Error(ErrorCode::VertexOutOfRange,
                    "edge (" + std::to_string(u) + ", " + std::to_string(v) +
                        ") exceeds declared order " + std::to_string(*declared));
      }
      edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    }
    result.labels.resize(*declared);
    for (std::uint64_t i = 0; i < *declared; ++i) result.labels[i] = i;
    result.graph = Graph::build(*declared, edges);
    return result;
  }

  for (auto [u, v] : raw) {
    result.labels.push_back(u);
    result.labels.push_back(v);
  }
  std::sort(result.labels.begin(), result.labels.end());
  result.labels.erase(std::unique(result.labels.begin(), result.labels.end()),
                      result.labels.end());
  std::unordered_map<std::uint64_t, VertexId> index;
  for (std::size_t i = 0; i < result.labels.size(); ++i) {
    index.emplace(result.labels[i], static_cast<VertexId>(i));
  }
  for (auto [u, v] : raw) {
    if (u == v) throw Error(ErrorCode::LoopEdge, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(index.at(u), index.at(v));
  }
  result.graph = Graph::build(result.labels.size(), edges);
  return result;
}

EdgeListGraph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_edge_list(in);
}

void write_edge_list(const Graph& g, std::ostream& out) {
  bool isolated = false;
  for (std::size_t v = 0; v < g.order(); ++v) isolated |= g.degree(static_cast<VertexId>(v)) == 0;
  if (isolated) out << "n " << g.order() << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

Graph parse_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  if (line.empty()) throw Error(ErrorCode::TruncatedData, "empty graph6 string");

  for (std::size_t i = 0; i < line.size(); ++i) {
    const auto c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw Error(ErrorCode::InvalidCharacter,
                  "byte " + std::to_string(c) + " at offset " + std::to_string(i));
    }
  }
  const std::size_t n = static_cast<std::size_t>(line[0] - kGraph6Offset);
  if (n > kGraph6ShortMax) {
    throw Error(ErrorCode::OrderTooLarge, "long-form graph6 orders (n >= 63) are not supported");
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  const std::string_view body = line.substr(1);
  if (body.size() < bytes) {
    throw Error(ErrorCode::TruncatedData, "order " + std::to_string(n) + " needs " +
                                              std::to_string(bytes) + " data bytes, got " +
                                              std::to_string(body.size()));
  }
  if (body.size() > bytes) {
    throw Error(ErrorCode::SyntaxError, std::to_string(body.size() - bytes) +
                                            " trailing bytes after graph6 data");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int group = body[k / 6] - kGraph6Offset;
      if ((group >> (5 - k % 6)) & 1) {
        edges.emplace_back(static_cast<VertexId>(i), static_cast<VertexId>(j));
      }
    }
  }
  return Graph::build(n, edges);
}

std::string write_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kGraph6ShortMax) {
    throw Error(ErrorCode::OrderTooLarge, "graph6 short form needs n <= 62, got " +
                                              std::to_string(n));
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  std::string out(1 + (bits + 5) / 6, '\0');
  out[0] = static_cast<char>(n);
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (g.has_edge(static_cast<VertexId>(i), static_cast<VertexId>(j))) {
        out[1 + k / 6] = static_cast<char>(out[1 + k / 6] | (1 << (5 - k % 6)));
      }
    }
  }
  for (char& c : out) c = static_cast<char>(c + kGraph6Offset);
  return out;
}

}  // namespace rdegree
