#include "rdegree/graph.hpp"

#include <algorithm>
#include <string>

#include "rdegree/error.hpp"

namespace rdegree {

namespace {

std::string edge_text(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge " + edge_text(u, v) + " in a graph of order " + std::to_string(n));
    }
    if (u == v) throw Error(ErrorCode::LoopEdge, "self-loop at vertex " + std::to_string(u));
    g.edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge, "edge " + edge_text(dup->first, dup->second));
  }
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& list : g.adjacency_) std::sort(list.begin(), list.end());
  return g;
}

void Graph::check_vertex(VertexId v) const {
  if (v >= adjacency_.size()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) +
                                                 " in a graph of order " +
                                                 std::to_string(adjacency_.size()));
  }
}

std::span<const VertexId> Graph::neighbors(VertexId v) const {
  check_vertex(v);
  return adjacency_[v];
}

std::size_t Graph::degree(VertexId v) const {
  check_vertex(v);
  return adjacency_[v].size();
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::optional<VertexId> first_unreachable_vertex(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return std::nullopt;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.neighbors(v)) {
      if (!seen[u]) {
        seen[u] = 1;
        stack.push_back(u);
      }
    }
  }
  auto it = std::find(seen.begin(), seen.end(), 0);
  if (it == seen.end()) return std::nullopt;
  return static_cast<VertexId>(it - seen.begin());
}

bool is_connected(const Graph& g) { return !first_unreachable_vertex(g).has_value(); }

Graph relabel(const Graph& g, std::span<const VertexId> new_id) {
  if (new_id.size() != g.order()) {
    throw Error(ErrorCode::VertexOutOfRange, "relabeling has " + std::to_string(new_id.size()) +
                                                 " entries for a graph of order " +
                                                 std::to_string(g.order()));
  }
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (auto [u, v] : g.edges()) edges.emplace_back(new_id[u], new_id[v]);
  return Graph::build(g.order(), edges);
}

}  // namespace rdegree
