#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rdegree/types.hpp"

namespace rdegree {

/// Immutable simple undirected graph on the dense vertex set 0..n-1.
///
/// Construction validates the edge list: self-loops, repeated edges and
/// out-of-range endpoints are rejected with an `Error`. Neighbor lists are
/// kept sorted, and `edges()` is sorted lexicographically with u < v, which
/// fixes the summation order of every floating-point index.
class Graph {
 public:
  Graph() = default;

  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adjacency_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }

  std::span<const VertexId> neighbors(VertexId v) const;
  std::size_t degree(VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const;

  const std::vector<Edge>& edges() const noexcept { return edges_; }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(VertexId v) const;

  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<Edge> edges_;
};

/// True iff every vertex is reachable from vertex 0; vacuously true for n <= 1.
bool is_connected(const Graph& g);

/// Smallest vertex id not reachable from vertex 0, if any.
std::optional<VertexId> first_unreachable_vertex(const Graph& g);

/// Applies `new_id[v]` to every vertex. `new_id` must be a permutation of 0..n-1.
Graph relabel(const Graph& g, std::span<const VertexId> new_id);

}  // namespace rdegree
