#pragma once

#include <cstddef>
#include <vector>

#include "rdegree/graph.hpp"
#include "rdegree/types.hpp"

namespace rdegree {

struct VertexDegrees {
  BigInt sum;   // S_v: sum of neighbour degrees
  BigInt mult;  // M_v: product of neighbour degrees
  BigInt r;     // r(v) = M_v + S_v

  friend bool operator==(const VertexDegrees&, const VertexDegrees&) = default;
};

/// Per-vertex sum, multiplication and R degrees, indexed by vertex id.
///
/// An isolated vertex has S_v = 0 and M_v = 1 (empty sum and empty product),
/// so r(v) = 1. Connectivity is not required here; the index functions
/// enforce it.
class RDegreeTable {
 public:
  RDegreeTable() = default;
  explicit RDegreeTable(std::vector<VertexDegrees> rows) : rows_(std::move(rows)) {}

  std::size_t size() const noexcept { return rows_.size(); }
  const VertexDegrees& operator[](VertexId v) const { return rows_[v]; }
  const VertexDegrees& at(VertexId v) const;

  auto begin() const noexcept { return rows_.begin(); }
  auto end() const noexcept { return rows_.end(); }

  friend bool operator==(const RDegreeTable&, const RDegreeTable&) = default;

 private:
  std::vector<VertexDegrees> rows_;
};

BigInt sum_degree(const Graph& g, VertexId v);
BigInt mult_degree(const Graph& g, VertexId v);
BigInt r_degree(const Graph& g, VertexId v);

RDegreeTable r_degree_table(const Graph& g);

}  // namespace rdegree
