#include "rdegree/degree.hpp"

#include <string>

#include "rdegree/error.hpp"

namespace rdegree {

namespace {

VertexDegrees degrees_of(const Graph& g, VertexId v) {
  VertexDegrees d;
  d.sum = 0;
  d.mult = 1;
  for (VertexId u : g.neighbors(v)) {
    const auto deg = g.degree(u);
    d.sum += deg;
    d.mult *= deg;
  }
  d.r = d.mult + d.sum;
  return d;
}

}  // namespace

const VertexDegrees& RDegreeTable::at(VertexId v) const {
  if (v >= rows_.size()) {
    throw Error(ErrorCode::VertexOutOfRange, "vertex " + std::to_string(v) +
                                                 " in a table of size " +
                                                 std::to_string(rows_.size()));
  }
  return rows_[v];
}

BigInt sum_degree(const Graph& g, VertexId v) { return degrees_of(g, v).sum; }

BigInt mult_degree(const Graph& g, VertexId v) { return degrees_of(g, v).mult; }

BigInt r_degree(const Graph& g, VertexId v) { return degrees_of(g, v).r; }

RDegreeTable r_degree_table(const Graph& g) {
  std::vector<VertexDegrees> rows;
  rows.reserve(g.order());
  for (std::size_t v = 0; v < g.order(); ++v) {
    rows.push_back(degrees_of(g, static_cast<VertexId>(v)));
  }
  return RDegreeTable(std::move(rows));
}

}  // namespace rdegree
