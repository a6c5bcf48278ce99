#pragma once

#include <cstddef>

#include "rdegree/degree.hpp"
#include "rdegree/graph.hpp"
#include "rdegree/types.hpp"

namespace rdegree {

// Every index below requires a connected graph with at least two vertices
// and throws Error{DisconnectedGraph} or Error{OrderTooSmall} otherwise.
void require_index_domain(const Graph& g);

// R indices. The overloads taking a table trust that it was built from `g`.
BigInt r1_index(const Graph& g);
BigInt r2_index(const Graph& g);
BigInt r3_index(const Graph& g);
BigInt r1_index(const Graph& g, const RDegreeTable& table);
BigInt r2_index(const Graph& g, const RDegreeTable& table);
BigInt r3_index(const Graph& g, const RDegreeTable& table);

// Classical degree-based indices, summed over edges in sorted order.
double abc_index(const Graph& g);
double ga_index(const Graph& g);
double h_index(const Graph& g);
double chi_index(const Graph& g);

struct ClassicalExtras {
  double zagreb1 = 0;
  double zagreb2 = 0;
  double randic = 0;
};

ClassicalExtras classical_extras(const Graph& g);

struct IndexReport {
  std::size_t n = 0;
  std::size_t m = 0;
  BigInt r1, r2, r3;
  double abc = 0, ga = 0, h = 0, chi = 0;
  double zagreb1 = 0, zagreb2 = 0, randic = 0;
};

/// All indices at once; the three R indices share one RDegreeTable.
IndexReport full_report(const Graph& g);

}  // namespace rdegree
