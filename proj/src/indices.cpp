#include "rdegree/indices.hpp"

#include <cmath>
#include <string>

#include "rdegree/error.hpp"

namespace rdegree {

namespace {

// Sums f(deg u, deg v) over the sorted edge list.
template <typename F>
double edge_sum(const Graph& g, F&& f) {
  double total = 0.0;
  for (auto [u, v] : g.edges()) {
    total += f(static_cast<double>(g.degree(u)), static_cast<double>(g.degree(v)));
  }
  return total;
}

double abc_term(double du, double dv) { return std::sqrt((du + dv - 2.0) / (du * dv)); }
double ga_term(double du, double dv) { return 2.0 * std::sqrt(du * dv) / (du + dv); }
double h_term(double du, double dv) { return 2.0 / (du + dv); }
double chi_term(double du, double dv) { return 1.0 / std::sqrt(du + dv); }
double zagreb2_term(double du, double dv) { return du * dv; }
double randic_term(double du, double dv) { return 1.0 / std::sqrt(du * dv); }

BigInt sum_r_squared(const RDegreeTable& table) {
  BigInt total = 0;
  for (const auto& row : table) total += row.r * row.r;
  return total;
}

BigInt sum_edge_products(const Graph& g, const RDegreeTable& table) {
  BigInt total = 0;
  for (auto [u, v] : g.edges()) total += table[u].r * table[v].r;
  return total;
}

BigInt sum_edge_sums(const Graph& g, const RDegreeTable& table) {
  BigInt total = 0;
  for (auto [u, v] : g.edges()) total += table[u].r + table[v].r;
  return total;
}

ClassicalExtras extras_unchecked(const Graph& g) {
  ClassicalExtras extras;
  for (std::size_t v = 0; v < g.order(); ++v) {
    const auto d = static_cast<double>(g.degree(static_cast<VertexId>(v)));
    extras.zagreb1 += d * d;
  }
  extras.zagreb2 = edge_sum(g, zagreb2_term);
  extras.randic = edge_sum(g, randic_term);
  return extras;
}

}  // namespace

void require_index_domain(const Graph& g) {
  if (g.order() < 2) {
    throw Error(ErrorCode::OrderTooSmall,
                "indices need at least 2 vertices, got " + std::to_string(g.order()));
  }
  if (auto v = first_unreachable_vertex(g)) {
    throw Error(ErrorCode::DisconnectedGraph,
                "vertex " + std::to_string(*v) + " is unreachable from vertex 0");
  }
}

BigInt r1_index(const Graph& g, const RDegreeTable& table) {
  require_index_domain(g);
  return sum_r_squared(table);
}

BigInt r2_index(const Graph& g, const RDegreeTable& table) {
  require_index_domain(g);
  return sum_edge_products(g, table);
}

BigInt r3_index(const Graph& g, const RDegreeTable& table) {
  require_index_domain(g);
  return sum_edge_sums(g, table);
}

BigInt r1_index(const Graph& g) { return r1_index(g, r_degree_table(g)); }
BigInt r2_index(const Graph& g) { return r2_index(g, r_degree_table(g)); }
BigInt r3_index(const Graph& g) { return r3_index(g, r_degree_table(g)); }

double abc_index(const Graph& g) {
  require_index_domain(g);
  return edge_sum(g, abc_term);
}

double ga_index(const Graph& g) {
  require_index_domain(g);
  return edge_sum(g, ga_term);
}

double h_index(const Graph& g) {
  require_index_domain(g);
  return edge_sum(g, h_term);
}

double chi_index(const Graph& g) {
  require_index_domain(g);
  return edge_sum(g, chi_term);
}

ClassicalExtras classical_extras(const Graph& g) {
  require_index_domain(g);
  return extras_unchecked(g);
}

IndexReport full_report(const Graph& g) {
  require_index_domain(g);
  const RDegreeTable table = r_degree_table(g);
  IndexReport report;
  report.n = g.order();
  report.m = g.size();
  report.r1 = sum_r_squared(table);
  report.r2 = sum_edge_products(g, table);
  report.r3 = sum_edge_sums(g, table);
  report.abc = edge_sum(g, abc_term);
  report.ga = edge_sum(g, ga_term);
  report.h = edge_sum(g, h_term);
  report.chi = edge_sum(g, chi_term);
  const ClassicalExtras extras = extras_unchecked(g);
  report.zagreb1 = extras.zagreb1;
  report.zagreb2 = extras.zagreb2;
  report.randic = extras.randic;
  return report;
}

}  // namespace rdegree
