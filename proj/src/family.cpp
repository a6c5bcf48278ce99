#include "rdegree/family.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "rdegree/error.hpp"

namespace rdegree {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::Path: return "path";
    case Family::Cycle: return "cycle";
    case Family::Complete: return "complete";
    case Family::Star: return "star";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  for (Family f : kAllFamilies) {
    if (family_name(f) == name) return f;
  }
  return std::nullopt;
}

std::size_t minimum_order(Family family) {
  switch (family) {
    case Family::Cycle:
    case Family::Complete: return 3;
    case Family::Path:
    case Family::Star: return 2;
  }
  return 3;
}

Graph generate_family(const FamilySpec& spec) {
  const std::size_t n = spec.n;
  if (n < minimum_order(spec.family)) {
    throw Error(ErrorCode::OrderTooSmall,
                std::string(family_name(spec.family)) + " needs n >= " +
                    std::to_string(minimum_order(spec.family)) + ", got " + std::to_string(n));
  }
  std::vector<Edge> edges;
  const auto id = [](std::size_t i) { return static_cast<VertexId>(i); };
  switch (spec.family) {
    case Family::Path:
    case Family::Cycle:
      for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(id(i), id(i + 1));
      if (spec.family == Family::Cycle) edges.emplace_back(0, id(n - 1));
      break;
    case Family::Complete:
      edges.reserve(n * (n - 1) / 2);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(id(i), id(j));
      break;
    case Family::Star:
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(0, id(i));
      break;
  }
  return Graph::build(n, edges);
}

Graph generate_random_connected(std::size_t n, double edge_probability, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::OrderTooSmall, "random graph needs n >= 1");
  std::mt19937_64 rng(seed);
  std::vector<VertexId> order(n);
  std::iota(order.begin(), order.end(), VertexId{0});
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<char> present(n * n, 0);
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i) {
    std::uniform_int_distribution<std::size_t> pick(0, i - 1);
    VertexId a = order[i];
    VertexId b = order[pick(rng)];
    present[a * n + b] = present[b * n + a] = 1;
    edges.emplace_back(a, b);
  }

  std::bernoulli_distribution coin(std::clamp(edge_probability, 0.0, 1.0));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (!present[u * n + v] && coin(rng)) {
        edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
    }
  }
  return Graph::build(n, edges);
}

}  // namespace rdegree
