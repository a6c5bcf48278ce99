#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>

#include "rdegree/graph.hpp"

namespace rdegree {

enum class Family { Path, Cycle, Complete, Star };

inline constexpr Family kAllFamilies[] = {Family::Path, Family::Cycle,
                                          Family::Complete, Family::Star};

struct FamilySpec {
  Family family;
  std::size_t n;
};

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

/// Smallest order the generator accepts: 3 for cycles and complete graphs,
/// 2 for paths and stars.
std::size_t minimum_order(Family family);

// Path chains 0..n-1, Cycle adds (n-1, 0), Star is centred on vertex 0.
Graph generate_family(const FamilySpec& spec);

/// Random connected graph: a uniformly shuffled random recursive spanning tree,
/// then every remaining pair independently with `edge_probability`.
/// Deterministic for a fixed seed on a given standard library.
Graph generate_random_connected(std::size_t n, double edge_probability,
                                std::uint64_t seed);

}  // namespace rdegree
