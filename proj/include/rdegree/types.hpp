#pragma once

#include <cstdint>
#include <utility>

#include <boost/multiprecision/cpp_int.hpp>

namespace rdegree {

/// Unbounded-precision integer used for every degree-derived quantity.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using VertexId = std::uint32_t;

/// Undirected edge stored with `first < second`.
using Edge = std::pair<VertexId, VertexId>;

}  // namespace rdegree
