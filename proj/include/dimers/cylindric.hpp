#pragma once

// Cylindric plane partitions of shape (s+m-1, ..., s)/(m-1, ..., 1, 0)/m and
// the periodic cliffs counted through honeycomb cylinder matchings.

#include <cstddef>
#include <functional>
#include <vector>

#include "dimers/graph.hpp"
#include "dimers/polynomial.hpp"

namespace dimers {

/// m rows of s entries; row 0 is the top row and is furthest right. Row i
/// occupies columns m-i .. m-i+s-1 (0-based rows, 1-based columns).
using CylindricFilling = std::vector<std::vector<unsigned>>;

inline constexpr std::size_t kCylindricCellLimit = 24;

/// True iff the filling is weakly decreasing along rows and columns, has all
/// entries <= bound, and stays column-decreasing when the bottom row is
/// copied above the top row shifted m columns right.
bool is_cylindric_filling(const CylindricFilling& f, std::size_t m, std::size_t s, unsigned bound);

/// Counts fillings with entries <= n by backtracking cell by cell.
/// `visit`, when set, is called for every filling in lexicographic order.
BigInt enumerate_cylindric(std::size_t m, std::size_t s, std::size_t n,
                           const std::function<void(const CylindricFilling&)>& visit = {},
                           std::size_t cell_limit = kCylindricCellLimit);

struct CliffCount {
  BigInt exact;
  double formula = 0.0;
};

/// m-periodic cliffs of height n and horizontal displacement s: the number
/// of perfect matchings of H_{2m,2n+s} with m*s vertical edges, read off the
/// engine's matching polynomial. The float product is evaluated alongside.
CliffCount cliff_count(std::size_t m, std::size_t n, std::size_t s);

/// Coefficient of x^k in match_polynomial(f).
BigInt matchings_with_k_verticals(const FabricGraph& f, std::size_t k);

}  // namespace dimers
