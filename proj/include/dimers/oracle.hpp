#pragma once

// Ground-truth perfect matching counters, independent of the determinant
// engine.

#include <cstddef>

#include "dimers/graph.hpp"
#include "dimers/polynomial.hpp"

namespace dimers {

inline constexpr std::size_t kOracleVertexLimit = 26;
inline constexpr std::size_t kProfileColumnLimit = 20;

/// Weighted sum over all perfect matchings. Coefficient k of the result is
/// the total weight of matchings using formal edges with x-multiplicity k;
/// graphs without formal weights give a constant. Odd vertex counts give 0.
///
/// Branches on the lowest unmatched vertex, prunes as soon as a vertex next
/// to the new pair is left without an unmatched neighbour, and caches
/// sub-results by the set of matched vertices.
RatPolynomial count_matchings(const WeightedMultigraph& g, std::size_t vertex_limit = kOracleVertexLimit);

/// count_matchings() for graphs without formal weights.
Rational count_matchings_value(const WeightedMultigraph& g, std::size_t vertex_limit = kOracleVertexLimit);

/// Column-by-column transfer over the declared column structure; the state
/// is the set of next-column vertices already matched from the left.
/// Numeric weights only.
Rational count_matchings_profile(const WeightedMultigraph& g, std::size_t column_limit = kProfileColumnLimit);

}  // namespace dimers
