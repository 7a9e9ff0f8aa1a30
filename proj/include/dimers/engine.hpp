#pragma once

// Matching counts of fabric graphs from products of strand bi-adjacency
// matrices: det(A_1...A_m) for rectangular fabrics, and
// x-prefactor * det((x_1...x_m) I + A_1...A_m) for cylindrical ones.

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "dimers/graph.hpp"
#include "dimers/matrix.hpp"

namespace dimers {

enum class EngineMethod { RectDet, CylDet, CylCharpoly };

std::string to_string(EngineMethod m);

struct EngineResult {
  std::variant<Rational, RatPolynomial> value;
  /// Dimensions of the running product after each strand: (rows, cols).
  std::vector<std::pair<std::size_t, std::size_t>> product_dims;
  EngineMethod method = EngineMethod::RectDet;
};

/// A_1 A_2 ... A_m multiplied left to right; dims traced into `trace` if given.
Matrix strand_product(const FabricGraph& f, std::vector<std::pair<std::size_t, std::size_t>>* trace = nullptr);

/// M(G) = det(A_1 ... A_m) for a balanced rectangular fabric.
EngineResult count_rect_detailed(const FabricGraph& f);
Rational count_rect(const FabricGraph& f);

/// M(G; x_1..x_m) at rational x. Exponents l_i - l_m may be negative; they
/// are evaluated exactly and need the corresponding x_i to be nonzero.
EngineResult count_cyl_detailed(const FabricGraph& f, const std::vector<Rational>& x);
Rational count_cyl(const FabricGraph& f, const std::vector<Rational>& x);

/// M(G; x, ..., x) with every vertical edge weighted by the formal x.
/// Computed from the characteristic polynomial of the strand product with
/// X -> x^m and the monomial prefactor; the strand list is rotated first so
/// that the prefactor exponent is non-negative.
EngineResult match_polynomial_detailed(const FabricGraph& f);
RatPolynomial match_polynomial(const FabricGraph& f);

/// det(X I + P) as a polynomial in X, via det(tI - P) evaluated at t = -X.
RatPolynomial shifted_determinant_polynomial(const Matrix& p);

}  // namespace dimers
