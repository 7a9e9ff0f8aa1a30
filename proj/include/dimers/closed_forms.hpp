#pragma once

// Double-precision evaluation of the product formulas and closed-form
// eigenvalue lists. Floats only corroborate; exact values always come from
// the engine or the oracles.

#include <cstddef>
#include <vector>

#include "dimers/polynomial.hpp"

namespace dimers {

struct FormulaValue {
  double float_value = 0.0;
  BigInt rounded;
  double relative_gap = 0.0;  ///< |float - rounded| / max(1, |rounded|)

  static FormulaValue from_double(double v);
};

/// Product of factors multiplied in order of increasing magnitude.
double ordered_product(std::vector<double> factors);

/// Temperley-Fisher-Kasteleyn double product for the m x n grid R_{m,n}.
FormulaValue tfk(std::size_t m, std::size_t n);

/// M(H_{m,n}; x_1..x_m) by the honeycomb product formula (m even). The
/// per-level form takes x_1..x_m; the common form uses x for every level.
FormulaValue honeycomb_formula(std::size_t m, std::size_t n, const std::vector<double>& x);
FormulaValue honeycomb_formula(std::size_t m, std::size_t n, double x = 1.0);

/// Full-range form of the honeycomb product: square root of the product
/// over k = 1..n (no floor in the upper limit). Used as an identity check.
double honeycomb_sqrt_form(std::size_t m, std::size_t n, double x = 1.0);

/// M(C_{m,n}) for even m, prefactor form 2^(n - 2 floor(n/2)) * prod_{k<=n/2}.
FormulaValue square_even_formula(std::size_t m, std::size_t n);

/// Square-root form of the even-girth formula, product over k = 1..n.
double square_even_sqrt_form(std::size_t m, std::size_t n);

/// M(C_{m,n}) for any m >= 2: fourth root of the four-fold product, with
/// sign bookkeeping; 0 when m*n is odd.
FormulaValue square_unified_formula(std::size_t m, std::size_t n);

/// M(C_{2m+1,2n}) as prod_k prod_{j odd} (4cos^2(j pi/(4m+2)) + 4cos^2(k pi/(2n+1))).
/// Arguments are the half-parameters m, n.
FormulaValue square_odd_formula(std::size_t half_m, std::size_t half_n);

/// 2cos(k pi/(n+1)), k = 1..n: path adjacency matrix.
std::vector<double> path_eigenvalues(std::size_t n);
/// 2cos(2k pi/(2n+1)), k = 1..n: path matrix with -1 in the last corner.
std::vector<double> wilted_path_eigenvalues(std::size_t n);
/// (c +- sqrt(1 + c^2))^2, c = cos(k pi/(n+1)), k = 1..ceil(n/2): the Gram
/// matrix of the square strand matrix; for odd n the double value 1 at the
/// middle k is listed once.
std::vector<double> strand_gram_eigenvalues(std::size_t n);

/// T_n and U_n from their three-term recurrences.
IntPolynomial chebyshev_T(std::size_t n);
IntPolynomial chebyshev_U(std::size_t n);

/// (T_n closed form) [(x + sqrt(x^2-1))^n + (x - sqrt(x^2-1))^n] / 2 for x >= 1.
double chebyshev_T_closed_form(std::size_t n, double x);

struct IdentitySides {
  double left = 0.0;
  double right = 0.0;
};

/// Both sides of prod_{k odd <= 2m+1} (4z^2 + 4cos^2(k pi/(4m+2)))
///   = 2z sqrt(-[1 - (z + sqrt(1+z^2))^(4m+2)][1 - (z - sqrt(1+z^2))^(4m+2)]).
IdentitySides odd_cosine_both_sides(double z, std::size_t m);

/// prod_{k=1}^n 2cos(k pi/(2n+1)); equals 1.
double cosine_product(std::size_t n);

/// [x^{floor(s/2)}] prod_{k=1}^{n+floor(s/2)} [x + (2 + 2cos(2k pi/(2n+s+1)))^m].
double cliff_formula(std::size_t m, std::size_t n, std::size_t s);

}  // namespace dimers
