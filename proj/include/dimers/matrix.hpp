#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "dimers/polynomial.hpp"

namespace dimers {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// True when every denominator is 1.
  bool is_integral() const;

  Matrix transpose() const;

  /// Submatrix on the given (0-based, increasing) rows and columns.
  Matrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;

  /// this + s*I; requires a square matrix.
  Matrix plus_identity(const Rational& s) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix power(const Matrix& m, unsigned exponent);

/// Fraction-free Bareiss elimination on an integer matrix (row-major, n*n).
/// Every intermediate division is checked to be exact.
BigInt bareiss_determinant(std::vector<BigInt> entries, std::size_t n);

/// Exact determinant. Rational rows are scaled to integers before Bareiss.
Rational det_exact(const Matrix& m);

inline constexpr std::size_t kPermanentLimit = 14;
inline constexpr std::size_t kPrincipalMinorLimit = 12;

/// Ryser's inclusion-exclusion formula with Gray-code column updates.
Rational permanent(const Matrix& m, std::size_t limit = kPermanentLimit);

/// det(tI - M) for an integer matrix, by interpolation of Bareiss
/// determinants at t = 0..n.
IntPolynomial charpoly(const Matrix& m);

/// Same as charpoly() but allows rational entries.
RatPolynomial charpoly_rational(const Matrix& m);

/// Sum over J of x^(n-|J|) det(M_J^J), enumerated over all 2^n subsets.
IntPolynomial principal_minor_sum(const Matrix& m, std::size_t limit = kPrincipalMinorLimit);

/// x^prefactor * p(x^power).
template <typename T>
Polynomial<T> poly_shift_compose(const Polynomial<T>& p, std::size_t power, std::size_t prefactor) {
  return p.compose_power(power, prefactor);
}

/// Exact polynomial through the points (i, values[i]), i = 0..n-1.
RatPolynomial interpolate_at_naturals(const std::vector<Rational>& values);

}  // namespace dimers
