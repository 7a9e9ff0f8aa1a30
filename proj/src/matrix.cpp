#include "dimers/matrix.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "dimers/error.hpp"

namespace dimers {

namespace {

void require_square(const Matrix& m, const char* op) {
  if (!m.square())
    throw Error(ErrorCode::NotSquare, std::string(op) + " needs a square matrix, got " + std::to_string(m.rows()) +
                                          "x" + std::to_string(m.cols()));
}

std::vector<BigInt> integer_entries(const Matrix& m, const char* op) {
  std::vector<BigInt> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!is_integer(m(r, c))) throw Error(ErrorCode::NonIntegerEntries, std::string(op) + " needs integer entries");
      out.push_back(m(r, c).get_num());
    }
  return out;
}

}  // namespace

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw Error(ErrorCode::SizeMismatch, "ragged matrix literal");
    for (const auto& v : row) {
      Rational x = v;
      x.canonicalize();
      data_.push_back(x);
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_integral() const {
  for (const auto& v : data_)
    if (!is_integer(v)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

Matrix Matrix::plus_identity(const Rational& s) const {
  require_square(*this, "plus_identity");
  Matrix out = *this;
  for (std::size_t i = 0; i < rows_; ++i) out(i, i) += s;
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_)
    throw Error(ErrorCode::SizeMismatch, "cannot multiply " + std::to_string(a.rows_) + "x" + std::to_string(a.cols_) +
                                             " by " + std::to_string(b.rows_) + "x" + std::to_string(b.cols_));
  Matrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw Error(ErrorCode::SizeMismatch, "matrix sum dimension mismatch");
  Matrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
  return c;
}

Matrix power(const Matrix& m, unsigned exponent) {
  require_square(m, "power");
  Matrix result = Matrix::identity(m.rows());
  Matrix base = m;
  while (exponent > 0) {
    if (exponent & 1U) result = result * base;
    exponent >>= 1U;
    if (exponent > 0) base = base * base;
  }
  return result;
}

BigInt bareiss_determinant(std::vector<BigInt> a, std::size_t n) {
  if (a.size() != n * n) throw Error(ErrorCode::SizeMismatch, "bareiss_determinant: entry count is not n*n");
  if (n == 0) return 1;
  int sign = 1;
  BigInt prev = 1;
  auto at = [&](std::size_t r, std::size_t c) -> BigInt& { return a[r * n + c]; };
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && at(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      for (std::size_t c = 0; c < n; ++c) std::swap(at(k, c), at(pivot, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        // Sylvester's identity makes this division exact.
        if (!mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()))
          throw std::logic_error("Bareiss step produced a non-integral quotient");
        mpz_divexact(at(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

Rational det_exact(const Matrix& m) {
  require_square(m, "det_exact");
  const std::size_t n = m.rows();
  std::vector<BigInt> ints;
  ints.reserve(n * n);
  BigInt scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    BigInt row_lcm = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(r, c).get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) ints.push_back(m(r, c).get_num() * (row_lcm / m(r, c).get_den()));
    scale *= row_lcm;
  }
  return make_rational(bareiss_determinant(std::move(ints), n), scale);
}

Rational permanent(const Matrix& m, std::size_t limit) {
  require_square(m, "permanent");
  const std::size_t n = m.rows();
  if (n > limit || n > 30)
    throw Error(ErrorCode::TooLarge, "permanent of order " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  if (n == 0) return 1;
  // per(A) = (-1)^n sum_S (-1)^|S| prod_i sum_{j in S} a_ij, S walked in Gray-code order.
  std::vector<Rational> row_sums(n, Rational(0));
  Rational total = 0;
  std::uint32_t gray = 0;
  for (std::uint32_t step = 1; step < (std::uint32_t{1} << n); ++step) {
    std::uint32_t next = step ^ (step >> 1);
    std::uint32_t flipped = gray ^ next;
    auto col = static_cast<std::size_t>(std::countr_zero(flipped));
    bool added = (next & flipped) != 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (added)
        row_sums[i] += m(i, col);
      else
        row_sums[i] -= m(i, col);
    }
    gray = next;
    Rational prod = 1;
    for (const auto& s : row_sums) {
      prod *= s;
      if (prod == 0) break;
    }
    if (std::popcount(gray) % 2 == 1)
      total -= prod;
    else
      total += prod;
  }
  if (n % 2 == 1) total = -total;
  return total;
}

RatPolynomial interpolate_at_naturals(const std::vector<Rational>& values) {
  const std::size_t n = values.size();
  if (n == 0) return {};
  // Newton divided differences on nodes 0, 1, ..., n-1.
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
      if (i == level) break;
    }
  RatPolynomial p = RatPolynomial::constant(dd[n - 1]);
  for (std::size_t k = n - 1; k-- > 0;) {
    p = p * RatPolynomial{Rational(-static_cast<long>(k)), Rational(1)};
    p += RatPolynomial::constant(dd[k]);
  }
  return p;
}

RatPolynomial charpoly_rational(const Matrix& m) {
  require_square(m, "charpoly");
  const std::size_t n = m.rows();
  std::vector<Rational> samples;
  samples.reserve(n + 1);
  Matrix neg(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) neg(r, c) = -m(r, c);
  for (std::size_t t = 0; t <= n; ++t) samples.push_back(det_exact(neg.plus_identity(Rational(static_cast<long>(t)))));
  return interpolate_at_naturals(samples);
}

IntPolynomial charpoly(const Matrix& m) {
  require_square(m, "charpoly");
  if (!m.is_integral()) throw Error(ErrorCode::NonIntegerEntries, "charpoly needs integer entries");
  IntPolynomial out;
  if (!to_integer(charpoly_rational(m), out)) throw std::logic_error("integer charpoly interpolated to a fraction");
  return out;
}

IntPolynomial principal_minor_sum(const Matrix& m, std::size_t limit) {
  require_square(m, "principal_minor_sum");
  const std::size_t n = m.rows();
  if (n > limit || n > 30)
    throw Error(ErrorCode::TooLarge,
                "principal_minor_sum of order " + std::to_string(n) + " exceeds limit " + std::to_string(limit));
  const auto entries = integer_entries(m, "principal_minor_sum");
  std::vector<BigInt> coeffs(n + 1, BigInt(0));
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1U) idx.push_back(i);
    std::vector<BigInt> sub;
    sub.reserve(idx.size() * idx.size());
    for (auto r : idx)
      for (auto c : idx) sub.push_back(entries[r * n + c]);
    coeffs[n - idx.size()] += bareiss_determinant(std::move(sub), idx.size());
  }
  return IntPolynomial(std::move(coeffs));
}

}  // namespace dimers
