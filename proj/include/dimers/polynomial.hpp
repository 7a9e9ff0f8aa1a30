#pragma once

// Dense univariate polynomials over exact integers or rationals.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace dimers {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Canonical rational: lowest terms, positive denominator.
inline Rational make_rational(const BigInt& num, const BigInt& den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

/// Decimal string, "p/q" for non-integers.
inline std::string to_decimal(const Rational& r) { return r.get_str(10); }
inline std::string to_decimal(const BigInt& z) { return z.get_str(10); }

/// Coefficients indexed by degree; trailing zeros are always trimmed, so the
/// zero polynomial has an empty coefficient vector.
template <typename T>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<T> coeffs) : coeffs_(coeffs) { normalize(); }
  explicit Polynomial(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

  static Polynomial constant(const T& c) { return Polynomial(std::vector<T>{c}); }

  static Polynomial monomial(const T& c, std::size_t degree) {
    std::vector<T> v(degree + 1, T(0));
    v[degree] = c;
    return Polynomial(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }

  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  const std::vector<T>& coefficients() const { return coeffs_; }

  T coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : T(0); }

  T leading() const { return coeffs_.empty() ? T(0) : coeffs_.back(); }

  template <typename U>
  U evaluate(const U& x) const {
    U acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + U(*it);
    return acc;
  }

  double evaluate_double(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_double(*it);
    return acc;
  }

  /// p(x) -> p(-x).
  Polynomial reflect() const {
    auto v = coeffs_;
    for (std::size_t k = 1; k < v.size(); k += 2) v[k] = -v[k];
    return Polynomial(std::move(v));
  }

  /// x^shift * p(x^power).
  Polynomial compose_power(std::size_t power, std::size_t shift = 0) const {
    if (is_zero()) return {};
    std::vector<T> v(shift + (coeffs_.size() - 1) * power + 1, T(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k) v[shift + k * power] = coeffs_[k];
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    normalize();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), T(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    normalize();
    return *this;
  }

  Polynomial& operator*=(const T& c) {
    for (auto& a : coeffs_) a *= c;
    normalize();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const T& c) { return a *= c; }
  friend Polynomial operator*(const T& c, Polynomial a) { return a *= c; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<T> v(a.coeffs_.size() + b.coeffs_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(v));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  std::string to_string(const char* var = "x") const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
      const T& c = coeffs_[k];
      if (c == 0) continue;
      std::string cs = c.get_str(10);
      bool neg = cs.front() == '-';
      if (neg) cs.erase(0, 1);
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (k == 0 || cs != "1") out += cs;
      if (k >= 1) out += var;
      if (k >= 2) out += "^" + std::to_string(k);
    }
    return out;
  }

 private:
  static double to_double(const T& c) { return c.get_d(); }

  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<T> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

inline RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) v.emplace_back(c);
  return RatPolynomial(std::move(v));
}

/// Integer view of a rational polynomial; false if any coefficient is fractional.
inline bool to_integer(const RatPolynomial& p, IntPolynomial& out) {
  std::vector<BigInt> v;
  v.reserve(p.coefficients().size());
  for (const auto& c : p.coefficients()) {
    if (!is_integer(c)) return false;
    v.emplace_back(c.get_num());
  }
  out = IntPolynomial(std::move(v));
  return true;
}

}  // namespace dimers
