#include "dimers/closed_forms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "dimers/error.hpp"

namespace dimers {

namespace {

constexpr double kPi = std::numbers::pi;

/// cos(num * pi / den), exactly 0 at odd multiples of pi/2.
double cos_pi_fraction(std::size_t num, std::size_t den) {
  if ((2 * num) % den == 0 && ((2 * num) / den) % 2 == 1) return 0.0;
  return std::cos(static_cast<double>(num) * kPi / static_cast<double>(den));
}

double ipow(double base, std::size_t e) {
  double r = 1.0;
  while (e > 0) {
    if (e & 1U) r *= base;
    base *= base;
    e >>= 1U;
  }
  return r;
}

void require_even_m(std::size_t m) {
  if (m < 2) throw Error(ErrorCode::GirthTooSmall, "need m >= 2, got " + std::to_string(m));
  if (m % 2 != 0) throw Error(ErrorCode::OddGirth, "formula needs even m, got " + std::to_string(m));
}

/// [1 + (c + s)^m][1 + (c - s)^m] with s = sqrt(1 + c^2).
double square_pair(double c, std::size_t m) {
  const double s = std::sqrt(1.0 + c * c);
  return (1.0 + ipow(c + s, m)) * (1.0 + ipow(c - s, m));
}

}  // namespace

FormulaValue FormulaValue::from_double(double v) {
  FormulaValue f;
  f.float_value = v;
  mpz_set_d(f.rounded.get_mpz_t(), std::nearbyint(v));
  const double r = f.rounded.get_d();
  f.relative_gap = std::abs(v - r) / std::max(1.0, std::abs(r));
  return f;
}

double ordered_product(std::vector<double> factors) {
  std::sort(factors.begin(), factors.end(), [](double a, double b) { return std::abs(a) < std::abs(b); });
  double p = 1.0;
  for (double f : factors) p *= f;
  return p;
}

FormulaValue tfk(std::size_t m, std::size_t n) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "tfk needs m, n >= 1");
  std::vector<double> factors;
  for (std::size_t j = 1; j <= (m + 1) / 2; ++j)
    for (std::size_t k = 1; k <= (n + 1) / 2; ++k) {
      const double a = cos_pi_fraction(j, m + 1);
      const double b = cos_pi_fraction(k, n + 1);
      factors.push_back(4.0 * a * a + 4.0 * b * b);
    }
  return FormulaValue::from_double(ordered_product(std::move(factors)));
}

FormulaValue honeycomb_formula(std::size_t m, std::size_t n, const std::vector<double>& x) {
  require_even_m(m);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "honeycomb formula needs n >= 1");
  if (x.size() != m) throw Error(ErrorCode::SizeMismatch, "need one vertical weight per level");
  double big_x = 1.0;
  for (double xi : x) big_x *= xi;
  std::vector<double> factors;
  for (std::size_t k = 1; k <= n / 2; ++k) factors.push_back(big_x + ipow(2.0 + 2.0 * cos_pi_fraction(2 * k, n + 1), m / 2));
  if (n % 2 == 1)
    for (std::size_t i = 0; i < m; i += 2) factors.push_back(x[i]);
  return FormulaValue::from_double(ordered_product(std::move(factors)));
}

FormulaValue honeycomb_formula(std::size_t m, std::size_t n, double x) {
  return honeycomb_formula(m, n, std::vector<double>(m, x));
}

double honeycomb_sqrt_form(std::size_t m, std::size_t n, double x) {
  require_even_m(m);
  const double big_x = ipow(x, m);
  std::vector<double> factors;
  for (std::size_t k = 1; k <= n; ++k) factors.push_back(big_x + ipow(2.0 + 2.0 * cos_pi_fraction(2 * k, n + 1), m / 2));
  return std::sqrt(ordered_product(std::move(factors)));
}

FormulaValue square_even_formula(std::size_t m, std::size_t n) {
  require_even_m(m);
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "square formula needs n >= 1");
  std::vector<double> factors;
  for (std::size_t k = 1; k <= n / 2; ++k) factors.push_back(square_pair(cos_pi_fraction(k, n + 1), m));
  if (n % 2 == 1) factors.push_back(2.0);
  return FormulaValue::from_double(ordered_product(std::move(factors)));
}

double square_even_sqrt_form(std::size_t m, std::size_t n) {
  require_even_m(m);
  std::vector<double> factors;
  for (std::size_t k = 1; k <= n; ++k) factors.push_back(square_pair(cos_pi_fraction(k, n + 1), m));
  return std::sqrt(ordered_product(std::move(factors)));
}

FormulaValue square_unified_formula(std::size_t m, std::size_t n) {
  if (m < 2) throw Error(ErrorCode::GirthTooSmall, "need m >= 2, got " + std::to_string(m));
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "square formula needs n >= 1");
  double log_sum = 0.0;
  int negatives = 0;
  for (std::size_t k = 1; k <= n; ++k) {
    const double c = cos_pi_fraction(k, n + 1);
    const double s = std::sqrt(1.0 + c * c);
    for (double base : {c + s, c - s, -c + s, -c - s}) {
      const double f = 1.0 + ipow(base, m);
      if (f == 0.0) return FormulaValue::from_double(0.0);
      if (f < 0.0) ++negatives;
      log_sum += std::log(std::abs(f));
    }
  }
  if (negatives % 2 != 0) throw Error(ErrorCode::NegativeRadicand, "fourth root of a negative product");
  return FormulaValue::from_double(std::exp(0.25 * log_sum));
}

FormulaValue square_odd_formula(std::size_t half_m, std::size_t half_n) {
  if (half_m < 1 || half_n < 1) throw Error(ErrorCode::InvalidArgument, "C_{2m+1,2n} needs m, n >= 1");
  std::vector<double> factors;
  for (std::size_t k = 1; k <= half_n; ++k) {
    const double b = cos_pi_fraction(k, 2 * half_n + 1);
    for (std::size_t j = 1; j <= 2 * half_m + 1; j += 2) {
      const double a = cos_pi_fraction(j, 4 * half_m + 2);
      factors.push_back(4.0 * a * a + 4.0 * b * b);
    }
  }
  return FormulaValue::from_double(ordered_product(std::move(factors)));
}

std::vector<double> path_eigenvalues(std::size_t n) {
  std::vector<double> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(2.0 * cos_pi_fraction(k, n + 1));
  return out;
}

std::vector<double> wilted_path_eigenvalues(std::size_t n) {
  std::vector<double> out;
  for (std::size_t k = 1; k <= n; ++k) out.push_back(2.0 * cos_pi_fraction(2 * k, 2 * n + 1));
  return out;
}

std::vector<double> strand_gram_eigenvalues(std::size_t n) {
  std::vector<double> out;
  const std::size_t half = (n + 1) / 2;
  for (std::size_t k = 1; k <= half; ++k) {
    const double c = cos_pi_fraction(k, n + 1);
    const double s = std::sqrt(1.0 + c * c);
    out.push_back((c + s) * (c + s));
    if (n % 2 == 1 && k == half) continue;  // both signs give 1 here
    out.push_back((c - s) * (c - s));
  }
  return out;
}

IntPolynomial chebyshev_T(std::size_t n) {
  IntPolynomial prev{1};
  if (n == 0) return prev;
  IntPolynomial cur{0, 1};
  const IntPolynomial two_x{0, 2};
  for (std::size_t k = 1; k < n; ++k) {
    IntPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPolynomial chebyshev_U(std::size_t n) {
  IntPolynomial prev{1};
  if (n == 0) return prev;
  IntPolynomial cur{0, 2};
  const IntPolynomial two_x{0, 2};
  for (std::size_t k = 1; k < n; ++k) {
    IntPolynomial next = two_x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

double chebyshev_T_closed_form(std::size_t n, double x) {
  const double r = std::sqrt(x * x - 1.0);
  return 0.5 * (ipow(x + r, n) + ipow(x - r, n));
}

IdentitySides odd_cosine_both_sides(double z, std::size_t m) {
  IdentitySides sides;
  std::vector<double> factors;
  for (std::size_t k = 1; k <= 2 * m + 1; k += 2) {
    const double c = cos_pi_fraction(k, 4 * m + 2);
    factors.push_back(4.0 * z * z + 4.0 * c * c);
  }
  sides.left = ordered_product(std::move(factors));
  const double root = std::sqrt(1.0 + z * z);
  const double pa = ipow(z + root, 4 * m + 2);
  const double pb = ipow(z - root, 4 * m + 2);
  double radicand = -(1.0 - pa) * (1.0 - pb);
  if (radicand < 0.0) {
    if (radicand < -1e-9 * (1.0 + std::abs(pa))) throw Error(ErrorCode::NegativeRadicand, "negative radicand");
    radicand = 0.0;
  }
  sides.right = 2.0 * z * std::sqrt(radicand);
  return sides;
}

double cosine_product(std::size_t n) {
  std::vector<double> factors;
  for (std::size_t k = 1; k <= n; ++k) factors.push_back(2.0 * cos_pi_fraction(k, 2 * n + 1));
  return ordered_product(std::move(factors));
}

double cliff_formula(std::size_t m, std::size_t n, std::size_t s) {
  const std::size_t terms = n + s / 2;
  // Coefficients of prod (x + a_k), ascending.
  std::vector<double> poly{1.0};
  for (std::size_t k = 1; k <= terms; ++k) {
    const double a = ipow(2.0 + 2.0 * cos_pi_fraction(2 * k, 2 * n + s + 1), m);
    std::vector<double> next(poly.size() + 1, 0.0);
    for (std::size_t i = 0; i < poly.size(); ++i) {
      next[i] += a * poly[i];
      next[i + 1] += poly[i];
    }
    poly = std::move(next);
  }
  return s / 2 < poly.size() ? poly[s / 2] : 0.0;
}

}  // namespace dimers
