#include <doctest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "dimers/closed_forms.hpp"
#include "helpers.hpp"

using namespace dimers;
using doctest::Approx;

TEST_CASE("TFK double product") {
  CHECK(tfk(3, 4).rounded == 11);
  CHECK(tfk(4, 4).rounded == 36);
  CHECK(tfk(8, 8).rounded == 12988816);
  CHECK(tfk(8, 8).relative_gap < 1e-6);
  CHECK(tfk(3, 3).rounded == 0);
  CHECK(tfk(1, 2).rounded == 1);
  CHECK_ERROR_CODE(tfk(0, 2), ErrorCode::InvalidArgument);
}

TEST_CASE("honeycomb formula") {
  CHECK(honeycomb_formula(2, 2).rounded == 2);
  CHECK(honeycomb_formula(2, 3).rounded == 3);
  CHECK(honeycomb_formula(2, 3, 2.0).float_value == Approx(12.0));
  CHECK(honeycomb_formula(2, 3, std::vector<double>{3.0, 5.0}).float_value == Approx(51.0));
  CHECK_ERROR_CODE(honeycomb_formula(3, 2), ErrorCode::OddGirth);
  CHECK_ERROR_CODE(honeycomb_formula(2, 2, std::vector<double>{1.0}), ErrorCode::SizeMismatch);
  for (std::size_t m = 2; m <= 8; m += 2)
    for (std::size_t n = 1; n <= 15; ++n) {
      const double a = honeycomb_formula(m, n).float_value;
      CHECK(std::abs(a - honeycomb_sqrt_form(m, n)) <= 1e-9 * a);
    }
}

TEST_CASE("square cylinder formulas") {
  CHECK(square_even_formula(2, 4).rounded == 29);
  CHECK(square_even_formula(4, 4).rounded == 121);
  CHECK(square_even_formula(2, 1).rounded == 2);
  CHECK(square_even_formula(4, 1).rounded == 2);
  CHECK(square_even_sqrt_form(2, 1) == Approx(2.0));
  CHECK(square_unified_formula(3, 4).rounded == 19);
  CHECK(square_unified_formula(3, 3).rounded == 0);
  CHECK(square_unified_formula(2, 4).rounded == 29);
  CHECK(square_unified_formula(5, 2).rounded == 11);
  CHECK(square_odd_formula(1, 2).rounded == 19);
  CHECK(square_odd_formula(1, 1).rounded == 4);
  CHECK(square_odd_formula(2, 1).rounded == 11);
  CHECK_ERROR_CODE(square_even_formula(3, 2), ErrorCode::OddGirth);
  CHECK_ERROR_CODE(square_unified_formula(1, 2), ErrorCode::GirthTooSmall);
  CHECK_ERROR_CODE(square_odd_formula(0, 1), ErrorCode::InvalidArgument);
  for (std::size_t m = 1; m <= 2; ++m)
    for (std::size_t n = 1; n <= 3; ++n) {
      CHECK(square_odd_formula(m, n).rounded == square_unified_formula(2 * m + 1, 2 * n).rounded);
      const double lhs = square_odd_formula(m, n).float_value * tfk(2 * m, 2 * n).float_value;
      CHECK(std::abs(lhs - tfk(4 * m + 1, 2 * n).float_value) <= 1e-6 * lhs);
    }
}

TEST_CASE("eigenvalue lists") {
  const auto p = path_eigenvalues(2);
  CHECK(p[0] == Approx(1.0));
  CHECK(p[1] == Approx(-1.0));
  CHECK(wilted_path_eigenvalues(1)[0] == Approx(-1.0));
  REQUIRE(strand_gram_eigenvalues(1).size() == 1);
  CHECK(strand_gram_eigenvalues(1)[0] == Approx(1.0));
  for (std::size_t n = 1; n <= 12; ++n) CHECK(strand_gram_eigenvalues(n).size() == n);
  // Sum of eigenvalues of A A^T is the number of ones in A.
  const auto gram = strand_gram_eigenvalues(4);
  CHECK(std::accumulate(gram.begin(), gram.end(), 0.0) == Approx(7.0));
}

TEST_CASE("Chebyshev polynomials") {
  CHECK(chebyshev_T(2) == IntPolynomial{-1, 0, 2});
  CHECK(chebyshev_T(3) == IntPolynomial{0, -3, 0, 4});
  CHECK(chebyshev_U(2) == IntPolynomial{-1, 0, 4});
  CHECK(chebyshev_T(0) == IntPolynomial{1});
  CHECK(chebyshev_U(1) == IntPolynomial{0, 2});
  for (std::size_t n = 0; n <= 10; ++n)
    for (double x = 1.0; x <= 2.0; x += 0.125) {
      const double t = chebyshev_T(n).evaluate_double(x);
      CHECK(std::abs(t - chebyshev_T_closed_form(n, x)) < 1e-9 * std::max(1.0, std::abs(t)));
    }
  for (std::size_t n = 0; n <= 10; ++n)
    for (int k = 1; k < 32; ++k) {
      const double th = std::numbers::pi * k / 32;
      CHECK(std::abs(chebyshev_U(n).evaluate_double(std::cos(th)) * std::sin(th) - std::sin((n + 1) * th)) < 1e-9);
    }
}

TEST_CASE("odd cosine product identity") {
  auto s = odd_cosine_both_sides(0.0, 3);
  CHECK(s.left == Approx(0.0));
  CHECK(s.right == Approx(0.0));
  s = odd_cosine_both_sides(1.0, 0);
  CHECK(s.left == Approx(4.0));
  CHECK(s.right == Approx(4.0));
  s = odd_cosine_both_sides(std::cos(std::numbers::pi / 5), 1);
  CHECK(std::abs(s.left - s.right) < 1e-9);
  for (std::size_t m = 0; m <= 4; ++m)
    for (double z = 0.1; z <= 2.0; z += 0.1) {
      s = odd_cosine_both_sides(z, m);
      CHECK(std::abs(s.left - s.right) < 1e-9 * std::max(1.0, s.left));
    }
}

TEST_CASE("cosine product and cliff formula") {
  for (std::size_t n = 1; n <= 20; ++n) CHECK(std::abs(cosine_product(n) - 1.0) < 1e-9);
  CHECK(cliff_formula(1, 1, 1) == Approx(2.0));
  CHECK(cliff_formula(1, 0, 0) == Approx(1.0));
  CHECK(ordered_product({1e200, 1e-200, 3.0}) == Approx(3.0));
}
