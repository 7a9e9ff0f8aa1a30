#include <doctest.h>

#include "dimers/engine.hpp"
#include "dimers/oracle.hpp"
#include "dimers/verify.hpp"
#include "helpers.hpp"

using namespace dimers;

TEST_CASE("honeycomb matching polynomials") {
  CHECK(match_polynomial(honeycomb_cylinder(2, 2)) == RatPolynomial{1, 0, 1});
  CHECK(match_polynomial(honeycomb_cylinder(2, 3)) == RatPolynomial{0, 2, 0, 1});
  for (auto [m, n] : std::vector<std::pair<std::size_t, std::size_t>>{{2, 2}, {2, 3}, {4, 2}, {4, 3}, {2, 6}, {6, 3}}) {
    const FabricGraph h = honeycomb_cylinder(m, n);
    CHECK(match_polynomial(h) == count_matchings(fabric_to_multigraph(h)));
  }
}

TEST_CASE("per-level vertical weights") {
  // H_{2,3}: 2 x_1 + x_1^2 x_2.
  const FabricGraph h = honeycomb_cylinder(2, 3);
  CHECK(count_cyl(h, {Rational(3), Rational(5)}) == 2 * 3 + 9 * 5);
  CHECK(count_cyl(h, {Rational(1, 2), Rational(-1)}) == Rational(3, 4));
  CHECK(count_cyl(h, {Rational(0), Rational(7)}) == 0);
}

TEST_CASE("square cylinder fabric reproduces the cylinder counts") {
  const std::vector<std::vector<long>> even_rows = {{2, 5, 12, 29, 70, 169}, {2, 9, 32, 121, 450, 1681}};
  for (std::size_t m : {2, 4})
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto r = count_cyl_detailed(square_cylinder_fabric(m, n), std::vector<Rational>(m, Rational(1)));
      CHECK(std::get<Rational>(r.value) == even_rows[m / 2 - 1][n - 1]);
      CHECK(r.method == EngineMethod::CylDet);
      CHECK(r.product_dims.back() == std::make_pair(n, n));
    }
  CHECK(count_cyl(square_cylinder_fabric(6, 4), std::vector<Rational>(6, Rational(1))) == 725);
}

TEST_CASE("rectangular fabrics") {
  const Strand a = strand_from_matrix(Matrix{{1, 1}, {0, 2}});
  const FabricGraph one(FabricKind::Rectangular, {a});
  CHECK(count_rect(one) == 2);
  const Strand wide = strand_from_matrix(Matrix{{1, 1, 0}, {0, 1, 1}});
  const FabricGraph two(FabricKind::Rectangular, {wide, wide.transposed()});
  CHECK(count_rect(two) == count_matchings_value(fabric_to_multigraph(two)));
  CHECK_ERROR_CODE(count_rect(FabricGraph(FabricKind::Rectangular, {wide})), ErrorCode::Unbalanced);
  CHECK_ERROR_CODE(count_rect(FabricGraph(FabricKind::Cylindrical, {a})), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(count_cyl(one, {}), ErrorCode::InvalidArgument);
}

TEST_CASE("negative prefactor exponents") {
  // Levels 1 -> 2 -> 1: l_1 - l_2 = 1, and rotating gives -1.
  const Strand up = strand_from_matrix(Matrix{{1, 1}});
  const FabricGraph f(FabricKind::Cylindrical, {up, up.transposed()});
  const FabricGraph g = f.rotated(1);
  CHECK(g.level_sizes() == std::vector<std::size_t>{2, 1, 2});
  const std::vector<Rational> x{Rational(2), Rational(3)};
  CHECK(count_cyl(f, x) == count_cyl(g, {x[1], x[0]}));
  CHECK(count_cyl(g, {Rational(3), Rational(2)}) ==
        count_matchings_value(fabric_to_multigraph(g, {Rational(3), Rational(2)})));
  CHECK_ERROR_CODE(count_cyl(g, {Rational(0), Rational(2)}), ErrorCode::ZeroToNegativePower);
  CHECK(match_polynomial(g) == match_polynomial(f));
  CHECK_ERROR_CODE(count_cyl(f, {Rational(1)}), ErrorCode::SizeMismatch);
}

TEST_CASE("property: engine equals the exhaustive oracle on random fabrics") {
  auto rng = test_rng(30);
  for (int trial = 0; trial < 150; ++trial) {
    const auto kind = trial % 2 ? FabricKind::Cylindrical : FabricKind::Rectangular;
    const FabricGraph f = random_fabric(rng, kind, 4, 3);
    if (kind == FabricKind::Rectangular) {
      CHECK(count_rect(f) == count_matchings_value(fabric_to_multigraph(f)));
      continue;
    }
    std::vector<Rational> x;
    for (std::size_t i = 0; i < f.strand_count(); ++i) x.push_back(make_rational(static_cast<long>(1 + rng() % 3), static_cast<long>(1 + rng() % 2)));
    const Rational engine = count_cyl(f, x);
    CHECK(engine == count_matchings_value(fabric_to_multigraph(f, std::vector<VerticalWeight>(x.begin(), x.end()))));
    CHECK(match_polynomial(f) == count_matchings(fabric_to_multigraph(f)));
  }
}

TEST_CASE("property: cyclic shift invariance") {
  auto rng = test_rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const FabricGraph f = random_fabric(rng, FabricKind::Cylindrical, 4, 4);
    const std::size_t m = f.strand_count();
    std::vector<Rational> x;
    for (std::size_t i = 0; i < m; ++i) x.push_back(make_rational(static_cast<long>(1 + rng() % 4), static_cast<long>(1 + rng() % 3)));
    const Rational base = count_cyl(f, x);
    for (std::size_t shift = 1; shift < m; ++shift) {
      std::vector<Rational> xs;
      for (std::size_t i = 0; i < m; ++i) xs.push_back(x[(i + shift) % m]);
      CHECK(count_cyl(f.rotated(shift), xs) == base);
      CHECK(match_polynomial(f.rotated(shift)) == match_polynomial(f));
    }
  }
}

TEST_CASE("property: polynomial evaluated at x matches the numeric engine") {
  auto rng = test_rng(32);
  for (int trial = 0; trial < 40; ++trial) {
    const FabricGraph f = random_fabric(rng, FabricKind::Cylindrical, 4, 4);
    const Rational x = make_rational(static_cast<long>(1 + rng() % 5), 2);
    CHECK(match_polynomial(f).evaluate(x) == count_cyl(f, std::vector<Rational>(f.strand_count(), x)));
  }
}

TEST_CASE("shifted determinant polynomial") {
  const Matrix p{{1, 2}, {3, 4}};
  const RatPolynomial q = shifted_determinant_polynomial(p);
  for (int t = -3; t <= 3; ++t) CHECK(q.evaluate(Rational(t)) == det_exact(p.plus_identity(t)));
  CHECK(shifted_determinant_polynomial(Matrix(0, 0)) == RatPolynomial{1});
}
