#include <doctest.h>

#include <set>

#include "dimers/cylindric.hpp"
#include "dimers/engine.hpp"
#include "helpers.hpp"

using namespace dimers;

TEST_CASE("filling predicate") {
  // m = 2, s = 2: row 0 sits one column right of row 1.
  CHECK(is_cylindric_filling({{1, 0}, {1, 1}}, 2, 2, 1));
  CHECK_FALSE(is_cylindric_filling({{1, 1}, {0, 0}}, 2, 2, 1));  // wrap: f[1][0] >= f[0][1] fails
  CHECK_FALSE(is_cylindric_filling({{0, 1}, {1, 1}}, 2, 2, 1));  // row not decreasing
  CHECK_FALSE(is_cylindric_filling({{0, 0}, {1, 1}}, 2, 2, 1));  // column: f[0][0] >= f[1][1]
  CHECK_FALSE(is_cylindric_filling({{2, 0}, {2, 0}}, 2, 2, 1));  // bound
  CHECK_FALSE(is_cylindric_filling({{0}}, 2, 1, 1));             // shape
}

TEST_CASE("enumeration") {
  CHECK(enumerate_cylindric(1, 1, 1) == 2);
  CHECK(enumerate_cylindric(2, 2, 1) == 7);
  CHECK(enumerate_cylindric(3, 4, 3) == 6212);
  CHECK(enumerate_cylindric(2, 0, 5) == 1);
  CHECK(enumerate_cylindric(3, 2, 0) == 1);
  // m = 1 is a single weakly decreasing row with entries <= n: C(n + s, s).
  CHECK(enumerate_cylindric(1, 3, 4) == 35);
  CHECK_ERROR_CODE(enumerate_cylindric(0, 1, 1), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(enumerate_cylindric(5, 5, 1), ErrorCode::TooLarge);
}

TEST_CASE("every visited filling is valid and distinct") {
  std::set<CylindricFilling> seen;
  const BigInt count = enumerate_cylindric(3, 3, 2, [&](const CylindricFilling& f) {
    CHECK(is_cylindric_filling(f, 3, 3, 2));
    seen.insert(f);
  });
  CHECK(BigInt(seen.size()) == count);
  // Brute force over all 3^9 fillings.
  std::size_t brute = 0;
  CylindricFilling f(3, std::vector<unsigned>(3));
  for (int code = 0; code < 19683; ++code) {
    int c = code;
    for (auto& row : f)
      for (auto& v : row) {
        v = static_cast<unsigned>(c % 3);
        c /= 3;
      }
    brute += is_cylindric_filling(f, 3, 3, 2);
  }
  CHECK(BigInt(brute) == count);
}

TEST_CASE("cliff counts equal cylindric partitions") {
  CHECK(cliff_count(1, 1, 1).exact == 2);
  for (std::size_t m = 1; m <= 3; ++m)
    for (std::size_t s = 0; s <= 4; ++s)
      for (std::size_t n = 0; n <= 3; ++n) {
        CAPTURE(m);
        CAPTURE(s);
        CAPTURE(n);
        const auto c = cliff_count(m, n, s);
        CHECK(c.exact == enumerate_cylindric(m, s, n));
        CHECK(std::abs(c.formula - c.exact.get_d()) <= 1e-6 * std::max(1.0, c.exact.get_d()));
      }
  CHECK_ERROR_CODE(cliff_count(0, 1, 1), ErrorCode::InvalidArgument);
}

TEST_CASE("matchings with k vertical edges") {
  const FabricGraph h = honeycomb_cylinder(2, 3);
  CHECK(matchings_with_k_verticals(h, 1) == 2);
  CHECK(matchings_with_k_verticals(h, 3) == 1);
  CHECK(matchings_with_k_verticals(h, 2) == 0);
  CHECK(matchings_with_k_verticals(h, 9) == 0);
}
