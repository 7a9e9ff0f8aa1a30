#include <doctest.h>

#include "dimers/graph.hpp"
#include "dimers/oracle.hpp"
#include "dimers/verify.hpp"
#include "helpers.hpp"

using namespace dimers;

TEST_CASE("small graphs") {
  WeightedMultigraph empty(0);
  CHECK(count_matchings_value(empty) == 1);
  WeightedMultigraph odd(3);
  odd.add_edge(0, 1);
  odd.add_edge(1, 2);
  CHECK(count_matchings_value(odd) == 0);
  WeightedMultigraph c4(4);
  for (std::size_t v = 0; v < 4; ++v) c4.add_edge(v, (v + 1) % 4);
  CHECK(count_matchings_value(c4) == 2);
  WeightedMultigraph k4(4);
  for (std::size_t u = 0; u < 4; ++u)
    for (std::size_t v = u + 1; v < 4; ++v) k4.add_edge(u, v);
  CHECK(count_matchings_value(k4) == 3);
  WeightedMultigraph isolated(4);
  isolated.add_edge(0, 1);
  CHECK(count_matchings_value(isolated) == 0);
}

TEST_CASE("pinned square cylinder and grid counts") {
  CHECK(count_matchings_value(square_cylinder_graph(2, 4)) == 29);
  CHECK(count_matchings_value(square_cylinder_graph(3, 4)) == 19);
  CHECK(count_matchings_value(square_cylinder_graph(4, 4)) == 121);
  CHECK(count_matchings_value(square_cylinder_graph(3, 3)) == 0);
  CHECK(count_matchings_value(square_cylinder_graph(2, 1)) == 2);
  CHECK(count_matchings_value(square_cylinder_graph(5, 2)) == 11);
  CHECK(count_matchings_value(square_cylinder_graph(3, 2)) == 4);
  CHECK(count_matchings_value(rect_grid(3, 4)) == 11);
  CHECK(count_matchings_value(rect_grid(4, 4)) == 36);
  CHECK(count_matchings_value(rect_grid(3, 4, true)) == Rational(19, 4));
  CHECK(count_matchings_value(rect_grid(5, 2, true)) == Rational(11, 2));
  CHECK(count_matchings_profile(rect_grid(8, 8)) == 12988816);
}

TEST_CASE("square cylinder table by both oracles") {
  const std::vector<std::vector<long>> table = {
      {2, 5, 12, 29, 70, 169}, {0, 4, 0, 19, 0, 91}, {2, 9, 32, 121, 450, 1681}, {0, 11, 0, 176, 0}, {2, 20, 108, 725}};
  for (std::size_t m = 2; m <= 6; ++m)
    for (std::size_t n = 1; n <= table[m - 2].size(); ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const auto g = square_cylinder_graph(m, n);
      CHECK(count_matchings_profile(g) == table[m - 2][n - 1]);
      CHECK(count_matchings_value(g, 30) == table[m - 2][n - 1]);
    }
}

TEST_CASE("formal weights give the matching polynomial") {
  // Two disjoint formal edges plus a numeric square: x^2 + 3.
  WeightedMultigraph g(4);
  g.add_edge(0, 1, Weight::formal());
  g.add_edge(2, 3, Weight::formal());
  g.add_edge(0, 2, Weight{Rational(3), 0});
  g.add_edge(1, 3);
  CHECK(count_matchings(g) == RatPolynomial{3, 0, 1});
  CHECK_ERROR_CODE(count_matchings_value(g), ErrorCode::InvalidArgument);
}

TEST_CASE("limits and column validation") {
  CHECK_ERROR_CODE(count_matchings(square_cylinder_graph(3, 10)), ErrorCode::TooLarge);
  CHECK(count_matchings_value(square_cylinder_graph(3, 10), 30) == count_matchings_profile(square_cylinder_graph(3, 10)));
  WeightedMultigraph no_columns(2);
  no_columns.add_edge(0, 1);
  CHECK_ERROR_CODE(count_matchings_profile(no_columns), ErrorCode::NoColumnStructure);
  WeightedMultigraph skip(3);
  skip.add_edge(0, 2);
  skip.set_columns({{0}, {1}, {2}});
  CHECK_ERROR_CODE(count_matchings_profile(skip), ErrorCode::NoColumnStructure);
  CHECK_ERROR_CODE(count_matchings_profile(rect_grid(21, 2)), ErrorCode::ColumnTooWide);
}

TEST_CASE("property: profile counter agrees with the exhaustive oracle on weighted grids") {
  auto rng = test_rng(20);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t m = 1 + rng() % 4, n = 1 + rng() % 5;
    WeightedMultigraph g = rect_grid(m, n);
    for (auto& e : g.mutable_edges()) e.weight.coeff = make_rational(static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 2));
    CAPTURE(m);
    CAPTURE(n);
    CHECK(count_matchings_profile(g) == count_matchings_value(g));
  }
}

TEST_CASE("property: zero-weight edges count as deleted") {
  auto rng = test_rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    WeightedMultigraph g = square_cylinder_graph(2 + rng() % 3, 1 + rng() % 4);
    const std::size_t victim = rng() % g.edges().size();
    WeightedMultigraph zeroed = g;
    zeroed.mutable_edges()[victim].weight.coeff = 0;
    WeightedMultigraph removed(g.vertex_count());
    for (std::size_t i = 0; i < g.edges().size(); ++i)
      if (i != victim) removed.add_edge(g.edges()[i].u, g.edges()[i].v, g.edges()[i].weight);
    CHECK(count_matchings_value(zeroed) == count_matchings_value(removed));
  }
}

TEST_CASE("property: scaling all weights at a vertex scales the count") {
  auto rng = test_rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    WeightedMultigraph g = rect_grid(2 + rng() % 3, 2 + rng() % 3);
    const std::size_t v = rng() % g.vertex_count();
    const Rational c = make_rational(static_cast<long>(2 + rng() % 3), 3);
    WeightedMultigraph scaled = g;
    for (auto& e : scaled.mutable_edges())
      if (e.u == v || e.v == v) e.weight.coeff *= c;
    CHECK(count_matchings_value(scaled) == c * count_matchings_value(g));
  }
}
