#include <doctest.h>

#include "dimers/factorization.hpp"
#include "dimers/oracle.hpp"
#include "helpers.hpp"

using namespace dimers;

TEST_CASE("G' of the 3x4 symmetric cylinder") {
  const SymmetricGraph sg = symmetric_cylinder(3, 4);
  const GPrime gp = build_g_prime_detailed(sg);
  CHECK(gp.cuts == CutPlan(4, Cut::Above));
  CHECK(gp.axis_colors == std::vector<int>{0, 1, 0, 1});
  CHECK(count_matchings_value(gp.graph) == Rational(19, 4));
  CHECK(count_matchings_value(sg.graph) == 19);
  std::size_t halves = 0;
  for (const auto& e : gp.graph.edges()) halves += e.weight.coeff == Rational(1, 2);
  CHECK(halves == 3);
  // G' keeps the column structure, so the transfer counter applies.
  CHECK(count_matchings_profile(gp.graph) == Rational(19, 4));
}

TEST_CASE("factorization M(G) = 2^w M(G') on symmetric cylinders and cycles") {
  for (std::size_t m : {3, 5})
    for (std::size_t n : {2, 4}) {
      CAPTURE(m);
      CAPTURE(n);
      const auto r = verify_factorization(symmetric_cylinder(m, n));
      CHECK(r.w == n / 2);
      CHECK(r.holds);
    }
  const auto cycle = verify_factorization(symmetric_even_cycle(8));
  CHECK(cycle.m_g == 2);
  CHECK(cycle.m_gprime == 1);
  CHECK(cycle.holds);
}

TEST_CASE("all reduced subgraphs have the same count") {
  for (std::size_t m : {3, 5})
    for (std::size_t n : {2, 4}) {
      const auto sweep = reduced_subgraph_sweep(symmetric_cylinder(m, n));
      CHECK(sweep.counts.size() == (std::size_t{1} << (n / 2)));
      CHECK(sweep.all_equal);
    }
  CHECK(reduced_subgraph_sweep(symmetric_even_cycle(6)).all_equal);
}

TEST_CASE("doubly reduced subgraphs") {
  // With non-adjacent axis vertices every doubly reduced subgraph is bipartite.
  for (std::size_t len : {4, 6, 8, 10}) {
    const auto sweep = doubly_reduced_bipartite_sweep(symmetric_even_cycle(len));
    CHECK(sweep.total == 4);
    CHECK(sweep.bipartite == 4);
  }
  // On the cylinder consecutive axis vertices (0, j) and (0, j + 1) are
  // adjacent. Cutting (0, 0) below and (0, 1) above keeps the 5-cycle
  // (1,0) (0,0) (0,1) (2,1) (1,1), so that doubly reduced subgraph is not
  // bipartite.
  const SymmetricGraph sg = symmetric_cylinder(3, 2);
  const WeightedMultigraph g = doubly_reduced_subgraph(sg, {Cut::Below, Cut::Above});
  CHECK_FALSE(is_bipartite(g));
  const auto sweep = doubly_reduced_bipartite_sweep(sg);
  CHECK(sweep.total == 4);
  CHECK(sweep.bipartite < sweep.total);
  // The plans used for G' (a_i and b_i cut on opposite colours) stay bipartite.
  CHECK(is_bipartite(doubly_reduced_subgraph(sg, build_g_prime_detailed(sg).cuts)));
}

TEST_CASE("the two colour-class plans give equal counts") {
  for (std::size_t m : {3, 5})
    for (std::size_t n : {2, 4}) {
      const SymmetricGraph sg = symmetric_cylinder(m, n);
      CutPlan alternating(sg.axis.size()), flipped(sg.axis.size());
      for (std::size_t i = 0; i < sg.axis.size(); ++i) {
        alternating[i] = i % 2 == 0 ? Cut::Above : Cut::Below;
        flipped[i] = i % 2 == 0 ? Cut::Below : Cut::Above;
      }
      CHECK(count_matchings_value(doubly_reduced_subgraph(sg, alternating)) ==
            count_matchings_value(doubly_reduced_subgraph(sg, flipped)));
    }
}

TEST_CASE("plan validation and bipartiteness helpers") {
  const SymmetricGraph sg = symmetric_cylinder(3, 4);
  CHECK_ERROR_CODE(reduced_subgraph(sg, {Cut::Above}), ErrorCode::PlanLengthMismatch);
  CHECK_ERROR_CODE(doubly_reduced_subgraph(sg, {Cut::Above, Cut::Below}), ErrorCode::PlanLengthMismatch);
  CHECK_FALSE(is_bipartite(sg.graph));
  CHECK(is_bipartite(square_cylinder_graph(4, 3)));
  CHECK(two_coloring(sg.graph, {0, 1, 2}).empty());
  const auto colors = two_coloring(rect_grid(2, 2), {0, 1, 3});
  CHECK(colors[0] == 0);
  CHECK(colors[1] == 1);
  CHECK(colors[2] == -1);
  CHECK(colors[3] == 0);
}

TEST_CASE("grid chain") {
  const ChainReport a = grid_chain_check(1, 1);
  CHECK(a.cylinder == 4);
  CHECK(a.half_grid == 2);
  CHECK(a.small_grid == 2);
  CHECK(a.large_grid == 8);
  CHECK(a.holds());
  const ChainReport b = grid_chain_check(1, 2);
  CHECK(b.cylinder == 19);
  CHECK(b.half_grid == Rational(19, 4));
  CHECK(b.g_prime == Rational(19, 4));
  CHECK(b.small_grid == 5);
  CHECK(b.large_grid == 95);
  CHECK(b.holds());
  const ChainReport c = grid_chain_check(2, 1);
  CHECK(c.cylinder == 11);
  CHECK(c.half_grid == Rational(11, 2));
  CHECK(c.small_grid == 5);
  CHECK(c.large_grid == 55);
  CHECK(c.holds());
  // The printed denominator R_{2m+1,2n} does not give the cylinder count.
  CHECK(b.large_grid / count_matchings_profile(rect_grid(3, 4)) != b.cylinder);
  CHECK_ERROR_CODE(grid_chain_check(0, 1), ErrorCode::InvalidArgument);
  CHECK_ERROR_CODE(grid_chain_check(5, 1), ErrorCode::TooLarge);
}
