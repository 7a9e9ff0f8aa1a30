#pragma once

// Reduced subgraphs of reflection-symmetric graphs, the half-weighted cut
// graph G' with M(G) = 2^w M(G'), and the grid identities derived from it.

#include <cstddef>
#include <vector>

#include "dimers/graph.hpp"
#include "dimers/oracle.hpp"

namespace dimers {

enum class Cut { Above, Below };

/// One cut per addressed axis vertex.
using CutPlan = std::vector<Cut>;

/// Cuts at a_1..a_w only (axis positions 0, 2, 4, ...).
WeightedMultigraph reduced_subgraph(const SymmetricGraph& sg, const CutPlan& plan);

/// Cuts at every axis vertex a_1, b_1, ..., a_w, b_w in axis order.
WeightedMultigraph doubly_reduced_subgraph(const SymmetricGraph& sg, const CutPlan& plan);

/// Colors (0 = white, 1 = black) of a proper 2-coloring of the subgraph
/// induced by `vertices`, BFS from the first listed vertex of each
/// component; entries for other vertices are -1. Empty when not bipartite.
std::vector<int> two_coloring(const WeightedMultigraph& g, const std::vector<std::size_t>& vertices);

bool is_bipartite(const WeightedMultigraph& g);

struct GPrime {
  WeightedMultigraph graph;
  CutPlan cuts;                   ///< per axis vertex, in axis order
  std::vector<int> axis_colors;   ///< coloring of the axis vertices in G_>=
};

/// Colors the on-or-above subgraph with a_1 white, cuts above white a_i and
/// black b_i and below black a_i and white b_i, then halves every edge that
/// lies on the axis. Throws NotTwoColorable if G_>= is not bipartite.
GPrime build_g_prime_detailed(const SymmetricGraph& sg);
WeightedMultigraph build_g_prime(const SymmetricGraph& sg);

struct FactorizationReport {
  Rational m_g;
  std::size_t w = 0;
  Rational m_gprime;
  bool holds = false;
};

FactorizationReport verify_factorization(const SymmetricGraph& sg, std::size_t vertex_limit = kOracleVertexLimit);

struct ReducedSweep {
  std::vector<Rational> counts;  ///< indexed by plan bitmask, bit i set = cut below a_{i+1}
  bool all_equal = false;
};

/// Matching counts of all 2^w reduced subgraphs.
ReducedSweep reduced_subgraph_sweep(const SymmetricGraph& sg, std::size_t vertex_limit = kOracleVertexLimit);

struct BipartiteSweep {
  std::size_t total = 0;
  std::size_t bipartite = 0;
  std::vector<std::size_t> failing_plans;  ///< bitmasks over axis order, bit set = cut below
};

/// Bipartiteness of all 2^(2w) doubly reduced subgraphs.
BipartiteSweep doubly_reduced_bipartite_sweep(const SymmetricGraph& sg);

struct ChainReport {
  std::size_t m = 0, n = 0;
  Rational cylinder;      ///< M(C_{2m+1,2n})
  Rational half_grid;     ///< M(R'_{2m+1,2n}), last row halved
  Rational g_prime;       ///< M(G') for the annulus-embedded cylinder
  Rational small_grid;    ///< M(R_{2m,2n})
  Rational large_grid;    ///< M(R_{4m+1,2n})
  bool cylinder_factorization = false;  ///< M(C) = 2^n M(R')
  bool grid_factorization = false;      ///< M(R_{4m+1,2n}) = 2^n M(R_{2m,2n}) M(R')
  bool ratio = false;                   ///< M(C) = M(R_{4m+1,2n}) / M(R_{2m,2n})
  bool holds() const { return cylinder_factorization && grid_factorization && ratio; }
};

/// Exact check of the cylinder/grid factorization chain for C_{2m+1,2n}.
ChainReport grid_chain_check(std::size_t m, std::size_t n, std::size_t column_limit = kProfileColumnLimit);

}  // namespace dimers
