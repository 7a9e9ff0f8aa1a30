#pragma once

// Strands, fabric graphs and the concrete graph families (honeycomb and
// square cylinders, rectangular grids), plus their realization as explicit
// weighted multigraphs for the matching oracles.
//
// Terminology follows the dimer literature this library implements: the
// "girth" of a square cylinder C_{m,n} is m, the length of the cycle around
// the cylinder, not the graph-theoretic girth.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dimers/matrix.hpp"
#include "dimers/polynomial.hpp"

namespace dimers {

/// Edge weight c * x^k: a rational coefficient times a power of the formal
/// marker x. Numeric weights have x_power == 0.
struct Weight {
  Rational coeff{1};
  unsigned x_power = 0;

  static Weight formal() { return Weight{Rational(1), 1}; }
  bool is_numeric() const { return x_power == 0; }
  friend bool operator==(const Weight&, const Weight&) = default;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Weight weight;
};

/// Vertex/edge-list graph. Parallel edges are distinct edges; self-loops are
/// rejected. Vertices are 0-based.
class WeightedMultigraph {
 public:
  WeightedMultigraph() = default;
  explicit WeightedMultigraph(std::size_t vertex_count) : vertex_count_(vertex_count) {}

  void add_edge(std::size_t u, std::size_t v, Weight w = {});

  std::size_t vertex_count() const { return vertex_count_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::vector<Edge>& mutable_edges() { return edges_; }

  /// Optional column decomposition used by the profile counter; each vertex
  /// in exactly one column and every edge inside a column or between
  /// consecutive columns.
  const std::vector<std::vector<std::size_t>>& columns() const { return columns_; }
  void set_columns(std::vector<std::vector<std::size_t>> columns) { columns_ = std::move(columns); }

  bool has_formal_weights() const;

  std::string kind = "graph";
  std::map<std::string, std::string> meta;

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> columns_;
};

/// Strand edge with 1-based indices: bottom vertices are rows of the
/// bi-adjacency matrix, top vertices its columns, both left to right.
struct StrandEdge {
  std::size_t bottom = 1;
  std::size_t top = 1;
  Rational weight{1};
};

/// A bipartite path with pending edges, characterised by monotone support:
/// for edges (i, j) and (i', j') with i < i' we have j <= j'.
class Strand {
 public:
  std::size_t bottom_count() const { return bottom_count_; }
  std::size_t top_count() const { return top_count_; }
  const std::vector<StrandEdge>& edges() const { return edges_; }

  /// Rows = bottom vertices, columns = top vertices.
  Matrix biadjacency() const;

  /// Strand whose bi-adjacency matrix is the transpose of this one.
  Strand transposed() const;

 private:
  friend Strand build_strand(std::size_t, std::size_t, std::vector<StrandEdge>);
  std::size_t bottom_count_ = 0;
  std::size_t top_count_ = 0;
  std::vector<StrandEdge> edges_;
};

Strand build_strand(std::size_t bottom_count, std::size_t top_count, std::vector<StrandEdge> edges);

/// Strand from the support and values of a bi-adjacency matrix.
Strand strand_from_matrix(const Matrix& biadjacency);

/// nullopt is the formal marker x.
using VerticalWeight = std::optional<Rational>;

enum class FabricKind { Rectangular, Cylindrical };

/// Strands S_1 (bottom) .. S_m joined by vertical edges: top vertex j of S_i
/// to bottom vertex j of S_{i+1}, and for cylinders S_m back to S_1.
class FabricGraph {
 public:
  FabricGraph(FabricKind kind, std::vector<Strand> strands, std::vector<VerticalWeight> vertical_weights = {});

  FabricKind kind() const { return kind_; }
  const std::vector<Strand>& strands() const { return strands_; }
  std::size_t strand_count() const { return strands_.size(); }

  /// x_1..x_m for cylinders (x_i on edges S_i -> S_{i+1}); m-1 ones for
  /// rectangular fabrics.
  const std::vector<VerticalWeight>& vertical_weights() const { return vertical_weights_; }

  /// l_0..l_m: l_0 = k_1 and l_i = top_count(S_i).
  std::vector<std::size_t> level_sizes() const;

  bool balanced() const;

  std::size_t vertex_count() const;

  /// Strands and weights rotated so that S_{shift+1} becomes the bottom strand.
  FabricGraph rotated(std::size_t shift) const;

 private:
  FabricKind kind_;
  std::vector<Strand> strands_;
  std::vector<VerticalWeight> vertical_weights_;
};

/// H_{m,n}: m path strands with n vertices each, m even. Vertical weights
/// formal.
FabricGraph honeycomb_cylinder(std::size_t m, std::size_t n);

/// n x n truncation of the infinite support pattern with rows
/// {1,2},{2},{2,3,4},{4},{4,5,6},{6},...; all entries 1.
Matrix square_strand_matrix(std::size_t n);

/// Fabric graph with the matching count of C_{m,n}: strands alternate the
/// square strand matrix and its transpose; vertical weights 1. m even.
FabricGraph square_cylinder_fabric(std::size_t m, std::size_t n);

/// C_{m,n} = C_m x P_n: n copies of an m-cycle, corresponding vertices of
/// consecutive copies joined. Vertex (i, j), i around the cycle and j along
/// the path, has index j*m + i. For m = 2 the cycle is a doubled edge.
/// Columns are the cycle copies.
WeightedMultigraph square_cylinder_graph(std::size_t m, std::size_t n);

/// R_{m,n}: m rows of n vertices, vertex (r, c) at index r*n + c, columns of
/// height m. With half_top the n-1 edges of the last row (r = m-1) weigh 1/2.
WeightedMultigraph rect_grid(std::size_t m, std::size_t n, bool half_top = false);

/// Explicit realization of a fabric. Vertices are numbered bottom to top by
/// strand, and within a strand bottom vertices then top vertices, each left
/// to right. Formal x_i become Weight::formal().
WeightedMultigraph fabric_to_multigraph(const FabricGraph& f, const std::vector<VerticalWeight>& x_assignment);
WeightedMultigraph fabric_to_multigraph(const FabricGraph& f);

enum class Side { Above, Below, Axis };

/// Graph with a reflection: an involution, the ordered axis vertices
/// a_1, b_1, ..., a_w, b_w (its fixed points) and an above/below side for
/// every other vertex.
struct SymmetricGraph {
  WeightedMultigraph graph;
  std::vector<std::size_t> involution;
  std::vector<std::size_t> axis;
  std::vector<Side> side;

  std::size_t width() const { return axis.size() / 2; }
};

/// Checks the involution, side and axis invariants and weight preservation;
/// throws InvalidArgument on violation.
void validate(const SymmetricGraph& sg);

/// C_{m,n} (m odd, n even) with the reflection (i, j) -> (-i mod m, j) that
/// fixes vertex (0, j) of every cycle. Axis order follows j, so w = n/2.
SymmetricGraph symmetric_cylinder(std::size_t m, std::size_t n);

/// Even cycle of the given length reflected through vertices 0 and length/2
/// (w = 1). Its axis vertices are non-adjacent.
SymmetricGraph symmetric_even_cycle(std::size_t length);

}  // namespace dimers
