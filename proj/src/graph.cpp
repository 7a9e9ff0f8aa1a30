#include "dimers/graph.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "dimers/error.hpp"

namespace dimers {

namespace {

std::string dims(std::size_t a, std::size_t b) { return "(" + std::to_string(a) + ", " + std::to_string(b) + ")"; }

void require_even_girth(std::size_t m, const char* family) {
  if (m < 2) throw Error(ErrorCode::GirthTooSmall, std::string(family) + " needs m >= 2, got " + std::to_string(m));
  if (m % 2 != 0)
    throw Error(ErrorCode::OddGirth, std::string(family) + " strands only close up for even m, got " + std::to_string(m));
}

}  // namespace

void WeightedMultigraph::add_edge(std::size_t u, std::size_t v, Weight w) {
  if (u >= vertex_count_ || v >= vertex_count_)
    throw Error(ErrorCode::IndexOutOfRange, "edge " + dims(u, v) + " outside " + std::to_string(vertex_count_) + " vertices");
  if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop at vertex " + std::to_string(u));
  w.coeff.canonicalize();
  edges_.push_back(Edge{u, v, std::move(w)});
}

bool WeightedMultigraph::has_formal_weights() const {
  return std::any_of(edges_.begin(), edges_.end(), [](const Edge& e) { return !e.weight.is_numeric(); });
}

Matrix Strand::biadjacency() const {
  Matrix a(bottom_count_, top_count_);
  for (const auto& e : edges_) a(e.bottom - 1, e.top - 1) = e.weight;
  return a;
}

Strand Strand::transposed() const {
  std::vector<StrandEdge> flipped;
  flipped.reserve(edges_.size());
  for (const auto& e : edges_) flipped.push_back(StrandEdge{e.top, e.bottom, e.weight});
  return build_strand(top_count_, bottom_count_, std::move(flipped));
}

Strand build_strand(std::size_t bottom_count, std::size_t top_count, std::vector<StrandEdge> edges) {
  for (auto& e : edges) {
    if (e.bottom < 1 || e.bottom > bottom_count || e.top < 1 || e.top > top_count)
      throw Error(ErrorCode::IndexOutOfRange,
                  "strand edge " + dims(e.bottom, e.top) + " outside " + dims(bottom_count, top_count));
    e.weight.canonicalize();
  }
  std::sort(edges.begin(), edges.end(), [](const StrandEdge& a, const StrandEdge& b) {
    return std::tie(a.bottom, a.top) < std::tie(b.bottom, b.top);
  });
  for (std::size_t i = 1; i < edges.size(); ++i)
    if (edges[i].bottom == edges[i - 1].bottom && edges[i].top == edges[i - 1].top)
      throw Error(ErrorCode::DuplicateEdge, "strand edge " + dims(edges[i].bottom, edges[i].top) + " repeated");
  // Sorted by bottom index, monotone support means the top index never
  // decreases when the bottom index strictly increases.
  std::size_t max_top_so_far = 0;
  std::size_t i = 0;
  while (i < edges.size()) {
    std::size_t j = i;
    std::size_t row_min = edges[i].top;
    std::size_t row_max = edges[i].top;
    while (j < edges.size() && edges[j].bottom == edges[i].bottom) {
      row_min = std::min(row_min, edges[j].top);
      row_max = std::max(row_max, edges[j].top);
      ++j;
    }
    if (row_min < max_top_so_far)
      throw Error(ErrorCode::MonotoneSupportViolation,
                  "edge " + dims(edges[i].bottom, row_min) + " crosses an edge ending at top " +
                      std::to_string(max_top_so_far));
    max_top_so_far = row_max;
    i = j;
  }
  Strand s;
  s.bottom_count_ = bottom_count;
  s.top_count_ = top_count;
  s.edges_ = std::move(edges);
  return s;
}

Strand strand_from_matrix(const Matrix& a) {
  std::vector<StrandEdge> edges;
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c)
      if (a(r, c) != 0) edges.push_back(StrandEdge{r + 1, c + 1, a(r, c)});
  return build_strand(a.rows(), a.cols(), std::move(edges));
}

FabricGraph::FabricGraph(FabricKind kind, std::vector<Strand> strands, std::vector<VerticalWeight> vertical_weights)
    : kind_(kind), strands_(std::move(strands)), vertical_weights_(std::move(vertical_weights)) {
  const std::size_t m = strands_.size();
  if (m == 0) throw Error(ErrorCode::InvalidArgument, "a fabric graph needs at least one strand");
  for (std::size_t i = 0; i + 1 < m; ++i)
    if (strands_[i].top_count() != strands_[i + 1].bottom_count())
      throw Error(ErrorCode::SizeMismatch, "strand " + std::to_string(i + 1) + " has " +
                                               std::to_string(strands_[i].top_count()) + " top vertices but strand " +
                                               std::to_string(i + 2) + " has " +
                                               std::to_string(strands_[i + 1].bottom_count()) + " bottom vertices");
  if (kind_ == FabricKind::Cylindrical) {
    if (strands_.back().top_count() != strands_.front().bottom_count())
      throw Error(ErrorCode::SizeMismatch, "cylinder top strand does not wrap onto the bottom strand");
    if (vertical_weights_.empty()) vertical_weights_.assign(m, std::nullopt);
    if (vertical_weights_.size() != m)
      throw Error(ErrorCode::SizeMismatch, "cylinder needs " + std::to_string(m) + " vertical weights");
    for (auto& w : vertical_weights_)
      if (w) w->canonicalize();
  } else {
    vertical_weights_.assign(m - 1, Rational(1));
  }
}

std::vector<std::size_t> FabricGraph::level_sizes() const {
  std::vector<std::size_t> l;
  l.reserve(strands_.size() + 1);
  l.push_back(strands_.front().bottom_count());
  for (const auto& s : strands_) l.push_back(s.top_count());
  return l;
}

bool FabricGraph::balanced() const {
  return kind_ == FabricKind::Cylindrical || strands_.front().bottom_count() == strands_.back().top_count();
}

std::size_t FabricGraph::vertex_count() const {
  std::size_t n = 0;
  for (const auto& s : strands_) n += s.bottom_count() + s.top_count();
  return n;
}

FabricGraph FabricGraph::rotated(std::size_t shift) const {
  const std::size_t m = strands_.size();
  shift %= m;
  std::vector<Strand> s;
  s.reserve(m);
  for (std::size_t i = 0; i < m; ++i) s.push_back(strands_[(i + shift) % m]);
  if (kind_ == FabricKind::Rectangular) {
    if (shift != 0) throw Error(ErrorCode::InvalidArgument, "only cylindrical fabrics can be rotated");
    return *this;
  }
  std::vector<VerticalWeight> w;
  w.reserve(m);
  for (std::size_t i = 0; i < m; ++i) w.push_back(vertical_weights_[(i + shift) % m]);
  return FabricGraph(kind_, std::move(s), std::move(w));
}

FabricGraph honeycomb_cylinder(std::size_t m, std::size_t n) {
  require_even_girth(m, "honeycomb cylinder");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "honeycomb cylinder needs n >= 1");
  Matrix a;
  if (n % 2 == 0) {
    // Path t1-b1-t2-b2-...-ts-bs: upper bidiagonal s x s.
    const std::size_t s = n / 2;
    a = Matrix(s, s);
    for (std::size_t i = 0; i < s; ++i) {
      a(i, i) = 1;
      if (i + 1 < s) a(i, i + 1) = 1;
    }
  } else {
    // Path t1-b1-...-bs-t_{s+1}: s x (s+1) with rows {i, i+1}.
    const std::size_t s = (n - 1) / 2;
    a = Matrix(s, s + 1);
    for (std::size_t i = 0; i < s; ++i) {
      a(i, i) = 1;
      a(i, i + 1) = 1;
    }
  }
  Strand odd = strand_from_matrix(a);
  Strand even = odd.transposed();
  std::vector<Strand> strands;
  strands.reserve(m);
  for (std::size_t i = 0; i < m; ++i) strands.push_back(i % 2 == 0 ? odd : even);
  return FabricGraph(FabricKind::Cylindrical, std::move(strands));
}

Matrix square_strand_matrix(std::size_t n) {
  Matrix a(n, n);
  for (std::size_t r = 1; r <= n; ++r) {
    if (r % 2 == 1) {
      for (std::size_t c = (r == 1 ? 1 : r - 1); c <= r + 1; ++c)
        if (c <= n) a(r - 1, c - 1) = 1;
    } else {
      a(r - 1, r - 1) = 1;
    }
  }
  return a;
}

FabricGraph square_cylinder_fabric(std::size_t m, std::size_t n) {
  require_even_girth(m, "square cylinder fabric");
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "square cylinder fabric needs n >= 1");
  Strand odd = strand_from_matrix(square_strand_matrix(n));
  Strand even = odd.transposed();
  std::vector<Strand> strands;
  strands.reserve(m);
  for (std::size_t i = 0; i < m; ++i) strands.push_back(i % 2 == 0 ? odd : even);
  return FabricGraph(FabricKind::Cylindrical, std::move(strands), std::vector<VerticalWeight>(m, Rational(1)));
}

WeightedMultigraph square_cylinder_graph(std::size_t m, std::size_t n) {
  if (m < 2) throw Error(ErrorCode::GirthTooSmall, "square cylinder needs m >= 2, got " + std::to_string(m));
  if (n < 1) throw Error(ErrorCode::InvalidArgument, "square cylinder needs n >= 1");
  WeightedMultigraph g(m * n);
  g.kind = "square-cylinder";
  g.meta = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  auto id = [m](std::size_t i, std::size_t j) { return j * m + i; };
  std::vector<std::vector<std::size_t>> columns(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) columns[j].push_back(id(i, j));
    if (m == 2) {
      g.add_edge(id(0, j), id(1, j));
      g.add_edge(id(0, j), id(1, j));
    } else {
      for (std::size_t i = 0; i < m; ++i) g.add_edge(id(i, j), id((i + 1) % m, j));
    }
    if (j + 1 < n)
      for (std::size_t i = 0; i < m; ++i) g.add_edge(id(i, j), id(i, j + 1));
  }
  g.set_columns(std::move(columns));
  return g;
}

WeightedMultigraph rect_grid(std::size_t m, std::size_t n, bool half_top) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "grid needs m, n >= 1");
  WeightedMultigraph g(m * n);
  g.kind = half_top ? "half-top-grid" : "grid";
  g.meta = {{"m", std::to_string(m)}, {"n", std::to_string(n)}};
  auto id = [n](std::size_t r, std::size_t c) { return r * n + c; };
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      if (c + 1 < n) g.add_edge(id(r, c), id(r, c + 1), Weight{half_top && r + 1 == m ? Rational(1, 2) : Rational(1)});
      if (r + 1 < m) g.add_edge(id(r, c), id(r + 1, c));
    }
  std::vector<std::vector<std::size_t>> columns(n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t r = 0; r < m; ++r) columns[c].push_back(id(r, c));
  g.set_columns(std::move(columns));
  return g;
}

WeightedMultigraph fabric_to_multigraph(const FabricGraph& f, const std::vector<VerticalWeight>& x) {
  const auto& strands = f.strands();
  const std::size_t m = strands.size();
  const std::size_t levels = f.kind() == FabricKind::Cylindrical ? m : m - 1;
  if (x.size() != levels)
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(levels) + " vertical weights, got " +
                                             std::to_string(x.size()));
  std::vector<std::size_t> base(m + 1, 0);
  for (std::size_t i = 0; i < m; ++i) base[i + 1] = base[i] + strands[i].bottom_count() + strands[i].top_count();
  WeightedMultigraph g(base[m]);
  g.kind = f.kind() == FabricKind::Cylindrical ? "cylindrical-fabric" : "rectangular-fabric";
  auto bottom = [&](std::size_t s, std::size_t j) { return base[s] + j - 1; };
  auto top = [&](std::size_t s, std::size_t j) { return base[s] + strands[s].bottom_count() + j - 1; };
  for (std::size_t s = 0; s < m; ++s)
    for (const auto& e : strands[s].edges()) g.add_edge(bottom(s, e.bottom), top(s, e.top), Weight{e.weight});
  for (std::size_t s = 0; s < levels; ++s) {
    const std::size_t next = (s + 1) % m;
    Weight w = x[s] ? Weight{*x[s]} : Weight::formal();
    for (std::size_t j = 1; j <= strands[s].top_count(); ++j) g.add_edge(top(s, j), bottom(next, j), w);
  }
  return g;
}

WeightedMultigraph fabric_to_multigraph(const FabricGraph& f) { return fabric_to_multigraph(f, f.vertical_weights()); }

void validate(const SymmetricGraph& sg) {
  const std::size_t n = sg.graph.vertex_count();
  auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidArgument, "symmetric graph: " + why); };
  if (sg.involution.size() != n || sg.side.size() != n) fail("involution/side size mismatch");
  std::vector<int> axis_seen(n, 0);
  for (auto a : sg.axis) {
    if (a >= n) fail("axis vertex out of range");
    ++axis_seen[a];
  }
  if (sg.axis.size() % 2 != 0) fail("odd number of axis vertices");
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t w = sg.involution[v];
    if (w >= n || sg.involution[w] != v) fail("involution is not an involution at " + std::to_string(v));
    const bool fixed = w == v;
    if (fixed != (sg.side[v] == Side::Axis)) fail("fixed points must be exactly the axis vertices");
    if (fixed && axis_seen[v] != 1) fail("axis vertex " + std::to_string(v) + " must be listed once");
    if (!fixed && axis_seen[v] != 0) fail("non-fixed vertex listed on the axis");
    if (!fixed && sg.side[v] == sg.side[w]) fail("reflection must swap above and below");
  }
  using Key = std::tuple<std::size_t, std::size_t, Rational, unsigned>;
  auto key = [](std::size_t u, std::size_t v, const Weight& w) {
    return Key{std::min(u, v), std::max(u, v), w.coeff, w.x_power};
  };
  std::vector<Key> original, mirrored;
  for (const auto& e : sg.graph.edges()) {
    original.push_back(key(e.u, e.v, e.weight));
    mirrored.push_back(key(sg.involution[e.u], sg.involution[e.v], e.weight));
  }
  std::sort(original.begin(), original.end());
  std::sort(mirrored.begin(), mirrored.end());
  if (original != mirrored) fail("reflection does not preserve the weighted edge multiset");
}

SymmetricGraph symmetric_cylinder(std::size_t m, std::size_t n) {
  if (m < 3 || m % 2 == 0 || n < 2 || n % 2 != 0)
    throw Error(ErrorCode::BadParity, "symmetric cylinder needs odd m >= 3 and even n >= 2, got " + dims(m, n));
  SymmetricGraph sg;
  sg.graph = square_cylinder_graph(m, n);
  sg.graph.kind = "symmetric-cylinder";
  const std::size_t total = m * n;
  sg.involution.resize(total);
  sg.side.resize(total);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < m; ++i) {
      const std::size_t v = j * m + i;
      sg.involution[v] = j * m + (m - i) % m;
      sg.side[v] = i == 0 ? Side::Axis : (i <= (m - 1) / 2 ? Side::Above : Side::Below);
    }
  for (std::size_t j = 0; j < n; ++j) sg.axis.push_back(j * m);
  validate(sg);
  return sg;
}

SymmetricGraph symmetric_even_cycle(std::size_t length) {
  if (length < 4 || length % 2 != 0)
    throw Error(ErrorCode::BadParity, "symmetric cycle needs even length >= 4, got " + std::to_string(length));
  SymmetricGraph sg;
  sg.graph = WeightedMultigraph(length);
  sg.graph.kind = "symmetric-cycle";
  sg.graph.meta = {{"length", std::to_string(length)}};
  for (std::size_t v = 0; v < length; ++v) sg.graph.add_edge(v, (v + 1) % length);
  const std::size_t half = length / 2;
  sg.involution.resize(length);
  sg.side.resize(length);
  for (std::size_t v = 0; v < length; ++v) {
    sg.involution[v] = (length - v) % length;
    sg.side[v] = (v == 0 || v == half) ? Side::Axis : (v < half ? Side::Above : Side::Below);
  }
  sg.axis = {0, half};
  validate(sg);
  return sg;
}

}  // namespace dimers
