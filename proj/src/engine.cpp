#include "dimers/engine.hpp"

#include <algorithm>
#include <cstdlib>

#include "dimers/error.hpp"

namespace dimers {

std::string to_string(EngineMethod m) {
  switch (m) {
    case EngineMethod::RectDet: return "rect_det";
    case EngineMethod::CylDet: return "cyl_det";
    case EngineMethod::CylCharpoly: return "cyl_charpoly";
  }
  return "unknown";
}

Matrix strand_product(const FabricGraph& f, std::vector<std::pair<std::size_t, std::size_t>>* trace) {
  const auto& strands = f.strands();
  Matrix p = strands.front().biadjacency();
  if (trace) trace->emplace_back(p.rows(), p.cols());
  for (std::size_t i = 1; i < strands.size(); ++i) {
    p = p * strands[i].biadjacency();
    if (trace) trace->emplace_back(p.rows(), p.cols());
  }
  return p;
}

EngineResult count_rect_detailed(const FabricGraph& f) {
  if (f.kind() != FabricKind::Rectangular) throw Error(ErrorCode::InvalidArgument, "count_rect needs a rectangular fabric");
  if (!f.balanced()) {
    const auto l = f.level_sizes();
    throw Error(ErrorCode::Unbalanced, "k_1 = " + std::to_string(l.front()) + " but l_m = " + std::to_string(l.back()));
  }
  EngineResult r;
  r.method = EngineMethod::RectDet;
  r.value = det_exact(strand_product(f, &r.product_dims));
  return r;
}

Rational count_rect(const FabricGraph& f) { return std::get<Rational>(count_rect_detailed(f).value); }

EngineResult count_cyl_detailed(const FabricGraph& f, const std::vector<Rational>& x_in) {
  std::vector<Rational> x = x_in;
  for (auto& xi : x) xi.canonicalize();
  if (f.kind() != FabricKind::Cylindrical) throw Error(ErrorCode::InvalidArgument, "count_cyl needs a cylindrical fabric");
  const std::size_t m = f.strand_count();
  if (x.size() != m)
    throw Error(ErrorCode::SizeMismatch, "expected " + std::to_string(m) + " vertical weights, got " + std::to_string(x.size()));
  const auto l = f.level_sizes();
  Rational prefactor = 1;
  for (std::size_t i = 1; i < m; ++i) {
    const long e = static_cast<long>(l[i]) - static_cast<long>(l[m]);
    if (e == 0) continue;
    if (e < 0 && x[i - 1] == 0)
      throw Error(ErrorCode::ZeroToNegativePower, "x_" + std::to_string(i) + " = 0 raised to " + std::to_string(e));
    Rational base = e > 0 ? x[i - 1] : Rational(1) / x[i - 1];
    Rational pw = 1;
    for (long k = 0; k < std::abs(e); ++k) pw *= base;
    prefactor *= pw;
  }
  Rational product_x = 1;
  for (const auto& xi : x) product_x *= xi;
  EngineResult r;
  r.method = EngineMethod::CylDet;
  const Matrix p = strand_product(f, &r.product_dims);
  r.value = prefactor * det_exact(p.plus_identity(product_x));
  return r;
}

Rational count_cyl(const FabricGraph& f, const std::vector<Rational>& x) {
  return std::get<Rational>(count_cyl_detailed(f, x).value);
}

RatPolynomial shifted_determinant_polynomial(const Matrix& p) {
  // det(XI + P) = (-1)^n det(-XI - P) = (-1)^n chi_P(-X).
  RatPolynomial q = charpoly_rational(p).reflect();
  if (p.rows() % 2 == 1) q *= Rational(-1);
  return q;
}

EngineResult match_polynomial_detailed(const FabricGraph& original) {
  if (original.kind() != FabricKind::Cylindrical)
    throw Error(ErrorCode::InvalidArgument, "match_polynomial needs a cylindrical fabric");
  const std::size_t m = original.strand_count();
  const auto l0 = original.level_sizes();
  // Rotate so that the last strand has the smallest top count.
  std::size_t argmin = 1;
  for (std::size_t i = 1; i <= m; ++i)
    if (l0[i] < l0[argmin]) argmin = i;
  const FabricGraph f = original.rotated(argmin % m);
  const auto l = f.level_sizes();
  std::size_t exponent = 0;
  for (std::size_t i = 1; i < m; ++i) exponent += l[i] - l[m];
  EngineResult r;
  r.method = EngineMethod::CylCharpoly;
  const Matrix p = strand_product(f, &r.product_dims);
  r.value = poly_shift_compose(shifted_determinant_polynomial(p), m, exponent);
  return r;
}

RatPolynomial match_polynomial(const FabricGraph& f) { return std::get<RatPolynomial>(match_polynomial_detailed(f).value); }

}  // namespace dimers
