#include "dimers/cylindric.hpp"

#include "dimers/closed_forms.hpp"
#include "dimers/engine.hpp"
#include "dimers/error.hpp"

namespace dimers {

// Row r (0-based) holds entries at columns m - r .. m - r + s - 1, so the cell
// directly above entry (r, c) is (r - 1, c - 1). The bottom row copied above
// row 0 and shifted m columns right puts entry (m - 1, c) over (0, c + 1).

bool is_cylindric_filling(const CylindricFilling& f, std::size_t m, std::size_t s, unsigned bound) {
  if (f.size() != m) return false;
  for (const auto& row : f)
    if (row.size() != s) return false;
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < s; ++c) {
      if (f[r][c] > bound) return false;
      if (c + 1 < s && f[r][c] < f[r][c + 1]) return false;
      if (r + 1 < m && c + 1 < s && f[r][c] < f[r + 1][c + 1]) return false;
    }
  for (std::size_t c = 0; c + 1 < s; ++c)
    if (f[m - 1][c] < f[0][c + 1]) return false;
  return true;
}

BigInt enumerate_cylindric(std::size_t m, std::size_t s, std::size_t n,
                           const std::function<void(const CylindricFilling&)>& visit, std::size_t cell_limit) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cylindric partitions need m >= 1");
  if (m * s > cell_limit)
    throw Error(ErrorCode::TooLarge, std::to_string(m * s) + " cells exceed the limit " + std::to_string(cell_limit));
  CylindricFilling f(m, std::vector<unsigned>(s, 0));
  BigInt count = 0;
  const auto bound = static_cast<unsigned>(n);
  auto place = [&](auto&& self, std::size_t idx) -> void {
    if (idx == m * s) {
      ++count;
      if (visit) visit(f);
      return;
    }
    const std::size_t r = idx / s;
    const std::size_t c = idx % s;
    unsigned hi = bound;
    if (c > 0) hi = std::min(hi, f[r][c - 1]);
    if (r > 0 && c > 0) hi = std::min(hi, f[r - 1][c - 1]);
    unsigned lo = 0;
    if (r + 1 == m && c + 1 < s) lo = f[0][c + 1];  // wrapped copy
    for (unsigned v = lo; v <= hi; ++v) {
      f[r][c] = v;
      self(self, idx + 1);
    }
    f[r][c] = 0;
  };
  place(place, 0);
  return count;
}

BigInt matchings_with_k_verticals(const FabricGraph& f, std::size_t k) {
  const Rational c = match_polynomial(f).coefficient(k);
  if (!is_integer(c)) throw Error(ErrorCode::NonIntegerEntries, "fractional matching count; strand weights not integral");
  return c.get_num();
}

CliffCount cliff_count(std::size_t m, std::size_t n, std::size_t s) {
  if (m < 1) throw Error(ErrorCode::InvalidArgument, "cliffs need m >= 1");
  CliffCount out;
  out.formula = cliff_formula(m, n, s);
  if (2 * n + s == 0) {
    out.exact = 1;
    return out;
  }
  out.exact = matchings_with_k_verticals(honeycomb_cylinder(2 * m, 2 * n + s), m * s);
  return out;
}

}  // namespace dimers
