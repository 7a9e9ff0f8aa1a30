#include "dimers/oracle.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>

#include "dimers/error.hpp"

namespace dimers {

namespace {

struct Arc {
  std::size_t to;
  Weight weight;
};

class ExhaustiveCounter {
 public:
  explicit ExhaustiveCounter(const WeightedMultigraph& g) : n_(g.vertex_count()), adj_(n_) {
    for (const auto& e : g.edges()) {
      Weight w = e.weight;
      w.coeff.canonicalize();
      adj_[e.u].push_back(Arc{e.v, w});
      adj_[e.v].push_back(Arc{e.u, w});
    }
    full_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
  }

  RatPolynomial run() { return count(0); }

 private:
  bool stranded(std::size_t v, std::uint64_t mask) const {
    if (mask >> v & 1U) return false;
    for (const auto& a : adj_[v])
      if (!(mask >> a.to & 1U)) return false;
    return true;
  }

  RatPolynomial count(std::uint64_t mask) {
    if (mask == full_) return RatPolynomial::constant(Rational(1));
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const auto v = static_cast<std::size_t>(std::countr_one(mask));
    RatPolynomial total;
    for (const auto& a : adj_[v]) {
      if (mask >> a.to & 1U) continue;
      if (a.weight.coeff == 0) continue;
      const std::uint64_t next = mask | (std::uint64_t{1} << v) | (std::uint64_t{1} << a.to);
      bool dead = false;
      for (const auto& b : adj_[a.to])
        if (stranded(b.to, next)) {
          dead = true;
          break;
        }
      if (!dead)
        for (const auto& b : adj_[v])
          if (stranded(b.to, next)) {
            dead = true;
            break;
          }
      if (dead) continue;
      RatPolynomial sub = count(next);
      if (sub.is_zero()) continue;
      total += sub.compose_power(1, a.weight.x_power) * a.weight.coeff;
    }
    memo_.emplace(mask, total);
    return total;
  }

  std::size_t n_;
  std::vector<std::vector<Arc>> adj_;
  std::uint64_t full_ = 0;
  std::unordered_map<std::uint64_t, RatPolynomial> memo_;
};

}  // namespace

RatPolynomial count_matchings(const WeightedMultigraph& g, std::size_t vertex_limit) {
  const std::size_t n = g.vertex_count();
  if (n > vertex_limit || n > 64)
    throw Error(ErrorCode::TooLarge, "oracle limited to " + std::to_string(std::min<std::size_t>(vertex_limit, 64)) +
                                         " vertices, graph has " + std::to_string(n));
  if (n % 2 == 1) return {};
  return ExhaustiveCounter(g).run();
}

Rational count_matchings_value(const WeightedMultigraph& g, std::size_t vertex_limit) {
  if (g.has_formal_weights()) throw Error(ErrorCode::InvalidArgument, "graph carries formal weights");
  return count_matchings(g, vertex_limit).coefficient(0);
}

Rational count_matchings_profile(const WeightedMultigraph& g, std::size_t column_limit) {
  const auto& columns = g.columns();
  if (columns.empty()) throw Error(ErrorCode::NoColumnStructure, "graph declares no columns");
  if (g.has_formal_weights()) throw Error(ErrorCode::InvalidArgument, "profile counter needs numeric weights");
  const std::size_t n = g.vertex_count();
  const std::size_t limit = std::min<std::size_t>(column_limit, 31);
  std::vector<std::size_t> column_of(n, SIZE_MAX), local(n, 0);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() > limit)
      throw Error(ErrorCode::ColumnTooWide,
                  "column " + std::to_string(c) + " has " + std::to_string(columns[c].size()) + " vertices");
    for (std::size_t i = 0; i < columns[c].size(); ++i) {
      const std::size_t v = columns[c][i];
      if (v >= n || column_of[v] != SIZE_MAX)
        throw Error(ErrorCode::NoColumnStructure, "columns do not partition the vertices");
      column_of[v] = c;
      local[v] = i;
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    if (column_of[v] == SIZE_MAX) throw Error(ErrorCode::NoColumnStructure, "vertex " + std::to_string(v) + " in no column");

  struct LocalArc {
    std::size_t to;
    Rational w;
  };
  // intra[c][i]: partners inside column c; forward[c][i]: partners in column c+1.
  std::vector<std::vector<std::vector<LocalArc>>> intra(columns.size()), forward(columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    intra[c].resize(columns[c].size());
    forward[c].resize(columns[c].size());
  }
  for (const auto& e : g.edges()) {
    std::size_t cu = column_of[e.u], cv = column_of[e.v];
    std::size_t u = e.u, v = e.v;
    if (cu > cv) {
      std::swap(cu, cv);
      std::swap(u, v);
    }
    Rational w = e.weight.coeff;
    w.canonicalize();
    if (cu == cv) {
      intra[cu][local[u]].push_back(LocalArc{local[v], w});
      intra[cu][local[v]].push_back(LocalArc{local[u], w});
    } else if (cv == cu + 1) {
      forward[cu][local[u]].push_back(LocalArc{local[v], w});
    } else {
      throw Error(ErrorCode::NoColumnStructure, "edge joins non-adjacent columns " + std::to_string(cu) + " and " +
                                                    std::to_string(cv));
    }
  }

  std::unordered_map<std::uint32_t, Rational> states{{0U, Rational(1)}};
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const std::size_t k = columns[c].size();
    std::unordered_map<std::uint32_t, Rational> next_states;
    for (const auto& [incoming, weight] : states) {
      // Depth-first fill of column c in vertex order.
      auto fill = [&](auto&& self, std::size_t pos, std::uint32_t cur, std::uint32_t out, const Rational& acc) -> void {
        while (pos < k && (cur >> pos & 1U)) ++pos;
        if (pos == k) {
          next_states[out] += acc;
          return;
        }
        const std::uint32_t here = cur | (std::uint32_t{1} << pos);
        for (const auto& a : intra[c][pos])
          if (a.to > pos && !(cur >> a.to & 1U) && a.w != 0)
            self(self, pos + 1, here | (std::uint32_t{1} << a.to), out, acc * a.w);
        for (const auto& a : forward[c][pos])
          if (!(out >> a.to & 1U) && a.w != 0) self(self, pos + 1, here, out | (std::uint32_t{1} << a.to), acc * a.w);
      };
      fill(fill, 0, incoming, 0U, weight);
    }
    states = std::move(next_states);
  }
  auto it = states.find(0U);
  return it == states.end() ? Rational(0) : it->second;
}

}  // namespace dimers
