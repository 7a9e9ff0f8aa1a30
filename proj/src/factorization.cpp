#include "dimers/factorization.hpp"

#include <algorithm>
#include <deque>

#include "dimers/error.hpp"

namespace dimers {

namespace {

/// Copy of sg.graph without the edges removed by cutting `vertex` on `side`.
WeightedMultigraph apply_cuts(const SymmetricGraph& sg, const std::vector<std::pair<std::size_t, Cut>>& cuts) {
  std::vector<int> cut_at(sg.graph.vertex_count(), -1);
  for (const auto& [v, c] : cuts) cut_at[v] = c == Cut::Above ? 0 : 1;
  auto removed = [&](std::size_t v, std::size_t other) {
    if (cut_at[v] < 0) return false;
    const Side want = cut_at[v] == 0 ? Side::Above : Side::Below;
    return sg.side[other] == want;
  };
  WeightedMultigraph out(sg.graph.vertex_count());
  out.kind = sg.graph.kind + "-cut";
  out.meta = sg.graph.meta;
  for (const auto& e : sg.graph.edges())
    if (!removed(e.u, e.v) && !removed(e.v, e.u)) out.add_edge(e.u, e.v, e.weight);
  // Deleting edges keeps any column decomposition valid.
  out.set_columns(sg.graph.columns());
  return out;
}

}  // namespace

WeightedMultigraph reduced_subgraph(const SymmetricGraph& sg, const CutPlan& plan) {
  if (plan.size() != sg.width())
    throw Error(ErrorCode::PlanLengthMismatch,
                "plan has " + std::to_string(plan.size()) + " cuts for width " + std::to_string(sg.width()));
  std::vector<std::pair<std::size_t, Cut>> cuts;
  for (std::size_t i = 0; i < plan.size(); ++i) cuts.emplace_back(sg.axis[2 * i], plan[i]);
  return apply_cuts(sg, cuts);
}

WeightedMultigraph doubly_reduced_subgraph(const SymmetricGraph& sg, const CutPlan& plan) {
  if (plan.size() != sg.axis.size())
    throw Error(ErrorCode::PlanLengthMismatch,
                "plan has " + std::to_string(plan.size()) + " cuts for " + std::to_string(sg.axis.size()) + " axis vertices");
  std::vector<std::pair<std::size_t, Cut>> cuts;
  for (std::size_t i = 0; i < plan.size(); ++i) cuts.emplace_back(sg.axis[i], plan[i]);
  return apply_cuts(sg, cuts);
}

std::vector<int> two_coloring(const WeightedMultigraph& g, const std::vector<std::size_t>& vertices) {
  const std::size_t n = g.vertex_count();
  std::vector<char> inside(n, 0);
  for (auto v : vertices) inside[v] = 1;
  std::vector<std::vector<std::size_t>> adj(n);
  for (const auto& e : g.edges())
    if (inside[e.u] && inside[e.v]) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  std::vector<int> color(n, -1);
  for (auto start : vertices) {
    if (color[start] >= 0) continue;
    color[start] = 0;
    std::deque<std::size_t> queue{start};
    while (!queue.empty()) {
      const std::size_t v = queue.front();
      queue.pop_front();
      for (auto u : adj[v]) {
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          return {};
        }
      }
    }
  }
  return color;
}

bool is_bipartite(const WeightedMultigraph& g) {
  std::vector<std::size_t> all(g.vertex_count());
  for (std::size_t v = 0; v < all.size(); ++v) all[v] = v;
  return all.empty() || !two_coloring(g, all).empty();
}

GPrime build_g_prime_detailed(const SymmetricGraph& sg) {
  validate(sg);
  // G_>=: on-or-above vertices, BFS seeded at a_1, then the remaining axis
  // vertices, then everything else in index order.
  std::vector<std::size_t> order(sg.axis.begin(), sg.axis.end());
  for (std::size_t v = 0; v < sg.graph.vertex_count(); ++v)
    if (sg.side[v] == Side::Above) order.push_back(v);
  GPrime out;
  if (order.empty()) {
    out.graph = sg.graph;
    return out;
  }
  const auto color = two_coloring(sg.graph, order);
  if (color.empty()) throw Error(ErrorCode::NotTwoColorable, "the on-or-above subgraph has an odd cycle");
  std::vector<std::pair<std::size_t, Cut>> cuts;
  for (std::size_t i = 0; i < sg.axis.size(); ++i) {
    const int c = color[sg.axis[i]];
    const bool is_a = i % 2 == 0;
    // a_i: white -> above, black -> below. b_i: black -> above, white -> below.
    const Cut cut = (is_a == (c == 0)) ? Cut::Above : Cut::Below;
    cuts.emplace_back(sg.axis[i], cut);
    out.cuts.push_back(cut);
    out.axis_colors.push_back(c);
  }
  out.graph = apply_cuts(sg, cuts);
  out.graph.kind = sg.graph.kind + "-gprime";
  for (auto& e : out.graph.mutable_edges())
    if (sg.side[e.u] == Side::Axis && sg.side[e.v] == Side::Axis) e.weight.coeff /= 2;
  return out;
}

WeightedMultigraph build_g_prime(const SymmetricGraph& sg) { return build_g_prime_detailed(sg).graph; }

FactorizationReport verify_factorization(const SymmetricGraph& sg, std::size_t vertex_limit) {
  FactorizationReport r;
  r.w = sg.width();
  const auto gp = build_g_prime(sg);
  r.m_g = count_matchings_value(sg.graph, vertex_limit);
  r.m_gprime = count_matchings_value(gp, vertex_limit);
  Rational scale = 1;
  for (std::size_t i = 0; i < r.w; ++i) scale *= 2;
  r.holds = r.m_g == scale * r.m_gprime;
  return r;
}

ReducedSweep reduced_subgraph_sweep(const SymmetricGraph& sg, std::size_t vertex_limit) {
  const std::size_t w = sg.width();
  if (w > 20) throw Error(ErrorCode::TooLarge, "width " + std::to_string(w) + " too large to sweep");
  ReducedSweep out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << w); ++mask) {
    CutPlan plan(w);
    for (std::size_t i = 0; i < w; ++i) plan[i] = (mask >> i & 1U) ? Cut::Below : Cut::Above;
    out.counts.push_back(count_matchings_value(reduced_subgraph(sg, plan), vertex_limit));
  }
  out.all_equal = std::all_of(out.counts.begin(), out.counts.end(), [&](const Rational& c) { return c == out.counts[0]; });
  return out;
}

BipartiteSweep doubly_reduced_bipartite_sweep(const SymmetricGraph& sg) {
  const std::size_t k = sg.axis.size();
  if (k > 20) throw Error(ErrorCode::TooLarge, "too many axis vertices to sweep");
  BipartiteSweep out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
    CutPlan plan(k);
    for (std::size_t i = 0; i < k; ++i) plan[i] = (mask >> i & 1U) ? Cut::Below : Cut::Above;
    ++out.total;
    if (is_bipartite(doubly_reduced_subgraph(sg, plan)))
      ++out.bipartite;
    else
      out.failing_plans.push_back(mask);
  }
  return out;
}

ChainReport grid_chain_check(std::size_t m, std::size_t n, std::size_t column_limit) {
  if (m < 1 || n < 1) throw Error(ErrorCode::InvalidArgument, "chain needs m, n >= 1");
  if (4 * m + 1 > column_limit)
    throw Error(ErrorCode::TooLarge, "R_{4m+1,2n} columns of height " + std::to_string(4 * m + 1) + " exceed " +
                                         std::to_string(column_limit));
  ChainReport r;
  r.m = m;
  r.n = n;
  r.cylinder = count_matchings_profile(square_cylinder_graph(2 * m + 1, 2 * n), column_limit);
  r.half_grid = count_matchings_profile(rect_grid(2 * m + 1, 2 * n, true), column_limit);
  r.g_prime = count_matchings_profile(build_g_prime(symmetric_cylinder(2 * m + 1, 2 * n)), column_limit);
  r.small_grid = count_matchings_profile(rect_grid(2 * m, 2 * n), column_limit);
  r.large_grid = count_matchings_profile(rect_grid(4 * m + 1, 2 * n), column_limit);
  Rational pow2 = 1;
  for (std::size_t i = 0; i < n; ++i) pow2 *= 2;
  r.cylinder_factorization = r.cylinder == pow2 * r.half_grid && r.g_prime == r.half_grid;
  r.grid_factorization = r.large_grid == pow2 * r.small_grid * r.half_grid;
  r.ratio = r.small_grid != 0 && r.cylinder == r.large_grid / r.small_grid;
  return r;
}

}  // namespace dimers
