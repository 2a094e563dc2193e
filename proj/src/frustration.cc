#include "sigraph/frustration.h"

#include <bit>
#include <stdexcept>

namespace sigraph {

namespace {

// Visits every vertex set avoiding vertex 0 in Gray-code order, passing the
// set and the resulting negative edge set.
template <typename F>
void for_each_switching(const SignedGraph& s, F&& visit) {
  const Graph& g = s.graph();
  const int n = g.vertex_count();
  require_search_size(n, "switching enumeration");
  EdgeSet negative = s.negative_edges();
  VertexSet x = 0;
  visit(x, negative);
  if (n <= 1) return;
  const std::uint32_t steps = std::uint32_t{1} << (n - 1);
  for (std::uint32_t i = 1; i < steps; ++i) {
    const int v = std::countr_zero(i) + 1;
    x ^= vertex_bit(v);
    negative ^= g.incident_edges(v);
    visit(x, negative);
  }
}

}  // namespace

FrustrationIndex frustration_index(const SignedGraph& s) {
  FrustrationIndex best{s.negative_count(), s.negative_edges(), 0};
  for_each_switching(s, [&](VertexSet x, const EdgeSet& negative) {
    const int count = static_cast<int>(negative.count());
    if (count < best.value) best = {count, negative, x};
  });
  return best;
}

FrustrationNumber frustration_number(const SignedGraph& s) {
  const Graph& g = s.graph();
  const int n = g.vertex_count();
  require_search_size(n, "frustration_number");
  const VertexSet all = g.all_vertex_set();
  for (int size = 0; size <= n; ++size) {
    // Gosper's hack over the size-k subsets in increasing order.
    if (size == 0) {
      if (is_balanced(g, s.negative_edges(), all)) return {0, 0};
      continue;
    }
    std::uint32_t w = (std::uint32_t{1} << size) - 1;
    while (w <= all) {
      if (is_balanced(g, s.negative_edges(), all & ~w)) {
        return {size, static_cast<VertexSet>(w)};
      }
      const std::uint32_t c = w & -w;
      const std::uint32_t r = w + c;
      if (r == 0) break;
      w = (((r ^ w) >> 2) / c) | r;
    }
  }
  throw std::logic_error("deleting every vertex must balance");
}

FrustrationReport frustration_report(const SignedGraph& s) {
  const FrustrationIndex l = frustration_index(s);
  const FrustrationNumber l0 = frustration_number(s);
  return {l.value, l0.value, l.balancing_edges, l0.balancing_vertices};
}

bool is_minimal(const SignedGraph& s) {
  return s.negative_count() == frustration_index(s).value;
}

std::optional<VertexSet> cut_dominance_check(const SignedGraph& s) {
  const Graph& g = s.graph();
  const int n = g.vertex_count();
  require_search_size(n, "cut_dominance_check");
  if (n <= 1) return std::nullopt;
  const std::uint32_t limit = std::uint32_t{1} << (n - 1);
  for (std::uint32_t i = 1; i < limit; ++i) {
    const VertexSet x = i << 1;
    const EdgeSet boundary = cut(g, x);
    const auto negative = (boundary & s.negative_edges()).count();
    if (2 * negative > boundary.count()) return x;
  }
  return std::nullopt;
}

int alpha_k(const SignedGraph& s, int k) {
  if (k < 0 || k > 2) throw std::invalid_argument("alpha_k needs k in {0,1,2}");
  const Graph& g = s.graph();
  int count = 0;
  for (const VertexSet w : independent_sets(g, k)) {
    if (is_balanced(g, s.negative_edges(), g.all_vertex_set() & ~w)) ++count;
  }
  return count;
}

MinimalRepresentative minimal_representative(const SignedGraph& s) {
  EdgeSet best = s.negative_edges();
  VertexSet best_x = 0;
  for_each_switching(s, [&](VertexSet x, const EdgeSet& negative) {
    if (negative.count() < best.count() ||
        (negative.count() == best.count() && edge_set_less(negative, best))) {
      best = negative;
      best_x = x;
    }
  });
  return {SignedGraph(s.graph(), best), {s.vertex_count(), best_x}};
}

}  // namespace sigraph
