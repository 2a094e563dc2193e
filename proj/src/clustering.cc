#include "sigraph/clustering.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "sigraph/petersen.h"

namespace sigraph {

namespace {

int find_root(std::vector<int>& parent, int v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// Positive path from `from` to `to` by breadth-first search.
std::vector<int> positive_path(const SignedGraph& s, int from, int to) {
  const Graph& g = s.graph();
  std::vector<int> parent(g.vertex_count(), -1);
  std::vector<int> queue{from};
  parent[from] = from;
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    if (v == to) break;
    for_each_vertex(g.neighbors(v), [&](int w) {
      if (parent[w] >= 0 || s.negative_edges().test(*g.edge_index(v, w))) return;
      parent[w] = v;
      queue.push_back(w);
    });
  }
  std::vector<int> path;
  for (int v = to; v != from; v = parent[v]) path.push_back(v);
  path.push_back(from);
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace

bool is_clusterable(const Graph& g, const EdgeSet& negative, const EdgeSet& present) {
  std::vector<int> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!present.test(i) || negative.test(i)) continue;
    parent[find_root(parent, g.edge(i).u)] = find_root(parent, g.edge(i).v);
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!present.test(i) || !negative.test(i)) continue;
    if (find_root(parent, g.edge(i).u) == find_root(parent, g.edge(i).v)) return false;
  }
  return true;
}

Clusterability is_clusterable(const SignedGraph& s) {
  const Graph& g = s.graph();
  const ContractionResult c = contract(g, s.positive_edges());
  Clusterability out;
  if (c.has_loop) {
    for (int i = 0; i < g.edge_count(); ++i) {
      const Edge& e = g.edge(i);
      if (!s.negative_edges().test(i) || c.class_of[e.u] != c.class_of[e.v]) continue;
      out.circle = make_cycle(g, positive_path(s, e.u, e.v));
      return out;
    }
    throw std::logic_error("loop flag set without an internal negative edge");
  }
  out.clusterable = true;
  const int k = chromatic_number(c.quotient);
  const auto coloring = find_coloring(c.quotient, k);
  out.clusters.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v) {
    out.clusters[v] = (*coloring)[c.class_of[v]];
  }
  return out;
}

std::optional<int> cluster_number(const SignedGraph& s) {
  return chromatic_number(contract(s.graph(), s.positive_edges()));
}

Inclusterability inclusterability_index(const SignedGraph& s) {
  const Graph& g = s.graph();
  const int m = g.edge_count();
  if (m > kInclusterabilityEdgeLimit) {
    throw SizeLimitError("inclusterability_index: edge count " + std::to_string(m) +
                         " exceeds limit " +
                         std::to_string(kInclusterabilityEdgeLimit));
  }
  const EdgeSet all = g.all_edges();
  EdgeSet removed;
  // Depth-first choice of `left` more edges with increasing indices.
  auto search = [&](auto&& self, int from, int left) -> bool {
    if (left == 0) return is_clusterable(g, s.negative_edges(), all & ~removed);
    for (int i = from; i <= m - left; ++i) {
      removed.set(i);
      if (self(self, i + 1, left - 1)) return true;
      removed.reset(i);
    }
    return false;
  };
  for (int size = 0; size <= s.negative_count(); ++size) {
    removed.reset();
    if (search(search, 0, size)) return {size, removed};
  }
  throw std::logic_error("deleting every negative edge must cluster");
}

ClusterReport cluster_report(const SignedGraph& s) {
  const Clusterability c = is_clusterable(s);
  const Inclusterability q = inclusterability_index(s);
  ClusterReport out;
  out.clusterable = c.clusterable;
  if (c.clusterable) out.clun = cluster_number(s);
  out.q = q.q;
  out.clusters = c.clusters;
  out.deletion = q.deletion;
  return out;
}

int max_inclusterability(const Graph& g, const std::vector<EdgeSet>& family) {
  int best = 0;
  for (const EdgeSet& negative : family) {
    best = std::max(best, inclusterability_index(SignedGraph(g, negative)).q);
  }
  return best;
}

int max_inclusterability(const Graph& g, bool cubic_shortcut) {
  if (cubic_shortcut) {
    if (g.max_degree() > 3) {
      throw std::invalid_argument("matching shortcut needs maximum degree <= 3");
    }
    return max_inclusterability(g, matchings(g));
  }
  const int m = g.edge_count();
  if (m > kInclusterabilityEdgeLimit) {
    throw SizeLimitError("max_inclusterability: too many edges for a full scan");
  }
  int best = 0;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    best = std::max(best, inclusterability_index(SignedGraph(g, EdgeSet(mask))).q);
  }
  return best;
}

}  // namespace sigraph
