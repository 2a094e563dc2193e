#include "sigraph/graph.h"

#include <algorithm>
#include <numeric>
#include <string>

namespace sigraph {

Graph::Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  if (vertex_count > kMaxVertices) {
    throw SizeLimitError("graph has more than " + std::to_string(kMaxVertices) +
                         " vertices");
  }
  if (static_cast<int>(edges.size()) > kMaxEdges) {
    throw SizeLimitError("graph has more than " + std::to_string(kMaxEdges) +
                         " edges");
  }
  edges_.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(a) + " " + std::to_string(b));
    }
    if (a == b) {
      throw std::invalid_argument("loop at vertex " + std::to_string(a));
    }
    edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(edges_.begin(), edges_.end());
  if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end()) {
    throw std::invalid_argument("repeated edge");
  }
  adjacency_.assign(vertex_count, 0);
  incident_.assign(vertex_count, EdgeSet{});
  index_.assign(static_cast<size_t>(vertex_count) * vertex_count, -1);
  for (int i = 0; i < edge_count(); ++i) {
    const auto [u, v] = edges_[i];
    adjacency_[u] |= vertex_bit(v);
    adjacency_[v] |= vertex_bit(u);
    incident_[u].set(i);
    incident_[v].set(i);
    index_[u * vertex_count + v] = i;
    index_[v * vertex_count + u] = i;
  }
}

std::optional<int> Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) {
    return std::nullopt;
  }
  const int i = index_[u * vertex_count_ + v];
  if (i < 0) return std::nullopt;
  return i;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < vertex_count_; ++v) d = std::max(d, degree(v));
  return d;
}

EdgeSet Graph::all_edges() const {
  EdgeSet all;
  for (int i = 0; i < edge_count(); ++i) all.set(i);
  return all;
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph(n, edges);
}

Graph complete_bipartite_graph(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < a; ++u) {
    for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
  }
  return Graph(a + b, edges);
}

EdgeSet cut(const Graph& g, VertexSet x) {
  EdgeSet result;
  for_each_vertex(x, [&](int v) { result ^= g.incident_edges(v); });
  return result;
}

EdgeSet induced_edges(const Graph& g, VertexSet x) {
  EdgeSet result;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (contains(x, e.u) && contains(x, e.v)) result.set(i);
  }
  return result;
}

bool is_independent(const Graph& g, VertexSet x) {
  bool independent = true;
  for_each_vertex(x, [&](int v) {
    if (g.neighbors(v) & x) independent = false;
  });
  return independent;
}

namespace {

void collect_independent(const Graph& g, int start, int remaining,
                         VertexSet chosen, VertexSet blocked,
                         std::vector<VertexSet>& out) {
  if (remaining == 0) {
    out.push_back(chosen);
    return;
  }
  for (int v = start; v < g.vertex_count(); ++v) {
    if (contains(blocked, v)) continue;
    collect_independent(g, v + 1, remaining - 1, chosen | vertex_bit(v),
                        blocked | g.neighbors(v) | vertex_bit(v), out);
  }
}

}  // namespace

std::vector<VertexSet> independent_sets(const Graph& g, int k) {
  if (k < 0 || k > g.vertex_count()) {
    throw std::invalid_argument("independent set size out of range");
  }
  std::vector<VertexSet> out;
  collect_independent(g, 0, k, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> components(const Graph& g, VertexSet alive,
                                  const EdgeSet& edges) {
  std::vector<VertexSet> adjacency(g.vertex_count(), 0);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!edges.test(i)) continue;
    const Edge& e = g.edge(i);
    if (!contains(alive, e.u) || !contains(alive, e.v)) continue;
    adjacency[e.u] |= vertex_bit(e.v);
    adjacency[e.v] |= vertex_bit(e.u);
  }
  std::vector<VertexSet> result;
  VertexSet unseen = alive & g.all_vertex_set();
  while (unseen != 0) {
    VertexSet component = vertex_bit(lowest_vertex(unseen));
    VertexSet frontier = component;
    while (frontier != 0) {
      VertexSet next = 0;
      for_each_vertex(frontier, [&](int v) { next |= adjacency[v]; });
      frontier = next & ~component;
      component |= next;
    }
    result.push_back(component);
    unseen &= ~component;
  }
  return result;
}

std::vector<VertexSet> components(const Graph& g) {
  return components(g, g.all_vertex_set(), g.all_edges());
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

bool is_bipartite(const Graph& g, VertexSet alive) {
  std::vector<int> side(g.vertex_count(), -1);
  for (const VertexSet component : components(g, alive, g.all_edges())) {
    const int root = lowest_vertex(component);
    side[root] = 0;
    std::vector<int> queue{root};
    for (size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      bool ok = true;
      for_each_vertex(g.neighbors(v) & alive, [&](int w) {
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          queue.push_back(w);
        } else if (side[w] == side[v]) {
          ok = false;
        }
      });
      if (!ok) return false;
    }
  }
  return true;
}

Graph induced_subgraph(const Graph& g, VertexSet keep,
                       std::vector<int>* old_ids) {
  keep &= g.all_vertex_set();
  std::vector<int> new_id(g.vertex_count(), -1);
  std::vector<int> ids;
  for_each_vertex(keep, [&](int v) {
    new_id[v] = static_cast<int>(ids.size());
    ids.push_back(v);
  });
  std::vector<std::pair<int, int>> edges;
  for (const Edge& e : g.edges()) {
    if (new_id[e.u] >= 0 && new_id[e.v] >= 0) {
      edges.emplace_back(new_id[e.u], new_id[e.v]);
    }
  }
  if (old_ids != nullptr) *old_ids = ids;
  return Graph(static_cast<int>(ids.size()), edges);
}

Graph delete_edges(const Graph& g, const EdgeSet& removed) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!removed.test(i)) edges.emplace_back(g.edge(i).u, g.edge(i).v);
  }
  return Graph(g.vertex_count(), edges);
}

ContractionResult contract(const Graph& g, const EdgeSet& s) {
  ContractionResult result;
  result.origin = components(g, g.all_vertex_set(), s);
  const int count = static_cast<int>(result.origin.size());
  result.class_of.assign(g.vertex_count(), -1);
  for (int c = 0; c < count; ++c) {
    for_each_vertex(result.origin[c],
                    [&](int v) { result.class_of[v] = c; });
    result.from_contraction.push_back(popcount(result.origin[c]) > 1);
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (s.test(i)) continue;
    const int a = result.class_of[g.edge(i).u];
    const int b = result.class_of[g.edge(i).v];
    if (a == b) {
      result.has_loop = true;
      continue;
    }
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  result.quotient = Graph(count, edges);
  return result;
}

namespace {

// Backtracking k-coloring; vertices are processed in a fixed order that
// puts each vertex after as many of its neighbors as possible.
bool color_from(const Graph& g, const std::vector<int>& order, size_t pos,
                int k, int used, std::vector<int>& color) {
  if (pos == order.size()) return true;
  const int v = order[pos];
  VertexSet forbidden = 0;
  for_each_vertex(g.neighbors(v), [&](int w) {
    if (color[w] >= 0) forbidden |= vertex_bit(color[w]);
  });
  // Colors are interchangeable, so a fresh color is only tried once.
  const int limit = std::min(k, used + 1);
  for (int c = 0; c < limit; ++c) {
    if (contains(forbidden, c)) continue;
    color[v] = c;
    if (color_from(g, order, pos + 1, k, std::max(used, c + 1), color)) {
      return true;
    }
  }
  color[v] = -1;
  return false;
}

std::vector<int> coloring_order(const Graph& g) {
  std::vector<int> order;
  VertexSet placed = 0;
  for (int step = 0; step < g.vertex_count(); ++step) {
    int best = -1;
    int best_key = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (contains(placed, v)) continue;
      const int key = popcount(g.neighbors(v) & placed) * 64 + g.degree(v);
      if (key > best_key) {
        best_key = key;
        best = v;
      }
    }
    order.push_back(best);
    placed |= vertex_bit(best);
  }
  return order;
}

}  // namespace

std::optional<std::vector<int>> find_coloring(const Graph& g, int k) {
  require_search_size(g.vertex_count(), "find_coloring");
  std::vector<int> color(g.vertex_count(), -1);
  if (g.vertex_count() == 0) return color;
  if (k <= 0) return std::nullopt;
  if (color_from(g, coloring_order(g), 0, k, 0, color)) return color;
  return std::nullopt;
}

int chromatic_number(const Graph& g) {
  require_search_size(g.vertex_count(), "chromatic_number");
  if (g.vertex_count() == 0) return 0;
  for (int k = 1;; ++k) {
    if (find_coloring(g, k)) return k;
  }
}

std::optional<int> chromatic_number(const ContractionResult& c) {
  if (c.has_loop) return std::nullopt;
  return chromatic_number(c.quotient);
}

}  // namespace sigraph
