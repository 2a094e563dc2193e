#include "sigraph/cycles.h"

#include <algorithm>

namespace sigraph {

VertexSet Cycle::vertex_set() const {
  VertexSet set = 0;
  for (const int v : vertices) set |= vertex_bit(v);
  return set;
}

namespace {

std::vector<int> canonical_rotation(const std::vector<int>& vertices) {
  const int n = static_cast<int>(vertices.size());
  const int start = static_cast<int>(
      std::min_element(vertices.begin(), vertices.end()) - vertices.begin());
  const int next = vertices[(start + 1) % n];
  const int prev = vertices[(start + n - 1) % n];
  const int step = next < prev ? 1 : n - 1;
  std::vector<int> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(vertices[(start + i * step) % n]);
  return out;
}

void search(const Graph& g, int root, int max_len, std::vector<int>& path,
            VertexSet on_path, std::vector<Cycle>& out) {
  const int tail = path.back();
  for_each_vertex(g.neighbors(tail), [&](int w) {
    if (w == root) {
      // Each circle is reached twice from its root; keep one direction.
      if (path.size() >= 3 && path[1] < path.back()) {
        Cycle c;
        c.vertices = path;
        for (size_t i = 0; i < path.size(); ++i) {
          c.edges.set(*g.edge_index(path[i], path[(i + 1) % path.size()]));
        }
        out.push_back(std::move(c));
      }
      return;
    }
    if (w < root || contains(on_path, w)) return;
    if (static_cast<int>(path.size()) >= max_len) return;
    path.push_back(w);
    search(g, root, max_len, path, on_path | vertex_bit(w), out);
    path.pop_back();
  });
}

}  // namespace

Cycle make_cycle(const Graph& g, const std::vector<int>& vertices) {
  const int n = static_cast<int>(vertices.size());
  if (n < 3) throw std::invalid_argument("a circle needs at least 3 vertices");
  VertexSet seen = 0;
  for (const int v : vertices) {
    if (v < 0 || v >= g.vertex_count()) {
      throw std::invalid_argument("circle vertex out of range");
    }
    if (contains(seen, v)) throw std::invalid_argument("repeated circle vertex");
    seen |= vertex_bit(v);
  }
  Cycle c;
  c.vertices = canonical_rotation(vertices);
  for (int i = 0; i < n; ++i) {
    const auto e = g.edge_index(c.vertices[i], c.vertices[(i + 1) % n]);
    if (!e) throw std::invalid_argument("consecutive circle vertices not adjacent");
    c.edges.set(*e);
  }
  return c;
}

bool is_cycle_of(const Graph& g, const Cycle& c) {
  try {
    const Cycle canonical = make_cycle(g, c.vertices);
    return canonical.edges == c.edges;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len) {
  require_search_size(g.vertex_count(), "enumerate_cycles");
  std::vector<Cycle> out;
  std::vector<int> path;
  for (int root = 0; root < g.vertex_count(); ++root) {
    path.assign(1, root);
    search(g, root, max_len, path, vertex_bit(root), out);
  }
  std::sort(out.begin(), out.end(), [](const Cycle& a, const Cycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.vertices < b.vertices;
  });
  return out;
}

}  // namespace sigraph
