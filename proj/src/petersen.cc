#include "sigraph/petersen.h"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace sigraph {

namespace {

PetersenLabeling make_labeling() {
  PetersenLabeling p;
  int v = 0;
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) p.pair_of[v++] = {i, j};
  }
  return p;
}

Graph make_graph(const PetersenLabeling& p) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < 10; ++a) {
    for (int b = a + 1; b < 10; ++b) {
      const auto [i, j] = p.pair_of[a];
      const auto [k, l] = p.pair_of[b];
      if (i != k && i != l && j != k && j != l) edges.emplace_back(a, b);
    }
  }
  return Graph(10, edges);
}

}  // namespace

int PetersenLabeling::vertex_of(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i < 1 || j > 5 || i == j) {
    throw std::invalid_argument("not a 2-subset of {1..5}");
  }
  for (int v = 0; v < 10; ++v) {
    if (pair_of[v] == std::make_pair(i, j)) return v;
  }
  throw std::logic_error("labeling incomplete");
}

int PetersenLabeling::vertex_of_code(int code) const {
  return vertex_of(code / 10, code % 10);
}

std::string PetersenLabeling::name(int v) const {
  return std::to_string(pair_of[v].first) + std::to_string(pair_of[v].second);
}

Petersen petersen() { return {petersen_graph(), petersen_labeling()}; }

const PetersenLabeling& petersen_labeling() {
  static const PetersenLabeling labeling = make_labeling();
  return labeling;
}

const Graph& petersen_graph() {
  static const Graph graph = make_graph(petersen_labeling());
  return graph;
}

const std::vector<Cycle>& petersen_short_circles() {
  static const std::vector<Cycle> cycles = enumerate_cycles(petersen_graph(), 6);
  return cycles;
}

bool is_petersen(const Graph& g) { return g == petersen_graph(); }

int petersen_edge(int code_a, int code_b) {
  const PetersenLabeling& p = petersen_labeling();
  const auto e = petersen_graph().edge_index(p.vertex_of_code(code_a),
                                             p.vertex_of_code(code_b));
  if (!e) {
    throw std::invalid_argument("v" + std::to_string(code_a) + " and v" +
                                std::to_string(code_b) + " are not adjacent");
  }
  return *e;
}

EdgeSet petersen_edges(const std::vector<std::pair<int, int>>& code_pairs) {
  EdgeSet out;
  for (const auto& [a, b] : code_pairs) out.set(petersen_edge(a, b));
  return out;
}

VertexSet petersen_vertices(const std::vector<int>& codes) {
  VertexSet out = 0;
  for (const int c : codes) out |= vertex_bit(petersen_labeling().vertex_of_code(c));
  return out;
}

Cycle hexagon_of_vertex(int v) {
  const Graph& g = petersen_graph();
  const VertexSet rest = g.all_vertex_set() & ~(g.neighbors(v) | vertex_bit(v));
  // The six remaining vertices induce a hexagon; walk it.
  std::vector<int> walk{lowest_vertex(rest)};
  VertexSet seen = vertex_bit(walk[0]);
  while (walk.size() < 6) {
    const VertexSet next = g.neighbors(walk.back()) & rest & ~seen;
    const int w = lowest_vertex(next);
    walk.push_back(w);
    seen |= vertex_bit(w);
  }
  return make_cycle(g, walk);
}

VertexSet maximum_independent_set(int m) {
  VertexSet out = 0;
  const PetersenLabeling& p = petersen_labeling();
  for (int v = 0; v < 10; ++v) {
    if (p.pair_of[v].first == m || p.pair_of[v].second == m) out |= vertex_bit(v);
  }
  return out;
}

EdgeSet distance_three_matching(int m) {
  const Graph& g = petersen_graph();
  return induced_edges(g, g.all_vertex_set() & ~maximum_independent_set(m));
}

Permutation induced_permutation(const Permutation& base) {
  if (base.degree() != 5) {
    throw std::invalid_argument("base permutation must act on 5 points");
  }
  const PetersenLabeling& p = petersen_labeling();
  std::vector<int> images(10);
  for (int v = 0; v < 10; ++v) {
    const auto [i, j] = p.pair_of[v];
    images[v] = p.vertex_of(base(i - 1) + 1, base(j - 1) + 1);
  }
  return Permutation(std::move(images));
}

Permutation base_permutation(const Permutation& vertex_perm) {
  // Point m is the common element of the four pairs of X_m, and X_m maps to
  // X_{m'} under any automorphism.
  std::vector<int> images(5);
  for (int m = 1; m <= 5; ++m) {
    const VertexSet image = vertex_perm.apply(maximum_independent_set(m));
    int common = -1;
    for (int c = 1; c <= 5; ++c) {
      if (image == maximum_independent_set(c)) common = c;
    }
    if (common < 0) {
      throw std::invalid_argument("not an automorphism of the Petersen graph");
    }
    images[m - 1] = common - 1;
  }
  Permutation base(std::move(images));
  if (induced_permutation(base) != vertex_perm) {
    throw std::invalid_argument("not an automorphism of the Petersen graph");
  }
  return base;
}

int edge_distance(const Graph& g, int e, int f) {
  if (e == f) return 0;
  // Breadth-first search on the line graph.
  std::vector<int> dist(g.edge_count(), -1);
  std::deque<int> queue{e};
  dist[e] = 0;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    const EdgeSet touching =
        g.incident_edges(g.edge(x).u) | g.incident_edges(g.edge(x).v);
    for (int y = 0; y < g.edge_count(); ++y) {
      if (!touching.test(y) || dist[y] >= 0) continue;
      dist[y] = dist[x] + 1;
      if (y == f) return dist[y];
      queue.push_back(y);
    }
  }
  return -1;
}

bool is_matching(const Graph& g, const EdgeSet& m) {
  VertexSet covered = 0;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!m.test(i)) continue;
    const VertexSet ends = vertex_bit(g.edge(i).u) | vertex_bit(g.edge(i).v);
    if (covered & ends) return false;
    covered |= ends;
  }
  return (m & ~g.all_edges()).none();
}

std::vector<EdgeSet> matchings(const Graph& g) {
  std::vector<EdgeSet> out;
  EdgeSet current;
  auto extend = [&](auto&& self, int from, VertexSet covered) -> void {
    out.push_back(current);
    for (int i = from; i < g.edge_count(); ++i) {
      const VertexSet ends = vertex_bit(g.edge(i).u) | vertex_bit(g.edge(i).v);
      if (covered & ends) continue;
      current.set(i);
      self(self, i + 1, covered | ends);
      current.reset(i);
    }
  };
  extend(extend, 0, 0);
  std::stable_sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return edge_set_less(a, b);
  });
  return out;
}

const char* to_string(MatchingClass c) {
  switch (c) {
    case MatchingClass::kEmpty: return "EMPTY";
    case MatchingClass::kM1: return "M1";
    case MatchingClass::kM22: return "M22";
    case MatchingClass::kM23: return "M23";
    case MatchingClass::kM32: return "M32";
    case MatchingClass::kM33: return "M33";
    case MatchingClass::kM3Prime: return "M3PRIME";
    case MatchingClass::kM3TwoThree: return "M3_2_3";
    case MatchingClass::kM4Prime: return "M4PRIME";
    case MatchingClass::kM5MinusEdge: return "M5_MINUS_EDGE";
    case MatchingClass::kM5: return "M5";
  }
  return "?";
}

MatchingClass classify_matching(const EdgeSet& m) {
  const Graph& g = petersen_graph();
  if (!is_matching(g, m)) throw std::invalid_argument("edge set is not a matching");
  std::vector<int> edges;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (m.test(i)) edges.push_back(i);
  }
  switch (edges.size()) {
    case 0: return MatchingClass::kEmpty;
    case 1: return MatchingClass::kM1;
    case 2:
      return edge_distance(g, edges[0], edges[1]) == 2 ? MatchingClass::kM22
                                                       : MatchingClass::kM23;
    case 3: {
      int at_two = 0;
      for (int a = 0; a < 3; ++a) {
        for (int b = a + 1; b < 3; ++b) {
          if (edge_distance(g, edges[a], edges[b]) == 2) ++at_two;
        }
      }
      if (at_two == 0) return MatchingClass::kM33;
      if (at_two == 2) return MatchingClass::kM3TwoThree;
      if (at_two == 3) {
        for (int v = 0; v < 10; ++v) {
          if ((m & ~hexagon_of_vertex(v).edges).none()) return MatchingClass::kM32;
        }
        return MatchingClass::kM3Prime;
      }
      throw std::logic_error("3-edge matching with distance pattern 2,3,3");
    }
    case 4: {
      VertexSet covered = 0;
      for (const int e : edges) {
        covered |= vertex_bit(g.edge(e).u) | vertex_bit(g.edge(e).v);
      }
      const VertexSet free = g.all_vertex_set() & ~covered;
      const int a = lowest_vertex(free);
      const int b = lowest_vertex(free & (free - 1));
      return g.adjacent(a, b) ? MatchingClass::kM5MinusEdge
                              : MatchingClass::kM4Prime;
    }
    default: return MatchingClass::kM5;
  }
}

}  // namespace sigraph
