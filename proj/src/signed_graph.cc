#include "sigraph/signed_graph.h"

#include <algorithm>
#include <stdexcept>

#include "sigraph/automorphisms.h"
#include "sigraph/petersen.h"

namespace sigraph {

SignedGraph::SignedGraph(Graph graph, EdgeSet negative)
    : graph_(std::move(graph)), negative_(negative) {
  if ((negative_ & ~graph_.all_edges()).any()) {
    throw std::invalid_argument("negative edge index out of range");
  }
}

SignedGraph SignedGraph::all_positive(Graph graph) {
  return SignedGraph(std::move(graph), EdgeSet{});
}

SignedGraph SignedGraph::all_negative(Graph graph) {
  const EdgeSet all = graph.all_edges();
  return SignedGraph(std::move(graph), all);
}

SignedGraph petersen_signature(std::uint32_t mask) {
  if (mask >= kPetersenMaskLimit) {
    throw std::invalid_argument("Petersen sign mask must be below 0x8000");
  }
  return SignedGraph(petersen_graph(), EdgeSet(mask));
}

std::uint32_t petersen_mask(const SignedGraph& s) {
  if (!is_petersen(s.graph())) {
    throw std::invalid_argument("not a signature of the Petersen graph");
  }
  return static_cast<std::uint32_t>(s.negative_edges().to_ulong());
}

SwitchingFunction SwitchingFunction::from_values(const std::vector<int>& values) {
  if (values.size() > kMaxVertices) throw SizeLimitError("too many vertices");
  SwitchingFunction z{static_cast<int>(values.size()), 0};
  for (size_t v = 0; v < values.size(); ++v) {
    if (values[v] == -1) {
      z.minus |= vertex_bit(static_cast<int>(v));
    } else if (values[v] != 1) {
      throw std::invalid_argument("switching values must be +1 or -1");
    }
  }
  return z;
}

std::vector<int> SwitchingFunction::values() const {
  std::vector<int> out(vertex_count);
  for (int v = 0; v < vertex_count; ++v) out[v] = value(v);
  return out;
}

VertexSet canonical_switching_set(const Graph& g, VertexSet x) {
  for (const VertexSet comp : components(g)) {
    if (contains(x, lowest_vertex(comp))) x ^= comp;
  }
  return x;
}

SwitchingFunction SwitchingFunction::canonical_form(const Graph& g) const {
  return {vertex_count, canonical_switching_set(g, minus)};
}

SignedGraph switch_set(const SignedGraph& s, VertexSet x) {
  return SignedGraph(s.graph(), s.negative_edges() ^ cut(s.graph(), x));
}

SignedGraph apply_switching(const SignedGraph& s, const SwitchingFunction& z) {
  if (z.vertex_count != s.vertex_count()) {
    throw std::invalid_argument("switching function has the wrong vertex count");
  }
  return switch_set(s, z.minus);
}

SignedGraph negate(const SignedGraph& s) {
  return SignedGraph(s.graph(), s.positive_edges());
}

SignedGraph permute(const SignedGraph& s, const Permutation& alpha) {
  return SignedGraph(s.graph(), permute_edges(s.graph(), alpha, s.negative_edges()));
}

int sign_of_circle(const SignedGraph& s, const Cycle& c) {
  if (!is_cycle_of(s.graph(), c)) {
    throw std::invalid_argument("not a circle of the signed graph");
  }
  return (c.edges & s.negative_edges()).count() % 2 == 0 ? 1 : -1;
}

namespace {

struct Labeling {
  std::vector<int> parent;
  std::vector<int> depth;
  VertexSet side = 0;
  int bad_u = -1;
  int bad_w = -1;
};

// Sign-aware breadth-first 2-labelling of the subgraph on `alive`. Stops at
// the first edge whose sign disagrees with the labels of its ends.
Labeling label(const Graph& g, const EdgeSet& negative, VertexSet alive) {
  const int n = g.vertex_count();
  Labeling out;
  out.parent.assign(n, -1);
  out.depth.assign(n, -1);
  std::vector<int> queue;
  queue.reserve(n);
  for (int root = 0; root < n; ++root) {
    if (!contains(alive, root) || out.depth[root] >= 0) continue;
    out.depth[root] = 0;
    queue.assign(1, root);
    for (size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      const bool v_side = contains(out.side, v);
      for (VertexSet nb = g.neighbors(v) & alive; nb != 0; nb &= nb - 1) {
        const int w = lowest_vertex(nb);
        const bool flip = negative.test(*g.edge_index(v, w));
        if (out.depth[w] < 0) {
          out.depth[w] = out.depth[v] + 1;
          out.parent[w] = v;
          if (v_side != flip) out.side |= vertex_bit(w);
          queue.push_back(w);
        } else if (contains(out.side, w) != (v_side != flip)) {
          out.bad_u = v;
          out.bad_w = w;
          return out;
        }
      }
    }
  }
  return out;
}

}  // namespace

bool is_balanced(const Graph& g, const EdgeSet& negative, VertexSet alive) {
  return label(g, negative, alive).bad_u < 0;
}

BalanceReport is_balanced(const SignedGraph& s) {
  const Graph& g = s.graph();
  const Labeling lab = label(g, s.negative_edges(), g.all_vertex_set());
  BalanceReport report;
  if (lab.bad_u < 0) {
    report.balanced = true;
    report.side = lab.side;
    return report;
  }
  // Tree paths from both ends of the offending edge up to their meeting
  // point, closed by the edge itself.
  std::vector<int> up{lab.bad_u};
  std::vector<int> down{lab.bad_w};
  while (up.back() != down.back()) {
    if (lab.depth[up.back()] >= lab.depth[down.back()]) {
      up.push_back(lab.parent[up.back()]);
    } else {
      down.push_back(lab.parent[down.back()]);
    }
  }
  down.pop_back();
  std::reverse(down.begin(), down.end());
  up.insert(up.end(), down.begin(), down.end());
  report.negative_circle = make_cycle(g, up);
  return report;
}

bool is_antibalanced(const SignedGraph& s) {
  return is_balanced(s.graph(), s.positive_edges(), s.graph().all_vertex_set());
}

std::optional<SwitchingFunction> switching_equivalence(const SignedGraph& s1,
                                                       const SignedGraph& s2) {
  if (!(s1.graph() == s2.graph())) {
    throw std::invalid_argument("signatures of different graphs");
  }
  // s1^X = s2 exactly when the sign ratio s1 * s2 is balanced with Harary
  // side X.
  const SignedGraph ratio(s1.graph(), s1.negative_edges() ^ s2.negative_edges());
  const BalanceReport b = is_balanced(ratio);
  if (!b.balanced) return std::nullopt;
  return SwitchingFunction{s1.vertex_count(), b.side};
}

std::map<int, int> negative_circle_counts(const std::vector<Cycle>& cycles,
                                          const EdgeSet& negative,
                                          const std::set<int>& lengths) {
  std::map<int, int> counts;
  for (const int k : lengths) counts[k] = 0;
  for (const Cycle& c : cycles) {
    if (!lengths.count(c.length())) continue;
    if ((c.edges & negative).count() % 2 == 1) ++counts[c.length()];
  }
  return counts;
}

std::map<int, int> negative_circle_counts(const SignedGraph& s,
                                          const std::set<int>& lengths) {
  const int longest = lengths.empty() ? 0 : *lengths.rbegin();
  return negative_circle_counts(enumerate_cycles(s.graph(), longest),
                                s.negative_edges(), lengths);
}

SignedGraph delete_vertices(const SignedGraph& s, VertexSet w) {
  const Graph& g = s.graph();
  std::vector<int> old_ids;
  Graph sub = induced_subgraph(g, g.all_vertex_set() & ~w, &old_ids);
  EdgeSet negative;
  for (int i = 0; i < sub.edge_count(); ++i) {
    const Edge& e = sub.edge(i);
    if (s.negative_edges().test(*g.edge_index(old_ids[e.u], old_ids[e.v]))) {
      negative.set(i);
    }
  }
  return SignedGraph(std::move(sub), negative);
}

SignedGraph delete_edges(const SignedGraph& s, const EdgeSet& removed) {
  const Graph& g = s.graph();
  Graph sub = delete_edges(g, removed);
  EdgeSet negative;
  for (int i = 0; i < sub.edge_count(); ++i) {
    const Edge& e = sub.edge(i);
    if (s.negative_edges().test(*g.edge_index(e.u, e.v))) negative.set(i);
  }
  return SignedGraph(std::move(sub), negative);
}

}  // namespace sigraph
