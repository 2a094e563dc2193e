#include "sigraph/automorphisms.h"

#include <algorithm>
#include <map>
#include <set>
#include <string>

namespace sigraph {

namespace {

// Colour refinement: start from degrees and split classes by the multiset of
// neighbour colours until stable. Automorphisms preserve the final colours.
std::vector<int> refined_colors(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = g.degree(v);
  for (int round = 0; round < n; ++round) {
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> signature(n);
    for (int v = 0; v < n; ++v) {
      signature[v].push_back(color[v]);
      std::vector<int> around;
      for_each_vertex(g.neighbors(v), [&](int w) { around.push_back(color[w]); });
      std::sort(around.begin(), around.end());
      signature[v].insert(signature[v].end(), around.begin(), around.end());
      ids.emplace(signature[v], 0);
    }
    int next = 0;
    for (auto& [key, id] : ids) id = next++;
    std::vector<int> refined(n);
    for (int v = 0; v < n; ++v) refined[v] = ids[signature[v]];
    const int before = static_cast<int>(
        std::set<int>(color.begin(), color.end()).size());
    color = refined;
    if (next == before) break;
  }
  return color;
}

// Order vertices so that each one after the first of its component has an
// earlier neighbour; adjacency checks then prune early.
std::vector<int> search_order(const Graph& g) {
  std::vector<int> order;
  VertexSet placed = 0;
  while (static_cast<int>(order.size()) < g.vertex_count()) {
    int pick = -1;
    int best = -1;
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (contains(placed, v)) continue;
      const int score = popcount(g.neighbors(v) & placed);
      if (score > best) {
        best = score;
        pick = v;
      }
    }
    order.push_back(pick);
    placed |= vertex_bit(pick);
  }
  return order;
}

struct Search {
  const Graph& g;
  std::vector<int> color;
  std::vector<int> order;
  std::vector<int> image;
  VertexSet used = 0;
  std::vector<Permutation> found;

  void extend(size_t pos) {
    if (pos == order.size()) {
      found.emplace_back(image);
      if (static_cast<int>(found.size()) > kMaxGroupOrder) {
        throw SizeLimitError("automorphism group larger than " +
                             std::to_string(kMaxGroupOrder));
      }
      return;
    }
    const int v = order[pos];
    for (int w = 0; w < g.vertex_count(); ++w) {
      if (contains(used, w) || color[w] != color[v]) continue;
      bool ok = true;
      for (size_t i = 0; i < pos && ok; ++i) {
        const int u = order[i];
        ok = g.adjacent(v, u) == g.adjacent(w, image[u]);
      }
      if (!ok) continue;
      image[v] = w;
      used |= vertex_bit(w);
      extend(pos + 1);
      used &= ~vertex_bit(w);
      image[v] = -1;
    }
  }
};

}  // namespace

std::vector<Permutation> automorphism_list(const Graph& g) {
  require_search_size(g.vertex_count(), "graph_automorphisms");
  Search search{g, refined_colors(g), search_order(g),
                std::vector<int>(g.vertex_count(), -1), 0, {}};
  search.extend(0);
  std::sort(search.found.begin(), search.found.end());
  return search.found;
}

PermutationGroup make_permutation_group(std::vector<Permutation> elements) {
  return PermutationGroup(std::move(elements),
                          [](const Permutation& a, const Permutation& b) {
                            return a * b;
                          });
}

PermutationGroup graph_automorphisms(const Graph& g) {
  return make_permutation_group(automorphism_list(g));
}

bool is_automorphism(const Graph& g, const Permutation& alpha) {
  if (alpha.degree() != g.vertex_count()) return false;
  for (const Edge& e : g.edges()) {
    if (!g.adjacent(alpha(e.u), alpha(e.v))) return false;
  }
  return true;
}

EdgeSet permute_edges(const Graph& g, const Permutation& alpha,
                      const EdgeSet& edges) {
  EdgeSet out;
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!edges.test(i)) continue;
    const auto j = g.edge_index(alpha(g.edge(i).u), alpha(g.edge(i).v));
    if (!j) throw std::invalid_argument("permutation does not preserve the graph");
    out.set(*j);
  }
  return out;
}

}  // namespace sigraph
