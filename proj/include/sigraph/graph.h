#ifndef SIGRAPH_GRAPH_H_
#define SIGRAPH_GRAPH_H_

#include <optional>
#include <utility>
#include <vector>

#include "sigraph/common.h"

namespace sigraph {

struct Edge {
  int u;
  int v;

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A simple undirected graph. Edges are kept in lexicographic order on
// (min endpoint, max endpoint); that order is the edge index used by every
// edge set and sign mask in the library.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on loops, repeated edges or endpoints out of
  // range, and SizeLimitError when the storage limits are exceeded.
  Graph(int vertex_count, const std::vector<std::pair<int, int>>& edges);

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[index]; }

  // Index of edge uv in canonical order, if present.
  std::optional<int> edge_index(int u, int v) const;

  bool adjacent(int u, int v) const { return contains(adjacency_[u], v); }
  VertexSet neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return popcount(adjacency_[v]); }
  int max_degree() const;

  EdgeSet incident_edges(int v) const { return incident_[v]; }
  EdgeSet all_edges() const;
  VertexSet all_vertex_set() const { return all_vertices(vertex_count_); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adjacency_;
  std::vector<EdgeSet> incident_;
  std::vector<int> index_;  // vertex_count_^2 table, -1 when absent
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph complete_bipartite_graph(int a, int b);

// Edges with exactly one endpoint in x.
EdgeSet cut(const Graph& g, VertexSet x);

// Edges with both endpoints in x.
EdgeSet induced_edges(const Graph& g, VertexSet x);

bool is_independent(const Graph& g, VertexSet x);

// All independent sets of exactly k vertices, in increasing mask order.
std::vector<VertexSet> independent_sets(const Graph& g, int k);

// Vertex sets of the connected components of the spanning subgraph
// (alive, edges restricted to `edges` with both ends alive), ordered by least
// vertex.
std::vector<VertexSet> components(const Graph& g, VertexSet alive,
                                  const EdgeSet& edges);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g, VertexSet alive);

// Subgraph induced on `keep`, relabelled 0..|keep|-1 in increasing order.
// When `old_ids` is given it receives the original id of each new vertex.
Graph induced_subgraph(const Graph& g, VertexSet keep,
                       std::vector<int>* old_ids = nullptr);

// The spanning subgraph with the listed edges removed. Vertex ids are kept;
// the surviving edges are re-indexed canonically.
Graph delete_edges(const Graph& g, const EdgeSet& removed);

struct ContractionResult {
  Graph quotient;                    // parallel edges merged, loops dropped
  bool has_loop = false;             // some non-contracted edge became a loop
  std::vector<VertexSet> origin;     // original vertices of each quotient vertex
  std::vector<bool> from_contraction;  // origin has more than one vertex
  std::vector<int> class_of;         // original vertex -> quotient vertex
};

// Shrinks every component of (V, s) to a single vertex. Quotient vertices
// are ordered by their least original vertex.
ContractionResult contract(const Graph& g, const EdgeSet& s);

// Minimum number of colors in a proper vertex coloring.
int chromatic_number(const Graph& g);

// Same, for a contraction; std::nullopt when the contraction has a loop
// (no proper coloring exists).
std::optional<int> chromatic_number(const ContractionResult& c);

// A proper coloring with colors 0..k-1 if one exists.
std::optional<std::vector<int>> find_coloring(const Graph& g, int k);

}  // namespace sigraph

#endif  // SIGRAPH_GRAPH_H_
