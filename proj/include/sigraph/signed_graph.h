#ifndef SIGRAPH_SIGNED_GRAPH_H_
#define SIGRAPH_SIGNED_GRAPH_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "sigraph/cycles.h"
#include "sigraph/graph.h"
#include "sigraph/permutation.h"

namespace sigraph {

// A graph with a sign on every edge, stored as the set of negative edges in
// canonical edge order.
class SignedGraph {
 public:
  SignedGraph() = default;
  // Throws std::invalid_argument if `negative` names a non-edge.
  SignedGraph(Graph graph, EdgeSet negative);

  static SignedGraph all_positive(Graph graph);
  static SignedGraph all_negative(Graph graph);

  const Graph& graph() const { return graph_; }
  int vertex_count() const { return graph_.vertex_count(); }
  int edge_count() const { return graph_.edge_count(); }

  const EdgeSet& negative_edges() const { return negative_; }
  EdgeSet positive_edges() const { return graph_.all_edges() & ~negative_; }
  int negative_count() const { return static_cast<int>(negative_.count()); }

  // +1 or -1.
  int sign(int edge) const { return negative_.test(edge) ? -1 : 1; }

  friend bool operator==(const SignedGraph&, const SignedGraph&) = default;

 private:
  Graph graph_;
  EdgeSet negative_;
};

// Petersen signatures as 15-bit masks: bit i set means canonical edge i is
// negative. Masks of 2^15 or more are rejected.
inline constexpr std::uint32_t kPetersenMaskLimit = 1u << 15;
SignedGraph petersen_signature(std::uint32_t mask);
std::uint32_t petersen_mask(const SignedGraph& s);

// A switching function, stored as the set of vertices where it is -1.
struct SwitchingFunction {
  int vertex_count = 0;
  VertexSet minus = 0;

  static SwitchingFunction identity(int vertex_count) { return {vertex_count, 0}; }
  static SwitchingFunction from_values(const std::vector<int>& values);

  int value(int v) const { return contains(minus, v) ? -1 : 1; }
  std::vector<int> values() const;

  // Representative of the kernel class: +1 at the least vertex of every
  // component of g. Idempotent.
  SwitchingFunction canonical_form(const Graph& g) const;

  friend bool operator==(const SwitchingFunction&, const SwitchingFunction&) = default;
  friend auto operator<=>(const SwitchingFunction&, const SwitchingFunction&) = default;
};

// Complements x within every component of g whose least vertex lies in x.
// The result switches the same signature as x.
VertexSet canonical_switching_set(const Graph& g, VertexSet x);

SignedGraph apply_switching(const SignedGraph& s, const SwitchingFunction& z);
SignedGraph switch_set(const SignedGraph& s, VertexSet x);
SignedGraph negate(const SignedGraph& s);

// Image of s under a graph automorphism alpha: sigma'(v^a w^a) = sigma(vw).
SignedGraph permute(const SignedGraph& s, const Permutation& alpha);

// Product of edge signs along c. Throws std::invalid_argument if c is not a
// circle of s.
int sign_of_circle(const SignedGraph& s, const Cycle& c);

struct BalanceReport {
  bool balanced = false;
  // When balanced: one side of a Harary bipartition. Switching it makes
  // every edge positive. It never contains the least vertex of a component.
  VertexSet side = 0;
  // When unbalanced: a negative circle.
  std::optional<Cycle> negative_circle;
};

BalanceReport is_balanced(const SignedGraph& s);

// Balance of the subgraph induced on `alive`, signs given by `negative`.
bool is_balanced(const Graph& g, const EdgeSet& negative, VertexSet alive);

bool is_antibalanced(const SignedGraph& s);

// A switching z with s1^z = s2, if one exists. Throws std::invalid_argument
// if the underlying graphs differ.
std::optional<SwitchingFunction> switching_equivalence(const SignedGraph& s1,
                                                       const SignedGraph& s2);

// length -> number of negative circles of that length.
std::map<int, int> negative_circle_counts(const SignedGraph& s,
                                          const std::set<int>& lengths);
std::map<int, int> negative_circle_counts(const std::vector<Cycle>& cycles,
                                          const EdgeSet& negative,
                                          const std::set<int>& lengths);

// Subgraph on V \ w, relabelled in increasing vertex order.
SignedGraph delete_vertices(const SignedGraph& s, VertexSet w);
SignedGraph delete_edges(const SignedGraph& s, const EdgeSet& removed);

}  // namespace sigraph

#endif  // SIGRAPH_SIGNED_GRAPH_H_
