#ifndef SIGRAPH_PETERSEN_H_
#define SIGRAPH_PETERSEN_H_

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "sigraph/cycles.h"
#include "sigraph/graph.h"
#include "sigraph/permutation.h"

namespace sigraph {

// Vertex v of the Petersen graph is a 2-subset {i, j} of {1..5}; ids follow
// lexicographic order 12, 13, 14, 15, 23, 24, 25, 34, 35, 45. Two vertices
// are adjacent exactly when their pairs are disjoint.
struct PetersenLabeling {
  std::array<std::pair<int, int>, 10> pair_of;

  // Vertex id of {i, j}, 1 <= i, j <= 5, i != j, in either order.
  int vertex_of(int i, int j) const;
  // Vertex id from a two-digit code such as 45.
  int vertex_of_code(int code) const;
  // "12", "45", ...
  std::string name(int v) const;
};

struct Petersen {
  Graph graph;
  PetersenLabeling labeling;
};

Petersen petersen();

// Shared immutable instances.
const Graph& petersen_graph();
const PetersenLabeling& petersen_labeling();

// The 12 pentagons and 10 hexagons, as returned by enumerate_cycles(P, 6).
const std::vector<Cycle>& petersen_short_circles();

// True when g is the canonically labelled Petersen graph.
bool is_petersen(const Graph& g);

// Edge index of v_a v_b where a and b are two-digit codes, e.g. (12, 34).
int petersen_edge(int code_a, int code_b);
EdgeSet petersen_edges(const std::vector<std::pair<int, int>>& code_pairs);
VertexSet petersen_vertices(const std::vector<int>& codes);

// The hexagon E(P \ N[v]).
Cycle hexagon_of_vertex(int v);

// X_m: the four vertices whose pair contains m (1 <= m <= 5).
VertexSet maximum_independent_set(int m);

// M_{3(m)} = E(P \ X_m), three edges pairwise at distance 3.
EdgeSet distance_three_matching(int m);

// Vertex permutation induced by a permutation of {1..5} (degree 5, acting on
// 0..4): v_{ij} -> v_{i' j'}.
Permutation induced_permutation(const Permutation& base);

// The permutation of {1..5} inducing a Petersen automorphism.
Permutation base_permutation(const Permutation& vertex_perm);

// Distance between edges e and f in the line graph (adjacent edges: 1).
int edge_distance(const Graph& g, int e, int f);

bool is_matching(const Graph& g, const EdgeSet& m);

// Every matching of g, including the empty one, in increasing order of
// size and then of edge mask.
std::vector<EdgeSet> matchings(const Graph& g);

enum class MatchingClass {
  kEmpty,
  kM1,
  kM22,
  kM23,
  kM32,
  kM33,
  kM3Prime,
  kM3TwoThree,
  kM4Prime,
  kM5MinusEdge,
  kM5,
};

// "EMPTY", "M1", "M22", ..., "M5".
const char* to_string(MatchingClass c);

// Automorphism type of a matching of the Petersen graph. Throws
// std::invalid_argument if m is not a matching.
MatchingClass classify_matching(const EdgeSet& m);

}  // namespace sigraph

#endif  // SIGRAPH_PETERSEN_H_
