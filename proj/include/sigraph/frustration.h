#ifndef SIGRAPH_FRUSTRATION_H_
#define SIGRAPH_FRUSTRATION_H_

#include <optional>

#include "sigraph/signed_graph.h"

namespace sigraph {

struct FrustrationIndex {
  int value = 0;
  // E^- of a minimizing switching; deleting or negating it balances s.
  EdgeSet balancing_edges;
  // The minimizing switching set (least vertex excluded).
  VertexSet switching = 0;
};

struct FrustrationNumber {
  int value = 0;
  VertexSet balancing_vertices = 0;
};

struct FrustrationReport {
  int l = 0;
  int l0 = 0;
  EdgeSet witness_edges;
  VertexSet witness_vertices = 0;
};

// Minimum |E^-| over all switchings, by Gray-code enumeration of the
// switching sets that avoid vertex 0. Ties keep the first set reached.
FrustrationIndex frustration_index(const SignedGraph& s);

// Minimum number of vertices whose deletion leaves s balanced. Subsets are
// tried by size, then in increasing mask order.
FrustrationNumber frustration_number(const SignedGraph& s);

FrustrationReport frustration_report(const SignedGraph& s);

// |E^-(s)| equals the frustration index.
bool is_minimal(const SignedGraph& s);

// A vertex set whose cut has more negative than positive edges, if any.
// Returns the least such mask among sets avoiding vertex 0.
std::optional<VertexSet> cut_dominance_check(const SignedGraph& s);

// Number of independent k-sets W with s \ W balanced. k in {0, 1, 2}.
int alpha_k(const SignedGraph& s, int k);

// The switching with fewest negative edges; ties go to the numerically
// least negative-edge set. Returns the switched signature and the switching
// that produces it.
struct MinimalRepresentative {
  SignedGraph signature;
  SwitchingFunction switching;
};
MinimalRepresentative minimal_representative(const SignedGraph& s);

}  // namespace sigraph

#endif  // SIGRAPH_FRUSTRATION_H_
