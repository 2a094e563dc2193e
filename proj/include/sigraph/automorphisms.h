#ifndef SIGRAPH_AUTOMORPHISMS_H_
#define SIGRAPH_AUTOMORPHISMS_H_

#include <vector>

#include "sigraph/finite_group.h"
#include "sigraph/graph.h"
#include "sigraph/permutation.h"

namespace sigraph {

using PermutationGroup = FiniteGroup<Permutation>;

// All adjacency-preserving vertex bijections, sorted by image vector.
// Backtracking over a colour-refined vertex partition. Throws SizeLimitError
// above kSearchVertexLimit vertices or kMaxGroupOrder automorphisms.
std::vector<Permutation> automorphism_list(const Graph& g);

PermutationGroup graph_automorphisms(const Graph& g);

PermutationGroup make_permutation_group(std::vector<Permutation> elements);

bool is_automorphism(const Graph& g, const Permutation& alpha);

// Image of an edge set under a vertex permutation that preserves g.
EdgeSet permute_edges(const Graph& g, const Permutation& alpha,
                      const EdgeSet& edges);

}  // namespace sigraph

#endif  // SIGRAPH_AUTOMORPHISMS_H_
