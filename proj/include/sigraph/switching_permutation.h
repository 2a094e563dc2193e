#ifndef SIGRAPH_SWITCHING_PERMUTATION_H_
#define SIGRAPH_SWITCHING_PERMUTATION_H_

#include <compare>

#include "sigraph/permutation.h"
#include "sigraph/signed_graph.h"

namespace sigraph {

// The pair (zeta_X, alpha): switch the vertex set x, then permute by alpha.
// Comparison is exact; use sp_equivalent for equality modulo the kernel.
struct SwitchingPermutation {
  VertexSet x = 0;
  Permutation alpha;

  static SwitchingPermutation identity(int vertex_count) {
    return {0, Permutation::identity(vertex_count)};
  }
  static SwitchingPermutation automorphism(Permutation a) { return {0, std::move(a)}; }

  int vertex_count() const { return alpha.degree(); }
  SwitchingFunction zeta() const { return {vertex_count(), x}; }

  friend bool operator==(const SwitchingPermutation&,
                         const SwitchingPermutation&) = default;
  friend auto operator<=>(const SwitchingPermutation&,
                          const SwitchingPermutation&) = default;
};

// (X, g)(Y, h) = (X + Y^(g^-1), gh), + being symmetric difference.
SwitchingPermutation sp_multiply(const SwitchingPermutation& a,
                                 const SwitchingPermutation& b);

// (X, g)^-1 = (X^g, g^-1).
SwitchingPermutation sp_inverse(const SwitchingPermutation& a);

// mu^-1 a mu for a graph automorphism mu: (X^mu, g^mu).
SwitchingPermutation sp_conjugate(const SwitchingPermutation& a,
                                  const Permutation& mu);

// -zeta: the complementary switching set, same permutation.
SwitchingPermutation sp_negate(const SwitchingPermutation& a);

// Kernel-class representative on g (see canonical_switching_set).
SwitchingPermutation sp_canonical(const Graph& g, const SwitchingPermutation& a);

bool sp_equivalent(const Graph& g, const SwitchingPermutation& a,
                   const SwitchingPermutation& b);

// Switch by a.x, then permute by a.alpha.
SignedGraph sp_act(const SignedGraph& s, const SwitchingPermutation& a);

}  // namespace sigraph

#endif  // SIGRAPH_SWITCHING_PERMUTATION_H_
