#include "sigraph/switching_permutation.h"

#include <stdexcept>

namespace sigraph {

SwitchingPermutation sp_multiply(const SwitchingPermutation& a,
                                 const SwitchingPermutation& b) {
  if (a.vertex_count() != b.vertex_count()) {
    throw std::invalid_argument("switching permutations of different graphs");
  }
  return {a.x ^ a.alpha.inverse().apply(b.x), a.alpha * b.alpha};
}

SwitchingPermutation sp_inverse(const SwitchingPermutation& a) {
  return {a.alpha.apply(a.x), a.alpha.inverse()};
}

SwitchingPermutation sp_conjugate(const SwitchingPermutation& a,
                                  const Permutation& mu) {
  return {mu.apply(a.x), conjugate(a.alpha, mu)};
}

SwitchingPermutation sp_negate(const SwitchingPermutation& a) {
  return {all_vertices(a.vertex_count()) & ~a.x, a.alpha};
}

SwitchingPermutation sp_canonical(const Graph& g, const SwitchingPermutation& a) {
  return {canonical_switching_set(g, a.x), a.alpha};
}

bool sp_equivalent(const Graph& g, const SwitchingPermutation& a,
                   const SwitchingPermutation& b) {
  return sp_canonical(g, a) == sp_canonical(g, b);
}

SignedGraph sp_act(const SignedGraph& s, const SwitchingPermutation& a) {
  return permute(switch_set(s, a.x), a.alpha);
}

}  // namespace sigraph
