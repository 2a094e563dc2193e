#ifndef SIGRAPH_SIGNED_GROUPS_H_
#define SIGRAPH_SIGNED_GROUPS_H_

#include <optional>
#include <vector>

#include "sigraph/automorphisms.h"
#include "sigraph/finite_group.h"
#include "sigraph/signed_graph.h"
#include "sigraph/switching_permutation.h"

namespace sigraph {

// Elements are kernel-class representatives (sp_canonical) and products
// are reduced the same way.
using SwitchingGroup = FiniteGroup<SwitchingPermutation>;

SwitchingGroup make_switching_group(const Graph& g,
                                    std::vector<SwitchingPermutation> elements);

// The 120 automorphisms of the Petersen graph, computed once.
const std::vector<Permutation>& petersen_automorphisms();

// Sign-preserving graph automorphisms.
PermutationGroup aut_signed(const SignedGraph& s);

// All kernel classes (zeta, alpha) with s^(zeta alpha) = s, by exhaustive
// scan of switching sets avoiding vertex 0 against every automorphism of
// the underlying graph. Requires a connected graph.
SwitchingGroup swaut(const SignedGraph& s);

// The element of swaut(s) whose permutation is xi, if there is one.
std::optional<SwitchingPermutation> lift_permutation(const SignedGraph& s,
                                                     const Permutation& xi);

// Petersen only: copies = |Aut P| / |Aut s|, switching classes =
// |Aut P| / |SwAut s|.
struct OrbitCounts {
  int copies = 0;
  int switching_classes = 0;
};
OrbitCounts orbit_counts(const SignedGraph& s);

// One representative per left coset of Aut s in SwAut s.
struct CosetSystem {
  std::vector<SwitchingPermutation> representatives;
  std::vector<Permutation> subgroup;                  // Aut s
  bool conjugation_closed = false;
};

// Chooses representatives automatically. Switching sets have at most half
// the vertices. For each orbit of cosets under conjugation by Aut s, the
// first coset gets the least element that its stabilizer fixes, and the
// rest of the orbit gets conjugates of it; conjugation_closed reports
// whether that succeeded. Throws std::invalid_argument unless h <= g.
CosetSystem coset_system(const SignedGraph& s, const SwitchingGroup& g,
                         const PermutationGroup& h);

// Validates explicit representatives: one per coset, distinct switching
// classes, all in g. Throws std::invalid_argument otherwise.
CosetSystem coset_system_from(const SignedGraph& s, const SwitchingGroup& g,
                              const PermutationGroup& h,
                              std::vector<SwitchingPermutation> representatives);

// Every conjugate of a representative by Aut s is again a representative,
// modulo the kernel.
bool is_conjugation_closed(const Graph& g,
                           const std::vector<SwitchingPermutation>& representatives,
                           const std::vector<Permutation>& subgroup);

// Index of the representative whose coset contains a, and the Aut s factor:
// a = rep * alpha modulo the kernel.
struct CosetPosition {
  int representative = 0;
  Permutation alpha;
};
CosetPosition locate(const Graph& g, const CosetSystem& cs,
                     const SwitchingPermutation& a);

// (rep_x alpha)(rep_y beta) = (+/- rep_u) nu (alpha beta) with
// U = X + Y^(alpha^-1 gamma_X^-1) and nu = gamma_U^-1 gamma_X gamma_Y^(alpha^-1).
struct ProductDecomposition {
  int representative = 0;
  bool negated = false;
  Permutation nu;
  Permutation alpha_beta;
};

// Throws std::logic_error if the system is not conjugation-closed.
ProductDecomposition general_product(const CosetSystem& cs, int rep_x,
                                     const Permutation& alpha, int rep_y,
                                     const Permutation& beta);

// Recombines a decomposition into a single switching permutation.
SwitchingPermutation recombine(const CosetSystem& cs, const ProductDecomposition& d);

}  // namespace sigraph

#endif  // SIGRAPH_SIGNED_GROUPS_H_
