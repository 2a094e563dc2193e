#ifndef SIGRAPH_REFERENCE_PRODUCTS_H_
#define SIGRAPH_REFERENCE_PRODUCTS_H_

#include <string>
#include <vector>

#include "sigraph/signed_graph.h"
#include "sigraph/switching_permutation.h"

namespace sigraph {

// Published structure of the switching automorphism groups of P32 (negative
// edges 14.25, 15.34, 24.35) and P33 (negative edges M_3(5)), kept as data
// and checked against sp_multiply.

// upsilon = z{15,24}(15)(24) and omega = z{34,25,13,24}(145).
SwitchingPermutation p32_upsilon();
SwitchingPermutation p32_omega();

// Aut P32 as base permutations: id, (123), (321), (12)(45), (23)(45),
// (13)(45), in that order.
const std::vector<std::string>& p32_automorphism_names();

// The published representative system: identity, upsilon^l for l in
// <(123)>, omega^m for m in Aut P32 (in the order above).
std::vector<SwitchingPermutation> p32_representatives();

// Identity, then z_{N[j5]}(j5) for j = 1..4.
std::vector<SwitchingPermutation> p33_representatives();

// Element of SwAut lying over xi according to the published inversion
// formulas; both return the permutation xi with the switching set X.
SwitchingPermutation p32_lift(const Permutation& base_xi);
SwitchingPermutation p33_lift(const Permutation& base_xi);

struct ProductCheck {
  std::string name;
  std::string expected;
  std::string actual;
  bool ok = false;
  // Equality in SwAut, where X and its complement coincide.
  bool ok_modulo_kernel = false;
};

// Every cell of the four P32 representative tables plus the worked
// examples. Cells whose value is the identity class are compared modulo
// the kernel; the rest exactly, sign included.
std::vector<ProductCheck> check_p32_tables();

// The four product rules of SwAut P33 over all 120 x 120 pairs, compared
// modulo the kernel; one check per rule.
std::vector<ProductCheck> check_p33_table();

// The published conjugates W^m and Z^m with the permutations of omega^m.
std::vector<ProductCheck> check_p32_transforms();

}  // namespace sigraph

#endif  // SIGRAPH_REFERENCE_PRODUCTS_H_
