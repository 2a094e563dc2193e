#ifndef SIGRAPH_PETERSEN_NOTATION_H_
#define SIGRAPH_PETERSEN_NOTATION_H_

#include <string>
#include <vector>

#include "sigraph/permutation.h"
#include "sigraph/switching_permutation.h"

namespace sigraph {

// Cycle notation on {1..n}: "(145)", "(12)(45)", "id" for the identity.
// Accepts "id", "()" and cycles separated by optional spaces. Throws
// std::invalid_argument on malformed input.
Permutation parse_cycles(const std::string& text, int degree = 5);
std::string format_cycles(const Permutation& p);

// Petersen vertex permutation written through its action on {1..5}.
Permutation petersen_perm(const std::string& cycles);
std::string format_petersen_perm(const Permutation& vertex_perm);

// Switching set as a pair list in vertex order, e.g. "{13,24,25,34}".
std::string format_switching_set(VertexSet x);
// Parses "{34,25,13,24}" (any order).
VertexSet parse_switching_set(const std::string& text);

// "z{15,24}(15)(24)", or just the permutation when nothing is switched.
std::string format_switching_permutation(const SwitchingPermutation& a);

}  // namespace sigraph

#endif  // SIGRAPH_PETERSEN_NOTATION_H_
