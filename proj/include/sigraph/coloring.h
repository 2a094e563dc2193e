#ifndef SIGRAPH_COLORING_H_
#define SIGRAPH_COLORING_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "sigraph/signed_graph.h"

namespace sigraph {

// Signed colors are integers in [-k, k]; zero-free colorations avoid 0.
// A coloration kappa is proper when kappa(w) != sign(vw) * kappa(v) on
// every edge vw.
inline constexpr int kMaxColorK = 2;

bool is_proper_coloration(const SignedGraph& s, const std::vector<int>& kappa);

// Number of proper k-colorations (2k+1 colors) or zero-free ones (2k colors).
// Throws SizeLimitError for k > kMaxColorK or more than kSearchVertexLimit
// vertices.
std::int64_t count_colorations(const SignedGraph& s, int k, bool zero_free);

// Some proper k-coloration, if any exists. Same limits on the vertex count;
// k itself is not budgeted because the search stops at the first hit.
std::optional<std::vector<int>> find_coloration(const SignedGraph& s, int k,
                                                bool zero_free);

struct ChromaticNumbers {
  int chi = 0;
  int chi_star = 0;
};

// Least k with a proper (resp. zero-free proper) k-coloration.
ChromaticNumbers chromatic_numbers(const SignedGraph& s);

// Both sides of chi(2mu+1) = sum over independent W of chi*_{s \ W}(2mu).
struct ExpansionCheck {
  std::int64_t direct = 0;
  std::int64_t expanded = 0;
  bool holds() const { return direct == expanded; }
};
ExpansionCheck balanced_expansion_check(const SignedGraph& s, int mu = 1);

// 2 alpha_0(-s) + 2 alpha_1(-s) + 2 alpha_2(-s) - 4 c6^-(s), which equals
// chi_s(3) - 120 on the Petersen graph.
int chi3_difference(const SignedGraph& s);

// Counts at k = 1, 2 with and without zero agree for s and s^z, and
// kappa -> z kappa carries one coloration of s per k to proper
// colorations of s^z.
bool switching_color_invariance_check(const SignedGraph& s,
                                      const SwitchingFunction& z);

}  // namespace sigraph

#endif  // SIGRAPH_COLORING_H_
