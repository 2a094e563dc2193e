#ifndef SIGRAPH_CLUSTERING_H_
#define SIGRAPH_CLUSTERING_H_

#include <optional>
#include <vector>

#include "sigraph/signed_graph.h"

namespace sigraph {

struct Clusterability {
  bool clusterable = false;
  // When clusterable: a cluster id per vertex using the fewest clusters.
  std::vector<int> clusters;
  // Otherwise: a circle with exactly one negative edge.
  std::optional<Cycle> circle;
};

// A signed graph is clusterable iff contracting its positive edges leaves no
// loop. The witness circle is a positive path closed by a negative edge.
Clusterability is_clusterable(const SignedGraph& s);

// Same test on the spanning subgraph with edge set `present`.
bool is_clusterable(const Graph& g, const EdgeSet& negative, const EdgeSet& present);

// Chromatic number of the positive-edge contraction; absent when it has a
// loop.
std::optional<int> cluster_number(const SignedGraph& s);

// Fewest edge deletions that make s clusterable. Deleting E^- always works,
// so the search stops at |E^-|. Throws SizeLimitError above 20 edges.
struct Inclusterability {
  int q = 0;
  EdgeSet deletion;
};
inline constexpr int kInclusterabilityEdgeLimit = 20;
Inclusterability inclusterability_index(const SignedGraph& s);

struct ClusterReport {
  bool clusterable = false;
  std::optional<int> clun;
  int q = 0;
  std::vector<int> clusters;
  EdgeSet deletion;
};
ClusterReport cluster_report(const SignedGraph& s);

// Largest inclusterability index over signatures of g. With the shortcut,
// only signatures whose negative edges form a matching are searched, which
// requires maximum degree at most 3 (std::invalid_argument otherwise);
// without it every one of the 2^|E| signatures is tried.
int max_inclusterability(const Graph& g, bool cubic_shortcut);

// Largest index over the given negative edge sets.
int max_inclusterability(const Graph& g, const std::vector<EdgeSet>& family);

}  // namespace sigraph

#endif  // SIGRAPH_CLUSTERING_H_
