#ifndef SIGRAPH_CYCLES_H_
#define SIGRAPH_CYCLES_H_

#include <vector>

#include "sigraph/graph.h"

namespace sigraph {

// A circle given by its cyclic vertex sequence. Canonical form starts at the
// least vertex and walks towards the smaller of its two cycle neighbors.
struct Cycle {
  std::vector<int> vertices;
  EdgeSet edges;

  int length() const { return static_cast<int>(vertices.size()); }
  VertexSet vertex_set() const;

  friend bool operator==(const Cycle& a, const Cycle& b) {
    return a.vertices == b.vertices;
  }
};

// Validates that `vertices` is a circle of g (distinct, consecutive vertices
// adjacent, closing edge present, length >= 3) and returns it in canonical
// form. Throws std::invalid_argument otherwise.
Cycle make_cycle(const Graph& g, const std::vector<int>& vertices);

// True when the cycle's vertex sequence is a circle of g.
bool is_cycle_of(const Graph& g, const Cycle& c);

// Every circle of length <= max_len, each exactly once, sorted by length and
// then by canonical vertex sequence.
std::vector<Cycle> enumerate_cycles(const Graph& g, int max_len);

}  // namespace sigraph

#endif  // SIGRAPH_CYCLES_H_
