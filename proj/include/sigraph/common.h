#ifndef SIGRAPH_COMMON_H_
#define SIGRAPH_COMMON_H_

#include <bit>
#include <bitset>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace sigraph {

// Storage limits. Graphs are small; vertex sets are 32-bit masks and edge
// sets are fixed 128-bit sets indexed by canonical edge order.
inline constexpr int kMaxVertices = 32;
inline constexpr int kMaxEdges = 128;

// Exhaustive searches (automorphisms, cycles, colorings, switchings) refuse
// inputs above this vertex count.
inline constexpr int kSearchVertexLimit = 16;

using VertexSet = std::uint32_t;
using EdgeSet = std::bitset<kMaxEdges>;

// Raised when an input exceeds the budget of an exhaustive search.
class SizeLimitError : public std::length_error {
 public:
  using std::length_error::length_error;
};

inline int popcount(VertexSet x) { return std::popcount(x); }

inline constexpr VertexSet vertex_bit(int v) { return VertexSet{1} << v; }

inline constexpr VertexSet all_vertices(int n) {
  return n >= 32 ? ~VertexSet{0} : (VertexSet{1} << n) - 1;
}

inline bool contains(VertexSet set, int v) { return (set >> v) & 1u; }

inline int lowest_vertex(VertexSet set) { return std::countr_zero(set); }

inline void require_search_size(int vertex_count, const char* what) {
  if (vertex_count > kSearchVertexLimit) {
    throw SizeLimitError(std::string(what) + ": vertex count " +
                         std::to_string(vertex_count) + " exceeds limit " +
                         std::to_string(kSearchVertexLimit));
  }
}

// Numeric order on edge sets, reading bit i as 2^i.
inline bool edge_set_less(const EdgeSet& a, const EdgeSet& b) {
  for (int i = kMaxEdges - 1; i >= 0; --i) {
    if (a.test(i) != b.test(i)) return b.test(i);
  }
  return false;
}

// Calls f(v) for every vertex in the set, in increasing order.
template <typename F>
void for_each_vertex(VertexSet set, F&& f) {
  while (set != 0) {
    const int v = std::countr_zero(set);
    f(v);
    set &= set - 1;
  }
}

}  // namespace sigraph

#endif  // SIGRAPH_COMMON_H_
