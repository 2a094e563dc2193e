#ifndef SIGRAPH_PERMUTATION_H_
#define SIGRAPH_PERMUTATION_H_

#include <compare>
#include <vector>

#include "sigraph/common.h"

namespace sigraph {

// A permutation of {0, ..., degree-1} stored as its image vector.
//
// Permutations act on the right and products read left to right:
// (a * b)(x) applies a first, then b. Conjugation a^b is b^-1 * a * b, which
// relabels the cycles of a by b.
class Permutation {
 public:
  Permutation() = default;
  // Throws std::invalid_argument unless `images` is a bijection.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[x]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  bool is_identity() const;
  int order() const;
  bool is_even() const;

  // Image of a vertex set.
  VertexSet apply(VertexSet set) const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

// b^-1 * a * b.
Permutation conjugate(const Permutation& a, const Permutation& b);

}  // namespace sigraph

#endif  // SIGRAPH_PERMUTATION_H_
