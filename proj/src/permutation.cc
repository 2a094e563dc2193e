#include "sigraph/permutation.h"

#include <numeric>
#include <stdexcept>

namespace sigraph {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  std::vector<bool> hit(images_.size(), false);
  for (const int x : images_) {
    if (x < 0 || x >= degree() || hit[x]) {
      throw std::invalid_argument("image vector is not a bijection");
    }
    hit[x] = true;
  }
}

Permutation Permutation::identity(int degree) {
  std::vector<int> images(degree);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int x = 0; x < degree(); ++x) inv[images_[x]] = x;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

bool Permutation::is_identity() const {
  for (int x = 0; x < degree(); ++x) {
    if (images_[x] != x) return false;
  }
  return true;
}

int Permutation::order() const {
  int result = 1;
  std::vector<bool> seen(images_.size(), false);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int length = 0;
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++length;
    }
    result = std::lcm(result, length);
  }
  return result;
}

bool Permutation::is_even() const {
  int transpositions = 0;
  std::vector<bool> seen(images_.size(), false);
  for (int x = 0; x < degree(); ++x) {
    if (seen[x]) continue;
    int length = 0;
    for (int y = x; !seen[y]; y = images_[y]) {
      seen[y] = true;
      ++length;
    }
    transpositions += length - 1;
  }
  return transpositions % 2 == 0;
}

VertexSet Permutation::apply(VertexSet set) const {
  VertexSet out = 0;
  for_each_vertex(set, [&](int v) { out |= vertex_bit(images_[v]); });
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) {
    throw std::invalid_argument("permutation degrees differ");
  }
  std::vector<int> images(a.images_.size());
  for (int x = 0; x < a.degree(); ++x) images[x] = b.images_[a.images_[x]];
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation conjugate(const Permutation& a, const Permutation& b) {
  return b.inverse() * a * b;
}

}  // namespace sigraph
