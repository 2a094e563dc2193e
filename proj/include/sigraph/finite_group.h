#ifndef SIGRAPH_FINITE_GROUP_H_
#define SIGRAPH_FINITE_GROUP_H_

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sigraph/common.h"

namespace sigraph {

// Groups are stored with a full Cayley table; larger groups are refused.
inline constexpr int kMaxGroupOrder = 1440;

// Raised when a claimed group fails closure, identity, inverse or
// associativity checks.
class GroupAxiomError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// An explicit finite group: an element list plus its Cayley table.
// T must be totally ordered and equality comparable. The group axioms are
// checked when the group is built.
template <typename T>
class FiniteGroup {
 public:
  using Multiply = std::function<T(const T&, const T&)>;

  FiniteGroup(std::vector<T> elements, Multiply multiply)
      : elements_(std::move(elements)), multiply_(std::move(multiply)) {
    const int n = order();
    if (n == 0) throw GroupAxiomError("empty element list");
    if (n > kMaxGroupOrder) {
      throw SizeLimitError("group order " + std::to_string(n) +
                           " exceeds limit " + std::to_string(kMaxGroupOrder));
    }
    for (int i = 0; i < n; ++i) {
      if (!index_.emplace(elements_[i], i).second) {
        throw GroupAxiomError("repeated element");
      }
    }
    table_.resize(static_cast<size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        const auto c = index_of(multiply_(elements_[a], elements_[b]));
        if (!c) throw GroupAxiomError("not closed under multiplication");
        table_[a * n + b] = *c;
      }
    }
    check_axioms();
  }

  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<T>& elements() const { return elements_; }
  const T& element(int i) const { return elements_[i]; }
  int identity() const { return identity_; }
  int multiply(int a, int b) const { return table_[a * order() + b]; }
  int inverse(int a) const { return inverse_[a]; }

  // Product of two arbitrary values under this group's multiplication rule.
  T product(const T& a, const T& b) const { return multiply_(a, b); }

  std::optional<int> index_of(const T& x) const {
    const auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(const T& x) const { return index_.count(x) > 0; }

  int element_order(int a) const {
    int k = 1;
    for (int x = a; x != identity_; x = multiply(x, a)) ++k;
    return k;
  }

  bool is_abelian() const {
    for (int a = 0; a < order(); ++a) {
      for (int b = a + 1; b < order(); ++b) {
        if (multiply(a, b) != multiply(b, a)) return false;
      }
    }
    return true;
  }

  // element order -> number of elements with that order
  std::map<int, int> order_histogram() const {
    std::map<int, int> h;
    for (int a = 0; a < order(); ++a) ++h[element_order(a)];
    return h;
  }

  // Indices of the subgroup generated by the given element indices, sorted.
  std::vector<int> generated_subgroup(std::span<const int> generators) const {
    std::vector<bool> in(order(), false);
    std::vector<int> members{identity_};
    in[identity_] = true;
    for (size_t head = 0; head < members.size(); ++head) {
      for (const int g : generators) {
        const int x = multiply(members[head], g);
        if (!in[x]) {
          in[x] = true;
          members.push_back(x);
        }
      }
    }
    std::sort(members.begin(), members.end());
    return members;
  }

  // Whether the listed element indices form a subgroup.
  bool is_subgroup(std::span<const int> members) const {
    std::vector<bool> in(order(), false);
    for (const int m : members) in[m] = true;
    if (members.empty() || !in[identity_]) return false;
    for (const int a : members) {
      if (!in[inverse(a)]) return false;
      for (const int b : members) {
        if (!in[multiply(a, b)]) return false;
      }
    }
    return true;
  }

 private:
  void check_axioms() {
    const int n = order();
    identity_ = -1;
    for (int e = 0; e < n && identity_ < 0; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) {
        ok = multiply(e, a) == a && multiply(a, e) == a;
      }
      if (ok) identity_ = e;
    }
    if (identity_ < 0) throw GroupAxiomError("no identity element");
    inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (multiply(a, b) == identity_ && multiply(b, a) == identity_) {
          inverse_[a] = b;
          break;
        }
      }
      if (inverse_[a] < 0) throw GroupAxiomError("element without inverse");
    }
    // Full associativity check below 128 elements; a fixed stride sample of
    // triples otherwise.
    const long long triples = static_cast<long long>(n) * n * n;
    const long long step = n < 128 ? 1 : triples / 2000003 + 1;
    for (long long t = 0; t < triples; t += step) {
      const int a = static_cast<int>(t / (static_cast<long long>(n) * n));
      const int b = static_cast<int>((t / n) % n);
      const int c = static_cast<int>(t % n);
      if (multiply(multiply(a, b), c) != multiply(a, multiply(b, c))) {
        throw GroupAxiomError("multiplication is not associative");
      }
    }
  }

  std::vector<T> elements_;
  Multiply multiply_;
  std::map<T, int> index_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  int identity_ = 0;
};

// True when every element of h belongs to g and h's multiplication agrees
// with g's on h.
template <typename T>
bool is_subgroup(const FiniteGroup<T>& h, const FiniteGroup<T>& g) {
  std::vector<int> members;
  for (const T& x : h.elements()) {
    const auto i = g.index_of(x);
    if (!i) return false;
    members.push_back(*i);
  }
  return g.is_subgroup(members);
}

enum class GroupKind { kTrivial, kZ2, kZ4, kV4, kS3, kD4, kQ8, kS4, kA5, kS5, kOther };

struct GroupLabel {
  GroupKind kind = GroupKind::kOther;
  int order = 0;

  // "S5", "D4", ... or "OTHER(12)".
  std::string name() const;

  friend bool operator==(const GroupLabel&, const GroupLabel&) = default;
};

// Catalog lookup from isomorphism invariants: order, commutativity and the
// element-order histogram.
GroupLabel identify_group(int order, bool abelian,
                          const std::map<int, int>& order_histogram);

template <typename T>
GroupLabel identify_group(const FiniteGroup<T>& g) {
  if (g.order() > 120) return GroupLabel{GroupKind::kOther, g.order()};
  return identify_group(g.order(), g.is_abelian(), g.order_histogram());
}

}  // namespace sigraph

#endif  // SIGRAPH_FINITE_GROUP_H_
