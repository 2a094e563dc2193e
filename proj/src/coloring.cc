#include "sigraph/coloring.h"

#include <algorithm>
#include <stdexcept>

#include "sigraph/frustration.h"
#include "sigraph/petersen.h"

namespace sigraph {

bool is_proper_coloration(const SignedGraph& s, const std::vector<int>& kappa) {
  if (static_cast<int>(kappa.size()) != s.vertex_count()) return false;
  const Graph& g = s.graph();
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    if (kappa[e.v] == s.sign(i) * kappa[e.u]) return false;
  }
  return true;
}

namespace {

// Backtracking over vertices in an order where most vertices have an
// earlier neighbour, so violations are caught early.
class ColorSearch {
 public:
  ColorSearch(const SignedGraph& s, int k, bool zero_free) {
    require_search_size(s.vertex_count(), "coloration search");
    for (int c = -k; c <= k; ++c) {
      if (c != 0 || !zero_free) palette_.push_back(c);
    }
    const Graph& g = s.graph();
    VertexSet placed = 0;
    for (int step = 0; step < g.vertex_count(); ++step) {
      int pick = -1;
      int best = -1;
      for (int v = 0; v < g.vertex_count(); ++v) {
        if (contains(placed, v)) continue;
        const int score = popcount(g.neighbors(v) & placed);
        if (score > best) {
          best = score;
          pick = v;
        }
      }
      order_.push_back(pick);
      placed |= vertex_bit(pick);
      // Earlier neighbours of pick with the sign of the joining edge.
      std::vector<std::pair<int, int>> back;
      for_each_vertex(g.neighbors(pick) & (placed & ~vertex_bit(pick)), [&](int u) {
        back.emplace_back(u, s.sign(*g.edge_index(u, pick)));
      });
      constraints_.push_back(std::move(back));
    }
    kappa_.assign(g.vertex_count(), 0);
  }

  std::int64_t count() { return count_from(0); }

  std::optional<std::vector<int>> find() {
    if (find_from(0)) return kappa_;
    return std::nullopt;
  }

 private:
  bool fits(size_t pos, int c) const {
    for (const auto& [u, sign] : constraints_[pos]) {
      if (c == sign * kappa_[u]) return false;
    }
    return true;
  }

  std::int64_t count_from(size_t pos) {
    if (pos == order_.size()) return 1;
    std::int64_t total = 0;
    for (const int c : palette_) {
      if (!fits(pos, c)) continue;
      kappa_[order_[pos]] = c;
      total += count_from(pos + 1);
    }
    return total;
  }

  bool find_from(size_t pos) {
    if (pos == order_.size()) return true;
    for (const int c : palette_) {
      if (!fits(pos, c)) continue;
      kappa_[order_[pos]] = c;
      if (find_from(pos + 1)) return true;
    }
    return false;
  }

  std::vector<int> palette_;
  std::vector<int> order_;
  std::vector<std::vector<std::pair<int, int>>> constraints_;
  std::vector<int> kappa_;
};

}  // namespace

std::int64_t count_colorations(const SignedGraph& s, int k, bool zero_free) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  if (k > kMaxColorK) {
    throw SizeLimitError("coloration counts are limited to k <= " +
                         std::to_string(kMaxColorK));
  }
  return ColorSearch(s, k, zero_free).count();
}

std::optional<std::vector<int>> find_coloration(const SignedGraph& s, int k,
                                                bool zero_free) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  return ColorSearch(s, k, zero_free).find();
}

ChromaticNumbers chromatic_numbers(const SignedGraph& s) {
  ChromaticNumbers out;
  const int n = s.vertex_count();
  // Giving every vertex its own absolute value always works, so both
  // searches stop by k = n.
  for (out.chi = 0; out.chi <= n; ++out.chi) {
    if (find_coloration(s, out.chi, false)) break;
  }
  for (out.chi_star = 1; out.chi_star <= n; ++out.chi_star) {
    if (find_coloration(s, out.chi_star, true)) break;
  }
  if (n == 0) out.chi_star = 0;
  return out;
}

ExpansionCheck balanced_expansion_check(const SignedGraph& s, int mu) {
  ExpansionCheck out;
  out.direct = count_colorations(s, mu, false);
  const Graph& g = s.graph();
  for (int size = 0; size <= g.vertex_count(); ++size) {
    const auto sets = independent_sets(g, size);
    if (sets.empty()) break;
    for (const VertexSet w : sets) {
      out.expanded += count_colorations(delete_vertices(s, w), mu, true);
    }
  }
  return out;
}

int chi3_difference(const SignedGraph& s) {
  if (!is_petersen(s.graph())) {
    throw std::invalid_argument("chi3_difference needs a Petersen signature");
  }
  const SignedGraph minus = negate(s);
  const int c6 =
      negative_circle_counts(petersen_short_circles(), s.negative_edges(), {6}).at(6);
  return 2 * alpha_k(minus, 0) + 2 * alpha_k(minus, 1) + 2 * alpha_k(minus, 2) -
         4 * c6;
}

bool switching_color_invariance_check(const SignedGraph& s,
                                      const SwitchingFunction& z) {
  const SignedGraph t = apply_switching(s, z);
  for (int k = 1; k <= kMaxColorK; ++k) {
    for (const bool zero_free : {false, true}) {
      if (count_colorations(s, k, zero_free) != count_colorations(t, k, zero_free)) {
        return false;
      }
    }
  }
  // Spot check of the bijection on one coloration of s per k.
  for (int k = 1; k <= kMaxColorK; ++k) {
    auto kappa = find_coloration(s, k, false);
    if (!kappa) continue;
    for (int v = 0; v < s.vertex_count(); ++v) (*kappa)[v] *= z.value(v);
    if (!is_proper_coloration(t, *kappa)) return false;
  }
  return true;
}

}  // namespace sigraph
