#include "sigraph/signed_groups.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "sigraph/petersen.h"

namespace sigraph {

SwitchingGroup make_switching_group(const Graph& g,
                                    std::vector<SwitchingPermutation> elements) {
  for (auto& e : elements) e = sp_canonical(g, e);
  return SwitchingGroup(std::move(elements),
                        [g](const SwitchingPermutation& a,
                            const SwitchingPermutation& b) {
                          return sp_canonical(g, sp_multiply(a, b));
                        });
}

const std::vector<Permutation>& petersen_automorphisms() {
  static const std::vector<Permutation> list = automorphism_list(petersen_graph());
  return list;
}

namespace {

std::vector<Permutation> graph_automorphism_list(const Graph& g) {
  if (is_petersen(g)) return petersen_automorphisms();
  return automorphism_list(g);
}

void require_connected(const Graph& g, const char* what) {
  if (!is_connected(g)) {
    throw std::invalid_argument(std::string(what) + " needs a connected graph");
  }
}

}  // namespace

PermutationGroup aut_signed(const SignedGraph& s) {
  std::vector<Permutation> keep;
  for (const Permutation& a : graph_automorphism_list(s.graph())) {
    if (permute_edges(s.graph(), a, s.negative_edges()) == s.negative_edges()) {
      keep.push_back(a);
    }
  }
  return make_permutation_group(std::move(keep));
}

SwitchingGroup swaut(const SignedGraph& s) {
  const Graph& g = s.graph();
  const int n = g.vertex_count();
  require_search_size(n, "swaut");
  require_connected(g, "swaut");

  // Cuts of every switching set that avoids vertex 0, in Gray-code order.
  std::vector<std::pair<VertexSet, EdgeSet>> cuts;
  cuts.reserve(std::size_t{1} << (n - 1));
  VertexSet x = 0;
  EdgeSet boundary;
  cuts.emplace_back(x, boundary);
  for (std::uint32_t i = 1; i < (std::uint32_t{1} << (n - 1)); ++i) {
    const int v = std::countr_zero(i) + 1;
    x ^= vertex_bit(v);
    boundary ^= g.incident_edges(v);
    cuts.emplace_back(x, boundary);
  }

  // s^(X alpha) = s  <=>  E^- + cut(X) = (E^-)^(alpha^-1).
  std::vector<SwitchingPermutation> found;
  for (const Permutation& alpha : graph_automorphism_list(g)) {
    const EdgeSet target =
        s.negative_edges() ^ permute_edges(g, alpha.inverse(), s.negative_edges());
    for (const auto& [set, edges] : cuts) {
      if (edges == target) found.push_back({set, alpha});
    }
  }
  return make_switching_group(g, std::move(found));
}

std::optional<SwitchingPermutation> lift_permutation(const SignedGraph& s,
                                                     const Permutation& xi) {
  const Graph& g = s.graph();
  require_connected(g, "lift_permutation");
  // The switching must turn E^- into (E^-)^(xi^-1); that sign change is a
  // cut exactly when it is balanced as a signature.
  const EdgeSet change =
      s.negative_edges() ^ permute_edges(g, xi.inverse(), s.negative_edges());
  const BalanceReport b = is_balanced(SignedGraph(g, change));
  if (!b.balanced) return std::nullopt;
  return SwitchingPermutation{b.side, xi};
}

OrbitCounts orbit_counts(const SignedGraph& s) {
  if (!is_petersen(s.graph())) {
    throw std::invalid_argument("orbit_counts needs a Petersen signature");
  }
  const int aut = aut_signed(s).order();
  const int sw = swaut(s).order();
  return {120 / aut, 120 / sw};
}

bool is_conjugation_closed(const Graph& g,
                           const std::vector<SwitchingPermutation>& representatives,
                           const std::vector<Permutation>& subgroup) {
  std::set<SwitchingPermutation> reps;
  for (const auto& r : representatives) reps.insert(sp_canonical(g, r));
  for (const auto& r : representatives) {
    for (const Permutation& mu : subgroup) {
      if (!reps.count(sp_canonical(g, sp_conjugate(r, mu)))) return false;
    }
  }
  return true;
}

namespace {

void require_subgroup(const Graph& g, const SwitchingGroup& big,
                      const PermutationGroup& h) {
  for (const Permutation& a : h.elements()) {
    if (!big.contains(sp_canonical(g, SwitchingPermutation::automorphism(a)))) {
      throw std::invalid_argument("Aut is not a subgroup of the switching group");
    }
  }
}

// Of X and its complement, the smaller; the one avoiding vertex 0 on a tie.
VertexSet preferred_set(const Graph& g, VertexSet canonical) {
  const VertexSet other = g.all_vertex_set() & ~canonical;
  return popcount(other) < popcount(canonical) ? other : canonical;
}

}  // namespace

CosetSystem coset_system(const SignedGraph& s, const SwitchingGroup& group,
                         const PermutationGroup& h) {
  const Graph& g = s.graph();
  require_connected(g, "coset_system");
  require_subgroup(g, group, h);

  // Canonical switching set -> permutations of the elements with that set.
  // Each entry is one left coset of Aut s.
  std::map<VertexSet, std::vector<Permutation>> cosets;
  for (const SwitchingPermutation& e : group.elements()) {
    cosets[e.x].push_back(e.alpha);
  }
  for (auto& [key, perms] : cosets) std::sort(perms.begin(), perms.end());

  std::map<VertexSet, SwitchingPermutation> chosen;
  for (const auto& [key, perms] : cosets) {
    if (chosen.count(key)) continue;
    std::vector<Permutation> stabilizer;
    for (const Permutation& mu : h.elements()) {
      if (canonical_switching_set(g, mu.apply(key)) == key) stabilizer.push_back(mu);
    }
    const VertexSet set = preferred_set(g, key);
    std::optional<SwitchingPermutation> pick;
    for (const Permutation& alpha : perms) {
      const SwitchingPermutation r{set, alpha};
      const bool fixed = std::all_of(
          stabilizer.begin(), stabilizer.end(), [&](const Permutation& mu) {
            return sp_equivalent(g, sp_conjugate(r, mu), r);
          });
      if (fixed) {
        pick = r;
        break;
      }
    }
    if (!pick) pick = SwitchingPermutation{set, perms.front()};
    for (const Permutation& mu : h.elements()) {
      const SwitchingPermutation image = sp_conjugate(*pick, mu);
      chosen.emplace(canonical_switching_set(g, image.x), image);
    }
  }

  CosetSystem out;
  for (const auto& [key, rep] : chosen) out.representatives.push_back(rep);
  out.subgroup = h.elements();
  out.conjugation_closed =
      is_conjugation_closed(g, out.representatives, out.subgroup);
  return out;
}

CosetSystem coset_system_from(const SignedGraph& s, const SwitchingGroup& group,
                              const PermutationGroup& h,
                              std::vector<SwitchingPermutation> representatives) {
  const Graph& g = s.graph();
  require_connected(g, "coset_system_from");
  require_subgroup(g, group, h);
  if (static_cast<int>(representatives.size()) * h.order() != group.order()) {
    throw std::invalid_argument("wrong number of coset representatives");
  }
  std::set<VertexSet> classes;
  for (const auto& r : representatives) {
    const SwitchingPermutation c = sp_canonical(g, r);
    if (!group.contains(c)) {
      throw std::invalid_argument("representative is not a switching automorphism");
    }
    if (!classes.insert(c.x).second) {
      throw std::invalid_argument("two representatives share a switching class");
    }
  }
  CosetSystem out;
  out.representatives = std::move(representatives);
  out.subgroup = h.elements();
  out.conjugation_closed =
      is_conjugation_closed(g, out.representatives, out.subgroup);
  return out;
}

CosetPosition locate(const Graph& g, const CosetSystem& cs,
                     const SwitchingPermutation& a) {
  const VertexSet key = canonical_switching_set(g, a.x);
  for (size_t i = 0; i < cs.representatives.size(); ++i) {
    const SwitchingPermutation& r = cs.representatives[i];
    if (canonical_switching_set(g, r.x) == key) {
      return {static_cast<int>(i), r.alpha.inverse() * a.alpha};
    }
  }
  throw std::invalid_argument("element lies in no listed coset");
}

ProductDecomposition general_product(const CosetSystem& cs, int rep_x,
                                     const Permutation& alpha, int rep_y,
                                     const Permutation& beta) {
  if (!cs.conjugation_closed) {
    throw std::logic_error("coset system is not closed under conjugation");
  }
  const SwitchingPermutation& rx = cs.representatives.at(rep_x);
  const SwitchingPermutation& ry = cs.representatives.at(rep_y);
  const int n = rx.vertex_count();
  const Permutation alpha_inv = alpha.inverse();
  const VertexSet u = rx.x ^ (alpha_inv * rx.alpha.inverse()).apply(ry.x);
  const VertexSet u_complement = all_vertices(n) & ~u;
  for (size_t i = 0; i < cs.representatives.size(); ++i) {
    const SwitchingPermutation& ru = cs.representatives[i];
    if (ru.x != u && ru.x != u_complement) continue;
    ProductDecomposition d;
    d.representative = static_cast<int>(i);
    d.negated = ru.x != u;
    d.nu = ru.alpha.inverse() * rx.alpha * conjugate(ry.alpha, alpha_inv);
    d.alpha_beta = alpha * beta;
    return d;
  }
  throw std::logic_error("product switching set matches no representative");
}

SwitchingPermutation recombine(const CosetSystem& cs, const ProductDecomposition& d) {
  SwitchingPermutation r = cs.representatives.at(d.representative);
  if (d.negated) r = sp_negate(r);
  return {r.x, r.alpha * d.nu * d.alpha_beta};
}

}  // namespace sigraph
