#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include "sigraph/automorphisms.h"
#include "sigraph/finite_group.h"
#include "sigraph/permutation.h"
#include "sigraph/petersen.h"
#include "sigraph/petersen_notation.h"

namespace sigraph {
namespace {

Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

// Closure of a generator set under composition.
PermutationGroup closure(const std::vector<Permutation>& gens) {
  std::set<Permutation> seen{Permutation::identity(gens[0].degree())};
  std::vector<Permutation> queue(seen.begin(), seen.end());
  for (size_t i = 0; i < queue.size(); ++i) {
    for (const Permutation& g : gens) {
      const Permutation p = queue[i] * g;
      if (seen.insert(p).second) queue.push_back(p);
    }
  }
  return make_permutation_group(std::vector<Permutation>(seen.begin(), seen.end()));
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

TEST(Permutation, ProductsReadLeftToRight) {
  const Permutation a = perm({1, 0, 2});  // (01)
  const Permutation b = perm({0, 2, 1});  // (12)
  EXPECT_EQ((a * b)(0), 2);
  EXPECT_EQ((a * b)(2), 1);
  EXPECT_EQ((b * a)(0), 1);
  EXPECT_EQ(conjugate(a, b), perm({2, 1, 0}));
  EXPECT_EQ(a * a.inverse(), Permutation::identity(3));
}

TEST(Permutation, Properties) {
  EXPECT_THROW(perm({0, 0, 1}), std::invalid_argument);
  EXPECT_THROW(perm({0, 3, 1}), std::invalid_argument);
  const Permutation c = perm({1, 2, 0, 4, 3});
  EXPECT_EQ(c.order(), 6);
  EXPECT_FALSE(c.is_even());
  EXPECT_EQ(c.apply(0b00011), 0b00110u);
  EXPECT_THROW(perm({1, 0}) * perm({0, 1, 2}), std::invalid_argument);
}

TEST(FiniteGroup, RejectsNonGroups) {
  const Permutation id = Permutation::identity(3);
  const Permutation c = perm({1, 2, 0});
  EXPECT_THROW(make_permutation_group({id, c}), GroupAxiomError);
  EXPECT_THROW(make_permutation_group({id, id}), GroupAxiomError);
  EXPECT_THROW(make_permutation_group({c}), GroupAxiomError);
  EXPECT_THROW(make_permutation_group({}), GroupAxiomError);
  EXPECT_NO_THROW(make_permutation_group({id, c, c * c}));
}

TEST(FiniteGroup, SubgroupsAndOrders) {
  const PermutationGroup s4 = closure({perm({1, 0, 2, 3}), perm({1, 2, 3, 0})});
  EXPECT_EQ(s4.order(), 24);
  EXPECT_EQ(s4.order_histogram(), (std::map<int, int>{{1, 1}, {2, 9}, {3, 8}, {4, 6}}));
  const int gen = *s4.index_of(perm({1, 2, 3, 0}));
  const auto sub = s4.generated_subgroup(std::vector<int>{gen});
  EXPECT_EQ(sub.size(), 4u);
  EXPECT_TRUE(s4.is_subgroup(sub));
  const PermutationGroup v4 = closure({perm({1, 0, 3, 2}), perm({2, 3, 0, 1})});
  EXPECT_TRUE(is_subgroup(v4, s4));
}

TEST(GroupLabel, ReferenceConstructions) {
  struct Case {
    std::vector<Permutation> gens;
    const char* name;
  };
  // Quaternion group through its left regular representation on
  // {1, i, j, k, -1, -i, -j, -k} = 0..7.
  const Permutation qi = perm({1, 4, 3, 6, 5, 0, 7, 2});
  const Permutation qj = perm({2, 7, 4, 1, 6, 3, 0, 5});
  const std::vector<Case> cases = {
      {{Permutation::identity(2)}, "1"},
      {{perm({1, 0})}, "Z2"},
      {{perm({1, 2, 3, 0})}, "Z4"},
      {{perm({1, 0, 3, 2}), perm({2, 3, 0, 1})}, "V4"},
      {{perm({1, 0, 2}), perm({1, 2, 0})}, "S3"},
      {{perm({1, 2, 3, 0}), perm({3, 2, 1, 0})}, "D4"},
      {{qi, qj}, "Q8"},
      {{perm({1, 0, 2, 3}), perm({1, 2, 3, 0})}, "S4"},
      {{perm({1, 2, 0, 3, 4}), perm({0, 1, 3, 4, 2})}, "A5"},
      {{perm({1, 0, 2, 3, 4}), perm({1, 2, 3, 4, 0})}, "S5"},
  };
  for (const Case& c : cases) {
    EXPECT_EQ(identify_group(closure(c.gens)).name(), c.name);
  }
  EXPECT_EQ(identify_group(closure({perm({1, 2, 3, 4, 5, 0})})).name(), "OTHER(6)");
}

TEST(Automorphisms, CycleMatchesBruteForce) {
  const Graph c5 = cycle_graph(5);
  std::vector<Permutation> want;
  for (const Permutation& p : all_permutations(5)) {
    if (is_automorphism(c5, p)) want.push_back(p);
  }
  EXPECT_EQ(want.size(), 10u);
  EXPECT_EQ(automorphism_list(c5), want);
}

TEST(Automorphisms, PetersenIsS5) {
  const auto list = automorphism_list(petersen_graph());
  ASSERT_EQ(list.size(), 120u);
  std::set<Permutation> induced;
  for (const Permutation& b : all_permutations(5)) induced.insert(induced_permutation(b));
  EXPECT_EQ(std::set<Permutation>(list.begin(), list.end()), induced);
  EXPECT_EQ(identify_group(graph_automorphisms(petersen_graph())).name(), "S5");
  for (const Permutation& a : list) {
    EXPECT_EQ(induced_permutation(base_permutation(a)), a);
  }
}

TEST(Automorphisms, SmallGraphs) {
  EXPECT_EQ(automorphism_list(complete_graph(4)).size(), 24u);
  EXPECT_EQ(automorphism_list(complete_bipartite_graph(3, 3)).size(), 72u);
  EXPECT_EQ(automorphism_list(Graph(6, {{0, 1}, {1, 2}})).size(), 12u);
  EXPECT_THROW(automorphism_list(Graph(7, {})), SizeLimitError);
}

TEST(Automorphisms, PermuteEdges) {
  const Graph& p = petersen_graph();
  const Permutation a = petersen_perm("(12)(345)");
  for (int e = 0; e < p.edge_count(); ++e) {
    EdgeSet one;
    one.set(e);
    const EdgeSet image = permute_edges(p, a, one);
    ASSERT_EQ(image.count(), 1u);
    const Edge& src = p.edge(e);
    int f = 0;
    while (!image.test(f)) ++f;
    EXPECT_EQ(f, *p.edge_index(a(src.u), a(src.v)));
  }
}

TEST(PetersenNotation, RoundTrips) {
  EXPECT_EQ(format_cycles(parse_cycles("(145)(23)")), "(145)(23)");
  EXPECT_EQ(format_cycles(parse_cycles("id")), "id");
  EXPECT_EQ(format_cycles(parse_cycles("()")), "id");
  EXPECT_EQ(format_petersen_perm(petersen_perm("(321)")), "(132)");
  EXPECT_THROW(parse_cycles("(16)"), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(11)"), std::invalid_argument);
  EXPECT_THROW(parse_cycles("(12"), std::invalid_argument);
  const VertexSet z = parse_switching_set("{34,25,13,24}");
  EXPECT_EQ(format_switching_set(z), "{13,24,25,34}");
  EXPECT_EQ(parse_switching_set("{}"), 0u);
  EXPECT_THROW(parse_switching_set("{11}"), std::invalid_argument);
}

}  // namespace
}  // namespace sigraph
