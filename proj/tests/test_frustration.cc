#include <gtest/gtest.h>

#include "oracles.h"
#include "sigraph/frustration.h"
#include "sigraph/petersen.h"
#include "sigraph/six_types.h"

namespace sigraph {
namespace {

using oracle::petersen_circles;

TEST(Frustration, SixClasses) {
  const int want[] = {0, 1, 2, 2, 3, 3};
  for (int i = 0; i < 6; ++i) {
    const SignedGraph s = six_type_signature(kSixTypes[i]);
    const FrustrationReport r = frustration_report(s);
    EXPECT_EQ(r.l, want[i]);
    EXPECT_EQ(r.l0, want[i]);
    EXPECT_TRUE(is_minimal(s));
  }
}

TEST(Frustration, IndexMatchesEdgeDeletionOracle) {
  for (int i = 0; i < 400; ++i) {
    const std::uint32_t m = oracle::random_mask();
    const SignedGraph s = petersen_signature(m);
    const FrustrationIndex f = frustration_index(s);
    EXPECT_EQ(f.value, oracle::frustration_index(petersen_circles(), 15, m));
    EXPECT_EQ(static_cast<int>(f.balancing_edges.count()), f.value);
    EXPECT_TRUE(is_balanced(delete_edges(s, f.balancing_edges)).balanced);
    EXPECT_EQ(switch_set(s, f.switching).negative_edges(), f.balancing_edges);
  }
}

TEST(Frustration, NumberMatchesVertexDeletionOracle) {
  for (int i = 0; i < 300; ++i) {
    const std::uint32_t m = oracle::random_mask();
    const SignedGraph s = petersen_signature(m);
    const FrustrationNumber f = frustration_number(s);
    EXPECT_EQ(f.value, oracle::frustration_number(petersen_graph(), petersen_circles(), m));
    EXPECT_EQ(popcount(f.balancing_vertices), f.value);
    EXPECT_TRUE(is_balanced(delete_vertices(s, f.balancing_vertices)).balanced);
  }
}

TEST(Frustration, NumberEqualsIndexOnAllPetersenSignatures) {
  for (std::uint32_t m = 0; m < kPetersenMaskLimit; ++m) {
    const SignedGraph s = petersen_signature(m);
    ASSERT_EQ(frustration_number(s).value, frustration_index(s).value) << m;
  }
}

TEST(Frustration, NumberEqualsIndexOnK4AndK33) {
  for (const Graph& g : {complete_graph(4), complete_bipartite_graph(3, 3)}) {
    const auto circles = oracle::circles(g);
    for (std::uint32_t m = 0; m < (1u << g.edge_count()); ++m) {
      EdgeSet neg(m);
      const SignedGraph s(g, neg);
      const int l = frustration_index(s).value;
      EXPECT_EQ(l, oracle::frustration_index(circles, g.edge_count(), m));
      EXPECT_EQ(frustration_number(s).value, l);
    }
  }
}

TEST(Frustration, NumberIsAtMostIndexOnK5) {
  // l0 <= l in general; K5 has signatures where the gap is positive.
  const Graph g = complete_graph(5);
  bool strict = false;
  for (std::uint32_t m = 0; m < (1u << 10); ++m) {
    const SignedGraph s(g, EdgeSet(m));
    const int l = frustration_index(s).value;
    const int l0 = frustration_number(s).value;
    EXPECT_LE(l0, l);
    strict |= l0 < l;
  }
  EXPECT_TRUE(strict);
}

TEST(Frustration, P33IsBalancedByAnyNeighborhood) {
  const SignedGraph s = six_type_signature(SixType::kP33);
  EXPECT_EQ(frustration_number(s).value, 3);
  for (int v = 0; v < 10; ++v) {
    EXPECT_TRUE(is_balanced(delete_vertices(s, petersen_graph().neighbors(v))).balanced);
  }
}

TEST(Frustration, MinimalityAndCutDominance) {
  for (int i = 0; i < 1000; ++i) {
    const SignedGraph s = petersen_signature(oracle::random_mask());
    const bool minimal = is_minimal(s);
    EXPECT_EQ(minimal, s.negative_count() == frustration_index(s).value);
    const auto x = cut_dominance_check(s);
    EXPECT_EQ(minimal, !x.has_value());
    if (x) {
      const EdgeSet c = cut(s.graph(), *x);
      EXPECT_GT((c & s.negative_edges()).count(), (c & s.positive_edges()).count());
    }
  }
}

TEST(Frustration, AlphaMatchesOracle) {
  const Graph& p = petersen_graph();
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t m = oracle::random_mask();
    const SignedGraph s = petersen_signature(m);
    for (int k = 0; k <= 2; ++k) {
      int want = 0;
      for (VertexSet w = 0; w < 1024; ++w) {
        if (popcount(w) == k && is_independent(p, w) &&
            oracle::balanced(petersen_circles(), m, oracle::vertex_edges(p, w))) {
          ++want;
        }
      }
      EXPECT_EQ(alpha_k(s, k), want);
    }
  }
  EXPECT_THROW(alpha_k(petersen_signature(0), 3), std::invalid_argument);
}

TEST(Frustration, SearchLimit) {
  const SignedGraph big = SignedGraph::all_negative(cycle_graph(17));
  EXPECT_THROW(frustration_index(big), SizeLimitError);
  EXPECT_THROW(frustration_number(big), SizeLimitError);
}

}  // namespace
}  // namespace sigraph
