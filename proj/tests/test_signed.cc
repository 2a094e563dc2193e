#include <gtest/gtest.h>

#include <map>

#include "oracles.h"
#include "sigraph/automorphisms.h"
#include "sigraph/frustration.h"
#include "sigraph/petersen.h"
#include "sigraph/signed_graph.h"
#include "sigraph/six_types.h"

namespace sigraph {
namespace {

using oracle::petersen_circles;

int oracle_negative(std::uint32_t negative, int length) {
  int n = 0;
  for (const std::uint32_t c : petersen_circles()) {
    if (std::popcount(c) == length && std::popcount(c & negative) % 2 == 1) ++n;
  }
  return n;
}

TEST(SignedGraph, MaskRoundTrip) {
  for (int i = 0; i < 200; ++i) {
    const std::uint32_t m = oracle::random_mask();
    EXPECT_EQ(petersen_mask(petersen_signature(m)), m);
  }
  EXPECT_TRUE(petersen_signature(0).negative_edges().none());
  EXPECT_EQ(petersen_signature(0x7FFF).negative_count(), 15);
  EXPECT_THROW(petersen_signature(0x8000), std::invalid_argument);
  EdgeSet bad;
  bad.set(20);
  EXPECT_THROW(SignedGraph(petersen_graph(), bad), std::invalid_argument);
}

TEST(SignedGraph, CircleSigns) {
  const SignedGraph plus = petersen_signature(0);
  const SignedGraph minus = petersen_signature(0x7FFF);
  for (const Cycle& c : petersen_short_circles()) {
    EXPECT_EQ(sign_of_circle(plus, c), 1);
    EXPECT_EQ(sign_of_circle(minus, c), c.length() % 2 ? -1 : 1);
  }
  // In P1 the pentagons through the negative edge are exactly the negative
  // ones.
  const SignedGraph p1 = six_type_signature(SixType::kP1);
  const int e = petersen_edge(12, 34);
  for (const Cycle& c : petersen_short_circles()) {
    EXPECT_EQ(sign_of_circle(p1, c), c.edges.test(e) ? -1 : 1);
  }
  Cycle bogus{{0, 1, 2}, {}};
  EXPECT_THROW(sign_of_circle(plus, bogus), std::invalid_argument);
}

TEST(SignedGraph, BalanceMatchesOracle) {
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t m = oracle::random_mask();
    const SignedGraph s = petersen_signature(m);
    const BalanceReport r = is_balanced(s);
    EXPECT_EQ(r.balanced, oracle::balanced(petersen_circles(), m));
    if (r.balanced) {
      // The bipartition separates exactly the negative edges.
      EXPECT_EQ(cut(s.graph(), r.side), s.negative_edges());
    } else {
      ASSERT_TRUE(r.negative_circle);
      EXPECT_EQ(sign_of_circle(s, *r.negative_circle), -1);
    }
  }
  // Balanced signatures are exactly the cuts.
  EXPECT_TRUE(is_balanced(petersen_signature(0)).balanced);
  EXPECT_FALSE(is_balanced(six_type_signature(SixType::kP1)).balanced);
}

TEST(SignedGraph, SwitchingAndNegation) {
  const SignedGraph minus = petersen_signature(0x7FFF);
  const SignedGraph switched = switch_set(minus, maximum_independent_set(5));
  EXPECT_EQ(switched.negative_count(), 3);
  EXPECT_EQ(switched.negative_edges(), distance_three_matching(5));
  EXPECT_EQ(switch_set(switched, maximum_independent_set(5)), minus);
  EXPECT_EQ(is_balanced(switch_set(switched, maximum_independent_set(5))).balanced, false);
  for (int i = 0; i < 200; ++i) {
    const SignedGraph s = petersen_signature(oracle::random_mask());
    EXPECT_EQ(negate(negate(s)), s);
    EXPECT_EQ(switch_set(s, 0), s);
    const VertexSet x = oracle::random_vertex_set(10);
    EXPECT_EQ(switch_set(switch_set(s, x), x), s);
    EXPECT_EQ(switch_set(s, x), switch_set(s, 0x3FF & ~x));
    EXPECT_EQ(apply_switching(s, {10, x}), switch_set(s, x));
  }
  const SignedGraph neg22 = negate(six_type_signature(SixType::kP22));
  EXPECT_EQ(neg22.negative_count(), 13);
  std::vector<int> pos;
  for (int e = 0; e < 15; ++e)
    if (neg22.sign(e) > 0) pos.push_back(e);
  ASSERT_EQ(pos.size(), 2u);
  EXPECT_EQ(edge_distance(petersen_graph(), pos[0], pos[1]), 2);
}

TEST(SwitchingFunction, CanonicalForm) {
  const Graph g(5, {{0, 1}, {1, 2}, {3, 4}});
  const SwitchingFunction z{5, 0b01011};
  const SwitchingFunction c = z.canonical_form(g);
  EXPECT_EQ(c.minus, 0b10100u);
  EXPECT_EQ(c.canonical_form(g).minus, c.minus);
  EXPECT_EQ(SwitchingFunction::from_values({1, -1, -1}).minus, 0b110u);
  EXPECT_EQ(z.values(), (std::vector<int>{-1, -1, 1, -1, 1}));
  EXPECT_THROW(SwitchingFunction::from_values({1, 0}), std::invalid_argument);
}

TEST(SignedGraph, SwitchingEquivalence) {
  const auto same_circle_signs = [](std::uint32_t a, std::uint32_t b) {
    for (const std::uint32_t c : petersen_circles()) {
      if (std::popcount(c & a) % 2 != std::popcount(c & b) % 2) return false;
    }
    return true;
  };
  for (int i = 0; i < 1000; ++i) {
    const std::uint32_t a = oracle::random_mask();
    const std::uint32_t b = i % 2 ? oracle::random_mask()
                                  : petersen_mask(switch_set(petersen_signature(a),
                                                             oracle::random_vertex_set(10)));
    const SignedGraph sa = petersen_signature(a);
    const SignedGraph sb = petersen_signature(b);
    const auto z = switching_equivalence(sa, sb);
    EXPECT_EQ(z.has_value(), same_circle_signs(a, b));
    if (z) {
      EXPECT_EQ(apply_switching(sa, *z), sb);
    }
    EXPECT_EQ(is_balanced(sa).balanced,
              switching_equivalence(sa, petersen_signature(0)).has_value());
  }
  const auto z = switching_equivalence(petersen_signature(0x7FFF),
                                       six_type_signature(SixType::kP33));
  ASSERT_TRUE(z);
  const VertexSet x5 = maximum_independent_set(5);
  EXPECT_TRUE(z->minus == x5 || z->minus == (0x3FFu & ~x5));
  EXPECT_FALSE(switching_equivalence(petersen_signature(0), six_type_signature(SixType::kP1)));
  EXPECT_THROW(switching_equivalence(petersen_signature(0), SignedGraph::all_positive(
                                                                complete_graph(4))),
               std::invalid_argument);
}

TEST(SignedGraph, NegativeCircleCounts) {
  const std::map<SixType, std::pair<int, int>> want = {
      {SixType::kPlusP, {0, 0}}, {SixType::kP1, {4, 4}},  {SixType::kP22, {6, 6}},
      {SixType::kP23, {8, 4}},   {SixType::kP32, {6, 10}}, {SixType::kP33, {12, 0}}};
  for (const auto& [t, c] : want) {
    const auto counts = negative_circle_counts(six_type_signature(t), {5, 6});
    EXPECT_EQ(counts.at(5), c.first) << to_string(t);
    EXPECT_EQ(counts.at(6), c.second) << to_string(t);
  }
  for (int i = 0; i < 300; ++i) {
    const std::uint32_t m = oracle::random_mask();
    const auto counts = negative_circle_counts(petersen_signature(m), {5, 6, 8, 9});
    for (const int len : {5, 6, 8, 9}) EXPECT_EQ(counts.at(len), oracle_negative(m, len));
  }
}

TEST(SignedGraph, TwoOfThreeCircleLaw) {
  // In a theta subgraph the three circles have an even number of negative
  // members: sign(C1 + C2) = sign(C1) sign(C2) when C1, C2 share a path.
  const auto& circles = petersen_circles();
  for (int i = 0; i < 300; ++i) {
    const std::uint32_t m = oracle::random_mask();
    const std::uint32_t a = circles[oracle::rng()() % circles.size()];
    const std::uint32_t b = circles[oracle::rng()() % circles.size()];
    const std::uint32_t sym = a ^ b;
    if (!(a & b) || std::find(circles.begin(), circles.end(), sym) == circles.end()) continue;
    const int sa = std::popcount(a & m) % 2;
    const int sb = std::popcount(b & m) % 2;
    EXPECT_EQ(std::popcount(sym & m) % 2, sa ^ sb);
  }
}

TEST(SixTypes, ClassSizesOverAllMasks) {
  std::map<SixType, int> counts;
  for (std::uint32_t m = 0; m < kPetersenMaskLimit; ++m) {
    ++counts[classify_six(petersen_signature(m))];
  }
  EXPECT_EQ(counts[SixType::kPlusP], 512);
  EXPECT_EQ(counts[SixType::kP1], 7680);
  EXPECT_EQ(counts[SixType::kP22], 15360);
  EXPECT_EQ(counts[SixType::kP23], 7680);
  EXPECT_EQ(counts[SixType::kP32], 1024);
  EXPECT_EQ(counts[SixType::kP33], 512);
}

TEST(SixTypes, NegationsAndNames) {
  EXPECT_EQ(classify_six(petersen_signature(0x7FFF)), SixType::kP33);
  EXPECT_EQ(classify_six(negate(six_type_signature(SixType::kP1))), SixType::kP23);
  for (const SixType t : kSixTypes) {
    EXPECT_EQ(six_type_from_string(to_string(t)), t);
    EXPECT_EQ(classify_six(six_type_signature(t)), t);
    EXPECT_EQ(six_fingerprint(six_type_signature(t)), expected_fingerprint(t));
  }
  EXPECT_THROW(six_type_from_string("P9"), std::invalid_argument);
  EXPECT_THROW(classify_six(SignedGraph::all_positive(complete_graph(4))),
               std::invalid_argument);
  // The six fingerprints are distinct.
  std::set<std::pair<int, int>> fp;
  for (const SixType t : kSixTypes) {
    fp.insert({expected_fingerprint(t).l, expected_fingerprint(t).c5});
  }
  EXPECT_EQ(fp.size(), 6u);
}

TEST(SixTypes, InvariantUnderSwitchingAndAutomorphisms) {
  const auto autos = automorphism_list(petersen_graph());
  for (int i = 0; i < 1000; ++i) {
    const SignedGraph s = petersen_signature(oracle::random_mask());
    const SixType t = classify_six(s);
    EXPECT_EQ(classify_six(switch_set(s, oracle::random_vertex_set(10))), t);
    EXPECT_EQ(classify_six(permute(s, autos[oracle::rng()() % 120])), t);
  }
}

TEST(SixTypes, MinimalRepresentatives) {
  const MinimalRepresentative mp = minimal_representative(petersen_signature(0x7FFF));
  EXPECT_EQ(mp.signature.negative_count(), 3);
  EXPECT_EQ(classify_matching(mp.signature.negative_edges()), MatchingClass::kM33);
  EXPECT_EQ(apply_switching(petersen_signature(0x7FFF), mp.switching), mp.signature);
  EXPECT_EQ(minimal_representative(petersen_signature(0)).signature, petersen_signature(0));
  const MinimalRepresentative n1 = minimal_representative(negate(six_type_signature(SixType::kP1)));
  ASSERT_EQ(n1.signature.negative_count(), 2);
  std::vector<int> e;
  for (int i = 0; i < 15; ++i)
    if (n1.signature.sign(i) < 0) e.push_back(i);
  EXPECT_EQ(edge_distance(petersen_graph(), e[0], e[1]), 3);
  for (int i = 0; i < 300; ++i) {
    const SignedGraph s = petersen_signature(oracle::random_mask());
    const MinimalRepresentative r = minimal_representative(s);
    EXPECT_TRUE(is_matching(petersen_graph(), r.signature.negative_edges()));
    EXPECT_EQ(r.signature.negative_count(), frustration_index(s).value);
    EXPECT_EQ(apply_switching(s, r.switching), r.signature);
  }
}

TEST(SignedGraph, Deletions) {
  const SignedGraph p1 = six_type_signature(SixType::kP1);
  const SignedGraph d = delete_vertices(p1, vertex_bit(0));
  EXPECT_EQ(d.vertex_count(), 9);
  EXPECT_EQ(d.edge_count(), 12);
  EXPECT_TRUE(is_balanced(d).balanced);
  EXPECT_TRUE(is_balanced(delete_edges(p1, p1.negative_edges())).balanced);
  EXPECT_TRUE(is_antibalanced(petersen_signature(0x7FFF)));
  EXPECT_FALSE(is_antibalanced(petersen_signature(0)));
}

}  // namespace
}  // namespace sigraph
