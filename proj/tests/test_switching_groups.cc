#include <gtest/gtest.h>

#include <set>

#include "oracles.h"
#include "sigraph/automorphisms.h"
#include "sigraph/frustration.h"
#include "sigraph/petersen.h"
#include "sigraph/petersen_notation.h"
#include "sigraph/reference_products.h"
#include "sigraph/signed_groups.h"
#include "sigraph/six_types.h"

namespace sigraph {
namespace {

// A switching permutation acting on (signature, vertex sign vector): switch
// both by X, then relabel both by the permutation. This action is faithful,
// so it pins down products exactly, signs included.
struct State {
  EdgeSet negative;
  VertexSet minus;
  bool operator==(const State&) const = default;
};

State act(const Graph& g, const State& s, const SwitchingPermutation& a) {
  const EdgeSet switched = s.negative ^ cut(g, a.x);
  return {permute_edges(g, a.alpha, switched), a.alpha.apply(s.minus ^ a.x)};
}

SwitchingPermutation random_element(const std::vector<Permutation>& autos) {
  return {oracle::random_vertex_set(10), autos[oracle::rng()() % autos.size()]};
}

TEST(SwitchingPermutation, ProductMatchesActionOracle) {
  const Graph& g = petersen_graph();
  const auto& autos = petersen_automorphisms();
  for (int i = 0; i < 1000; ++i) {
    const SwitchingPermutation a = random_element(autos);
    const SwitchingPermutation b = random_element(autos);
    const State s{EdgeSet(oracle::random_mask()), oracle::random_vertex_set(10)};
    EXPECT_EQ(act(g, s, sp_multiply(a, b)), act(g, act(g, s, a), b));
    EXPECT_EQ(act(g, act(g, s, a), sp_inverse(a)), s);
    const Permutation& mu = autos[oracle::rng()() % autos.size()];
    const SwitchingPermutation m = SwitchingPermutation::automorphism(mu);
    EXPECT_EQ(sp_conjugate(a, mu), sp_multiply(sp_multiply(sp_inverse(m), a), m));
    EXPECT_EQ(sp_act(petersen_signature(oracle::to_mask(s.negative)), a),
              SignedGraph(g, act(g, s, a).negative));
    EXPECT_TRUE(sp_equivalent(g, a, sp_negate(a)));
    EXPECT_NE(a, sp_negate(a));
  }
}

TEST(SwitchingGroups, OrdersAndLabels) {
  const int aut[] = {120, 8, 2, 8, 6, 24};
  const int sw[] = {120, 8, 4, 8, 60, 120};
  const char* aut_name[] = {"S5", "D4", "Z2", "D4", "S3", "S4"};
  const char* sw_name[] = {"S5", "D4", "V4", "D4", "A5", "S5"};
  for (int i = 0; i < 6; ++i) {
    const SignedGraph s = six_type_signature(kSixTypes[i]);
    const PermutationGroup a = aut_signed(s);
    const SwitchingGroup w = swaut(s);
    EXPECT_EQ(a.order(), aut[i]);
    EXPECT_EQ(w.order(), sw[i]);
    EXPECT_EQ(identify_group(a).name(), aut_name[i]);
    EXPECT_EQ(identify_group(w).name(), sw_name[i]);
    const OrbitCounts oc = orbit_counts(s);
    EXPECT_EQ(oc.copies, 120 / aut[i]);
    EXPECT_EQ(oc.switching_classes, 120 / sw[i]);
  }
}

TEST(SwitchingGroups, MembershipCondition) {
  const Graph& g = petersen_graph();
  for (const SixType t : kSixTypes) {
    const SignedGraph s = six_type_signature(t);
    const SwitchingGroup w = swaut(s);
    std::set<Permutation> perms;
    for (const SwitchingPermutation& e : w.elements()) {
      EXPECT_EQ(sp_act(s, e), s);
      EXPECT_EQ(cut(g, e.x),
                s.negative_edges() ^ permute_edges(g, e.alpha.inverse(), s.negative_edges()));
      perms.insert(e.alpha);
    }
    // Projection to Aut P is injective.
    EXPECT_EQ(perms.size(), static_cast<size_t>(w.order()));
    // Brute force over all 512 x 120 candidates.
    int count = 0;
    for (VertexSet x = 0; x < 512; ++x) {
      for (const Permutation& a : petersen_automorphisms()) count += sp_act(s, {x, a}) == s;
    }
    EXPECT_EQ(count, w.order());
  }
}

TEST(SwitchingGroups, CutBalanceAndShapes) {
  const Graph& g = petersen_graph();
  for (const SixType t : kSixTypes) {
    const SignedGraph s = six_type_signature(t);
    const SwitchingGroup w = swaut(s);
    for (const SwitchingPermutation& e : w.elements()) {
      if (e.x == 0) continue;
      const EdgeSet c = cut(g, e.x);
      EXPECT_EQ((c & s.negative_edges()).count(), (c & s.positive_edges()).count());
      const VertexSet small = popcount(e.x) <= 5 ? e.x : (0x3FFu & ~e.x);
      bool shape = false;
      if (popcount(small) == 2) shape = induced_edges(g, small).count() == 1;
      if (popcount(small) == 4) {
        const bool path = induced_edges(g, small).count() == 3 && is_connected(
            induced_subgraph(g, small));
        bool closed_neighborhood = false;
        for (int v = 0; v < 10; ++v) {
          closed_neighborhood |= small == (g.neighbors(v) | vertex_bit(v));
        }
        shape = path || closed_neighborhood;
      }
      EXPECT_TRUE(shape) << to_string(t) << " " << format_switching_set(e.x);
    }
  }
}

TEST(SwitchingGroups, NegationAndSwitchingConjugation) {
  const Graph& g = petersen_graph();
  for (int i = 0; i < 40; ++i) {
    const SignedGraph s = petersen_signature(oracle::random_mask());
    const SwitchingGroup w = swaut(s);
    EXPECT_EQ(swaut(negate(s)).elements(), w.elements());
    EXPECT_EQ(aut_signed(negate(s)).elements(), aut_signed(s).elements());
    const VertexSet z = oracle::random_vertex_set(10);
    const SwitchingGroup w2 = swaut(switch_set(s, z));
    ASSERT_EQ(w2.order(), w.order());
    const SwitchingPermutation zeta{z, Permutation::identity(10)};
    for (const SwitchingPermutation& e : w.elements()) {
      const SwitchingPermutation conj = sp_multiply(sp_multiply(zeta, e), zeta);
      EXPECT_TRUE(w2.contains(sp_canonical(g, conj)));
    }
  }
}

TEST(SwitchingGroups, LiftPermutation) {
  const SignedGraph p33 = six_type_signature(SixType::kP33);
  const Permutation fix5 = petersen_perm("(1234)");
  const auto l = lift_permutation(p33, fix5);
  ASSERT_TRUE(l);
  EXPECT_EQ(l->x, 0u);
  EXPECT_EQ(l->alpha, fix5);
  for (int i = 1; i <= 4; ++i) {
    const int v = petersen_labeling().vertex_of(i, 5);
    const auto t = lift_permutation(p33, petersen_perm("(" + std::to_string(i) + "5)"));
    ASSERT_TRUE(t);
    EXPECT_TRUE(sp_equivalent(petersen_graph(), *t,
                              {petersen_graph().neighbors(v) | vertex_bit(v),
                               petersen_perm("(" + std::to_string(i) + "5)")}));
  }
  const SignedGraph p32 = six_type_signature(SixType::kP32);
  for (const Permutation& a : petersen_automorphisms()) {
    const auto lifted = lift_permutation(p32, a);
    EXPECT_EQ(lifted.has_value(), base_permutation(a).is_even());
  }
}

TEST(SwitchingGroups, PublishedLiftFormulas) {
  const Graph& g = petersen_graph();
  const SwitchingGroup w32 = swaut(six_type_signature(SixType::kP32));
  const SwitchingGroup w33 = swaut(six_type_signature(SixType::kP33));
  for (const Permutation& a : petersen_automorphisms()) {
    const Permutation base = base_permutation(a);
    const SwitchingPermutation e33 = p33_lift(base);
    EXPECT_EQ(e33.alpha, a);
    EXPECT_TRUE(w33.contains(sp_canonical(g, e33)));
    if (base.is_even()) {
      const SwitchingPermutation e32 = p32_lift(base);
      EXPECT_EQ(e32.alpha, a);
      EXPECT_TRUE(w32.contains(sp_canonical(g, e32))) << format_switching_permutation(e32);
    }
  }
}

void check_general_product(SixType t) {
  const Graph& g = petersen_graph();
  const SignedGraph s = six_type_signature(t);
  const SwitchingGroup w = swaut(s);
  const PermutationGroup a = aut_signed(s);
  const CosetSystem cs = coset_system(s, w, a);
  ASSERT_TRUE(cs.conjugation_closed);
  ASSERT_EQ(cs.representatives.size() * a.elements().size(), static_cast<size_t>(w.order()));
  const int n = static_cast<int>(cs.representatives.size());
  for (int i = 0; i < n; ++i) {
    for (const Permutation& alpha : a.elements()) {
      const SwitchingPermutation x = sp_multiply(cs.representatives[i],
                                                 SwitchingPermutation::automorphism(alpha));
      const CosetPosition pos = locate(g, cs, x);
      EXPECT_EQ(pos.representative, i);
      EXPECT_EQ(pos.alpha, alpha);
      for (int j = 0; j < n; ++j) {
        for (const Permutation& beta : a.elements()) {
          const SwitchingPermutation y = sp_multiply(cs.representatives[j],
                                                     SwitchingPermutation::automorphism(beta));
          const ProductDecomposition d = general_product(cs, i, alpha, j, beta);
          ASSERT_EQ(recombine(cs, d), sp_multiply(x, y));
          EXPECT_EQ(d.alpha_beta, alpha * beta);
          EXPECT_TRUE(std::find(a.elements().begin(), a.elements().end(), d.nu) !=
                      a.elements().end());
        }
      }
    }
  }
}

TEST(CosetSystems, GeneralProductP32) { check_general_product(SixType::kP32); }
TEST(CosetSystems, GeneralProductP33) { check_general_product(SixType::kP33); }

TEST(CosetSystems, AllClassesAreConjugationClosed) {
  for (const SixType t : kSixTypes) {
    const SignedGraph s = six_type_signature(t);
    const CosetSystem cs = coset_system(s, swaut(s), aut_signed(s));
    EXPECT_TRUE(cs.conjugation_closed) << to_string(t);
    EXPECT_TRUE(is_conjugation_closed(petersen_graph(), cs.representatives, cs.subgroup));
  }
}

TEST(CosetSystems, PublishedRepresentatives) {
  const SignedGraph s32 = six_type_signature(SixType::kP32);
  const CosetSystem r32 =
      coset_system_from(s32, swaut(s32), aut_signed(s32), p32_representatives());
  EXPECT_TRUE(r32.conjugation_closed);
  EXPECT_EQ(r32.representatives.size(), 10u);
  const SignedGraph s33 = six_type_signature(SixType::kP33);
  const CosetSystem r33 =
      coset_system_from(s33, swaut(s33), aut_signed(s33), p33_representatives());
  EXPECT_TRUE(r33.conjugation_closed);
  // Two representatives of one coset are rejected.
  auto dup = p32_representatives();
  dup[1] = sp_multiply(dup[2], SwitchingPermutation::automorphism(petersen_perm("(123)")));
  EXPECT_THROW(coset_system_from(s32, swaut(s32), aut_signed(s32), dup),
               std::invalid_argument);
}

TEST(CosetSystems, NoComplementInP32) {
  // Aut P32 (order 6) has no complement in SwAut P32 (order 60): every
  // subgroup of order 10 meets it nontrivially.
  const Graph& g = petersen_graph();
  const SignedGraph s = six_type_signature(SixType::kP32);
  const SwitchingGroup w = swaut(s);
  std::vector<bool> in_aut(w.order(), false);
  for (int i = 0; i < w.order(); ++i) in_aut[i] = sp_canonical(g, w.element(i)).x == 0;
  std::set<std::vector<int>> order_ten;
  for (int a = 0; a < w.order(); ++a) {
    for (int b = a; b < w.order(); ++b) {
      const int gens[] = {a, b};
      const auto h = w.generated_subgroup(gens);
      if (h.size() == 10) order_ten.insert(h);
    }
  }
  EXPECT_EQ(order_ten.size(), 6u);
  for (const auto& h : order_ten) {
    int shared = 0;
    for (const int x : h) shared += in_aut[x];
    EXPECT_GT(shared, 1);
  }
}

TEST(ReferenceProducts, TransformsWorkedExamplesAndP33Rules) {
  for (const ProductCheck& c : check_p32_transforms()) EXPECT_TRUE(c.ok) << c.name;
  for (const ProductCheck& c : check_p33_table()) EXPECT_TRUE(c.ok) << c.name;
  for (const ProductCheck& c : check_p32_tables()) {
    if (c.name.rfind("example", 0) == 0) {
      EXPECT_TRUE(c.ok) << c.name;
    }
  }
}

TEST(ReferenceProducts, PublishedCellsThatDisagree) {
  // Twelve published cells differ from the recomputed product. The list is
  // pinned so that any change in the other 69 cells is caught.
  const std::set<std::string> known = {
      "upsilon*upsilon upsilon^(123) * upsilon = omega^(12)(45) (321)",
      "upsilon*upsilon upsilon^(321) * upsilon^(123) = omega^(23)(45) (321)",
      "upsilon*omega upsilon * omega^(123) = omega^(123) (12)(45)",
      "upsilon*omega upsilon^(123) * omega^(321) = omega^(321) (23)(45)",
      "upsilon*omega upsilon^(321) * omega = omega (13)(45)",
      "upsilon*omega upsilon^(321) * omega^(321) = omega^(13)(45)",
      "upsilon*omega' upsilon^(123) * omega^(13)(45) = omega",
      "omega*omega omega^(23)(45) * omega^(123) = omega^(12)(45) (12)(45)",
      "omega*omega omega^(23)(45) * omega^(321) = omega^(13)(45) (13)(45)",
      "omega*omega' omega^(321) * omega^(23)(45) = -omega (23)(45)",
      "omega*omega' omega^(23)(45) * omega^(13)(45) = upsilon^(13)(45)",
      "omega*omega' omega^(13)(45) * omega^(12)(45) = upsilon^(12)(45)",
  };
  std::set<std::string> failing;
  int sign_only = 0;
  for (const ProductCheck& c : check_p32_tables()) {
    if (!c.ok) failing.insert(c.name);
    if (!c.ok && c.ok_modulo_kernel) ++sign_only;
  }
  EXPECT_EQ(failing, known);
  EXPECT_EQ(sign_only, 5);
}

}  // namespace
}  // namespace sigraph
