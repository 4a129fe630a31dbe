#include "cascade_kit/classical_model.hpp"
#include "cascade_kit/fixtures.hpp"
#include "cascade_kit/kostant_ideal.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ckit;

namespace {

bool a_even(SimpleType t) { return t.family == Family::A && t.rank % 2 == 0; }

std::vector<SimpleType> admissible_types(int max_rank) {
  std::vector<SimpleType> out;
  for (SimpleType t : all_types(max_rank))
    if (!a_even(t)) out.push_back(t);
  return out;
}

struct Pipeline {
  explicit Pipeline(SimpleType t)
      : rs(RootSystem::build(t)), c(compute_cascade(rs)), g(grade(rs, cascade_element(rs, c))), wk(w_k_table(rs, c)) {}
  RootSystem rs;
  Cascade c;
  ZGrading g;
  WkTable wk;
};

oracle::Walk oracle_walk(SimpleType t) {
  const auto d = oracle::diagram(t);
  return oracle::walk(d, oracle::simple_values(d, oracle::spectrum(d, oracle::cascade(d).beta)), +1);
}

// stated orders, typed in here
std::optional<std::size_t> stated_order(SimpleType t) {
  switch (t.family) {
    case Family::A: return t.rank % 2 == 1 ? std::optional<std::size_t>(2) : std::nullopt;
    case Family::C: return 2;
    case Family::F:
    case Family::G: return 3;
    case Family::E: return t.rank == 6 ? 3 : t.rank == 7 ? 18 : 5;
    default: return std::nullopt;
  }
}

}  // namespace

TEST(KostantIdeal, ANotAdmissibleForEvenRank) {
  for (int n = 2; n <= 12; n += 2) {
    const auto rs = RootSystem::build({Family::A, n});
    const auto c = compute_cascade(rs);
    EXPECT_THROW(grade(rs, cascade_element(rs, c)), NotAdmissible);
    EXPECT_THROW(w_k_table(rs, c), NotAdmissible);
  }
}

TEST(KostantIdeal, WkMatchesOracleWalk) {
  for (SimpleType t : admissible_types(12)) {
    const Pipeline s(t);
    const auto d = oracle::diagram(t);
    const auto walk = oracle_walk(t);
    for (const auto& m : walk.final_marks) EXPECT_LE(m, 0);
    EXPECT_EQ(s.wk.images, oracle::simple_images(d, walk.word)) << t.str();
    EXPECT_EQ(s.wk.order, oracle::order(d, walk.word)) << t.str();
    // length of w_K is #Δ⁺(1) + #Δ⁺(2)
    EXPECT_EQ(s.wk.word.size(), s.g.part(1).size() + s.g.part(2).size());
  }
}

TEST(KostantIdeal, InversionSetIsPositiveDegreeRoots) {
  for (SimpleType t : admissible_types(12)) {
    const Pipeline s(t);
    const auto d = oracle::diagram(t);
    const auto walk = oracle_walk(t);
    std::vector<std::size_t> inv;
    for (const Root& a : s.rs.positive_roots())
      if (!oracle::positive(oracle::apply(d, walk.word, a.coords))) inv.push_back(a.id);
    EXPECT_EQ(s.rs.inversion_set(s.wk.w), inv) << t.str();
    EXPECT_TRUE(inversion_set_matches(s.rs, s.g, s.wk.w)) << t.str();
    EXPECT_TRUE(grading_closed(s.rs, s.g)) << t.str();
  }
}

TEST(KostantIdeal, StatedOrders) {
  for (SimpleType t : admissible_types(12)) {
    const auto expected = stated_order(t);
    if (!expected) continue;
    EXPECT_EQ(Pipeline(t).wk.order, *expected) << t.str();
  }
}

TEST(KostantIdeal, SignedPermutations) {
  for (SimpleType t : admissible_types(12)) {
    if (!is_classical(t)) continue;
    const Pipeline s(t);
    const auto walk = oracle_walk(t);
    const auto got = signed_permutation(s.rs, s.wk.w);
    EXPECT_EQ(got, oracle::signed_permutation(t, walk.word)) << t.str();
    const auto ref = fixtures::w_k_signed_permutation(t);
    ASSERT_TRUE(ref.has_value()) << t.str();
    EXPECT_EQ(got, *ref) << t.str();
    EXPECT_EQ(signed_permutation_order(got), s.wk.order) << t.str();
  }
  // D4: ε1 → −ε2, ε2 → ε3, ε3 → −ε1, ε4 → ε4
  EXPECT_EQ(signed_permutation(Pipeline({Family::D, 4}).rs, Pipeline({Family::D, 4}).wk.w), (SignedPermutation{-2, 3, -1, 4}));
}

TEST(KostantIdeal, ExceptionalImages) {
  for (SimpleType t : {SimpleType{Family::E, 6}, SimpleType{Family::E, 7}, SimpleType{Family::E, 8}, SimpleType{Family::F, 4}}) {
    const auto ref = fixtures::w_k_images(t);
    ASSERT_TRUE(ref.has_value());
    EXPECT_EQ(Pipeline(t).wk.images, *ref) << t.str();
  }
  const Pipeline g2({Family::G, 2});
  EXPECT_EQ(g2.wk.w, g2.rs.from_word(fixtures::g2_w_k_word()));
}

TEST(KostantIdeal, ThetaImage) {
  for (SimpleType t : admissible_types(12)) {
    const Pipeline s(t);
    const auto r = w_inverse_of_pi(s.rs, s.g, s.wk.w);
    EXPECT_TRUE(r.ok()) << t.str();
    EXPECT_EQ(r.theta_image_simple + 1, fixtures::w_k_theta_image(t).value()) << t.str();
    EXPECT_TRUE(preserves_degree_zero_simples(s.rs, s.g, s.wk.w)) << t.str();
  }
}

TEST(KostantIdeal, IdealFromOracleWalk) {
  for (SimpleType t : admissible_types(12)) {
    Pipeline s(t);
    const auto d = oracle::diagram(t);
    const auto walk = oracle_walk(t);
    std::set<std::vector<int>> expected;
    for (std::size_t id : s.g.part(-1)) expected.insert(oracle::apply(d, walk.word, s.rs.root(id).coords));
    for (std::size_t id : s.g.part(2)) expected.insert(oracle::apply(d, walk.word, s.rs.root(s.rs.negate(id)).coords));
    AbelianIdeal ideal = abelian_ideal(s.rs, s.g, s.wk.w);
    std::set<std::vector<int>> got;
    for (std::size_t id : ideal.roots) got.insert(s.rs.root(id).coords);
    EXPECT_EQ(got, expected) << t.str();
    EXPECT_TRUE(is_abelian(s.rs, ideal.roots));
    EXPECT_TRUE(s.rs.is_upper_ideal(ideal.roots));

    const auto mm = min_max_theorems(s.rs, s.g, ideal);
    EXPECT_TRUE(mm.min_ok) << t.str();
    EXPECT_TRUE(mm.max_ok) << t.str();
    const auto th = d_threshold(s.rs, s.g, ideal);
    EXPECT_TRUE(th.height_filter && th.boundary_heights && th.coxeter_relation) << t.str();
  }
}

TEST(KostantIdeal, ThresholdExamples) {
  auto dk = [](SimpleType t) {
    Pipeline s(t);
    AbelianIdeal ideal = abelian_ideal(s.rs, s.g, s.wk.w);
    return d_threshold(s.rs, s.g, ideal).d_k;
  };
  EXPECT_EQ(dk({Family::E, 7}), 10);
  for (int n = 2; n <= 6; ++n) EXPECT_EQ(dk({Family::C, n}), 2 * n);  // empty ideal
  EXPECT_EQ(dk({Family::G, 2}), 4);  // h/2 + 1 with Π(0) empty
}

TEST(KostantIdeal, G2IdealAmongAllAbelianUpperIdeals) {
  Pipeline s({Family::G, 2});
  const AbelianIdeal ideal = abelian_ideal(s.rs, s.g, s.wk.w);
  const std::size_t n = s.rs.num_positive();
  std::vector<std::vector<std::size_t>> candidates;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<std::size_t> ids;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1u) ids.push_back(i);
    if (s.rs.is_upper_ideal(ids) && is_abelian(s.rs, ids)) candidates.push_back(ids);
  }
  // G2 has four abelian ideals: ∅, {θ}, {θ, 3α1+α2}, {θ, 3α1+α2, 2α1+α2}
  EXPECT_EQ(candidates.size(), 4u);
  EXPECT_NE(std::find(candidates.begin(), candidates.end(), ideal.roots), candidates.end());
  EXPECT_EQ(ideal.roots.size(), 2 * (s.g.part(2).size()));
}

TEST(KostantIdeal, RandomAdmissibleGradings) {
  for (SimpleType t : all_types(8)) {
    const auto rs = RootSystem::build(t);
    AdmissibleSampler sampler(rs, 2024);
    for (int k = 0; k < 100; ++k) {
      const ZGrading g = sampler.next();
      const auto walk = anti_dominantize(rs, g.z);
      ASSERT_TRUE(grading_closed(rs, g)) << t.str();
      ASSERT_TRUE(inversion_set_matches(rs, g, walk.w)) << t.str();
      AbelianIdeal ideal;
      ASSERT_NO_THROW(ideal = abelian_ideal(rs, g, walk.w)) << t.str() << " " << g.z.str();
      EXPECT_TRUE(is_abelian(rs, ideal.roots));
      for (const auto& m : rs.marks(walk.image)) EXPECT_LE(m, 0);
    }
  }
}

TEST(KostantIdeal, SamplerIsDeterministic) {
  const auto rs = RootSystem::build({Family::E, 6});
  AdmissibleSampler a(rs, 5), b(rs, 5);
  for (int k = 0; k < 20; ++k) EXPECT_EQ(a.next().z, b.next().z);
}
