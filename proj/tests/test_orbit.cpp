#include "cascade_kit/classical_model.hpp"
#include "cascade_kit/fixtures.hpp"
#include "cascade_kit/kostant_ideal.hpp"
#include "cascade_kit/orbit.hpp"
#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace ckit;

namespace {

bool a_even(SimpleType t) { return t.family == Family::A && t.rank % 2 == 0; }

std::vector<int> oracle_wdd(SimpleType t) {
  const auto d = oracle::diagram(t);
  const auto m = oracle::simple_values(d, oracle::spectrum(d, oracle::cascade(d).beta));
  std::vector<int> out;
  for (const auto& v : oracle::walk(d, m, -1).final_marks) out.push_back(static_cast<int>(to_int64(2 * v)));
  return out;
}

long oracle_orbit_dim(SimpleType t) {
  const auto d = oracle::diagram(t);
  long g0 = d.n, g1 = 0, total = d.n;
  for (const auto& [g, v] : oracle::spectrum(d, oracle::cascade(d).beta)) {
    total += 2;
    if (v == 0) g0 += 2;
    // one of γ, −γ lands in g(1)
    if (v == Rational(1, 2) || v == Rational(-1, 2)) g1 += 1;
  }
  return total - g0 - g1;
}

}  // namespace

TEST(Orbit, WeightedDiagramMatchesOracle) {
  for (SimpleType t : all_types(12)) {
    const auto rs = RootSystem::build(t);
    const auto c = compute_cascade(rs);
    const auto w = characteristic_and_wdd(rs, c);
    EXPECT_TRUE(w.in_orbit) << t.str();
    EXPECT_EQ(w.labels, oracle_wdd(t)) << t.str();
    EXPECT_EQ(w.labels, fixtures::orbit_row(t).wdd) << t.str();
  }
}

TEST(Orbit, DimensionsMatchOracleAndTables) {
  for (SimpleType t : all_types(12)) {
    const auto rs = RootSystem::build(t);
    const auto c = compute_cascade(rs);
    const auto od = orbit_data(rs, c);
    const auto row = fixtures::orbit_row(t);
    EXPECT_EQ(od.dim_orbit, oracle_orbit_dim(t)) << t.str();
    EXPECT_EQ(od.dim_orbit, row.dim) << t.str();
    EXPECT_EQ(od.dim_g2, row.g2) << t.str();
    EXPECT_EQ(od.dim_g4, row.g4) << t.str();
    EXPECT_EQ(od.partition, row.partition) << t.str();
    EXPECT_EQ(od.rank_orbit, c.size());
  }
}

TEST(Orbit, ExceptionalRows) {
  auto od = [](SimpleType t) {
    const auto rs = RootSystem::build(t);
    return orbit_data(rs, compute_cascade(rs));
  };
  const auto e8 = od({Family::E, 8});
  EXPECT_EQ(e8.dim_orbit, 156);
  EXPECT_EQ(e8.dim_g2, 64);
  EXPECT_EQ(e8.dim_g4, 14);
  const auto e7 = od({Family::E, 7});
  EXPECT_EQ(e7.dim_orbit, 84);
  EXPECT_EQ(e7.dim_g2, 35);
  EXPECT_EQ(e7.dim_g4, 7);
  EXPECT_EQ(e7.height, 4);
  EXPECT_FALSE(e7.spherical);
  EXPECT_EQ(od({Family::G, 2}).dim_orbit, 10);
}

TEST(Orbit, IdealIsTwiceGradeFour) {
  for (SimpleType t : all_types(12)) {
    if (a_even(t)) continue;
    const auto rs = RootSystem::build(t);
    const auto c = compute_cascade(rs);
    const ZGrading g = grade(rs, cascade_element(rs, c));
    const auto ideal = abelian_ideal(rs, g, w_k_table(rs, c).w);
    EXPECT_EQ(static_cast<long>(ideal.roots.size()), 2 * orbit_data(rs, c).dim_g4) << t.str();
  }
}

TEST(Orbit, HeightAndSphericity) {
  for (SimpleType t : all_types(12)) {
    const auto rs = RootSystem::build(t);
    const auto c = compute_cascade(rs);
    const auto od = orbit_data(rs, c);
    const bool fundamental = fixtures::theta_fundamental(t);
    EXPECT_EQ(od.height, fundamental ? 4 : 2) << t.str();
    const bool ac = t.family == Family::A || t.family == Family::C || t == SimpleType{Family::B, 2};
    EXPECT_EQ(od.spherical, ac) << t.str();
    if (!fundamental) continue;
    const auto tap = tap_data(rs, c);
    ASSERT_TRUE(tap.has_value());
    const auto h = height_witness(rs, c, *tap);
    EXPECT_TRUE(h.fifth_power_vanishes);
    EXPECT_EQ(h.order.size(), 4u);  // θ and three more
    for (const auto& s : h.partial_sums) EXPECT_TRUE(rs.is_root(s)) << t.str();
  }
}

TEST(Orbit, PartitionFromMatrices) {
  for (SimpleType t : all_types(12)) {
    if (!is_classical(t)) continue;
    const auto rs = RootSystem::build(t);
    const auto c = compute_cascade(rs);
    const auto o = partition_oracle(rs, c);
    EXPECT_TRUE(o.members_in_algebra) << t.str();
    EXPECT_EQ(o.partition, classical_partition(t)) << t.str();
    EXPECT_EQ(orbit_dimension_from_partition(t, o.partition), orbit_dimension(rs, c).dim_orbit) << t.str();
  }
  EXPECT_THROW(classical_partition({Family::E, 6}), NotClassical);
}

TEST(Orbit, RootVectorsLieInTheAlgebra) {
  for (SimpleType t : {SimpleType{Family::A, 4}, SimpleType{Family::B, 4}, SimpleType{Family::C, 4}, SimpleType{Family::D, 5}}) {
    const auto rs = RootSystem::build(t);
    for (const Root& g : rs.positive_roots()) {
      const auto m = root_vector(rs, g);
      EXPECT_TRUE(in_algebra(t, m)) << t.str() << " " << rs.root_text(g);
      EXPECT_EQ(int_rank(multiply(m, multiply(m, m))), 0u);
    }
  }
}

TEST(Orbit, JordanTypeOfSmallMatrices) {
  // one 3-block and one 1-block
  const IntMatrix x{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 0}, {0, 0, 0, 0}};
  const auto j = jordan_type(x);
  EXPECT_EQ(j.partition, (std::vector<int>{3, 1}));
  EXPECT_EQ(j.ranks, (std::vector<std::size_t>{4, 2, 1, 0}));
  // sl4 with (2,2): dim 8; sp4 with (2,2): dim 6
  EXPECT_EQ(orbit_dimension_from_partition({Family::A, 3}, {2, 2}), 8);
  EXPECT_EQ(orbit_dimension_from_partition({Family::C, 2}, {2, 2}), 6);
}

TEST(Orbit, RegularSubalgebraLabels) {
  auto label = [](SimpleType t) {
    const auto rs = RootSystem::build(t);
    return regular_subalgebra_label(rs, compute_cascade(rs));
  };
  EXPECT_EQ(label({Family::E, 7}), "7A1");
  EXPECT_EQ(label({Family::G, 2}), "A1+Ã1");
  EXPECT_EQ(label({Family::B, 7}), "6A1+Ã1");
  EXPECT_EQ(label({Family::A, 1}), "A1");
  EXPECT_EQ(label({Family::C, 3}), "3A1");
}
