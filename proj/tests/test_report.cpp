#include "cascade_kit.hpp"

#include <gtest/gtest.h>

using namespace ckit;

namespace {

template <class T>
T round_trip(const T& x) {
  const std::string text = Json(x).dump();
  return Json::parse(text).get<T>();
}

}  // namespace

TEST(Report, TypeReportRoundTrips) {
  for (SimpleType t : desk_types(6)) {
    const TypeReport r = make_type_report(t);
    EXPECT_EQ(round_trip(r), r) << t.str();
  }
}

TEST(Report, SchemaKeys) {
  const Json j = make_type_report({Family::E, 7});
  EXPECT_EQ(j.at("type"), "E7");
  EXPECT_EQ(j.at("rank"), 7);
  EXPECT_EQ(j.at("x_k").at(0), "3/2");
  EXPECT_TRUE(j.at("cascade").at(0).at("parent").is_null());
  EXPECT_EQ(j.at("cascade").at(0).at("index"), 1);
  EXPECT_EQ(j.at("cascade").at(0).at("subtype"), "E7");
  EXPECT_EQ(j.at("w_k").at("order"), 18);
  EXPECT_EQ(j.at("ideal").at("d_k"), 10);
  EXPECT_EQ(j.at("orbit").at("dim"), 84);
  EXPECT_EQ(j.at("orbit").at("g2"), 35);
  EXPECT_EQ(j.at("orbit").at("g4"), 7);
  EXPECT_TRUE(j.at("orbit").at("partition").is_null());
  EXPECT_EQ(j.at("orbit").at("height"), 4);
  EXPECT_EQ(j.at("orbit").at("spherical"), false);
  EXPECT_TRUE(j.at("w_k").at("images").contains("α1"));
}

TEST(Report, EvenANullsKostantSections) {
  const Json j = make_type_report({Family::A, 4});
  EXPECT_TRUE(j.at("w_k").is_null());
  EXPECT_TRUE(j.at("ideal").is_null());
  EXPECT_EQ(j.at("x_k").at(0), "1/2");
  EXPECT_EQ(round_trip(make_type_report({Family::A, 4})), make_type_report({Family::A, 4}));
}

TEST(Report, RationalsAreStrings) {
  const Json j = make_type_report({Family::A, 2});
  for (const auto& v : j.at("x_k")) EXPECT_TRUE(v.is_string());
  for (const auto& v : j.at("marks")) EXPECT_TRUE(v.is_string());
  EXPECT_TRUE(j.at("spectrum").at("multiplicity").contains("1/2"));
}

TEST(Report, VerifyReportRoundTrips) {
  const VerifyReport r = verify_type({Family::G, 2}, {});
  EXPECT_EQ(round_trip(r), r);
  const VerifyReport a4 = verify_type({Family::A, 4}, {});
  EXPECT_EQ(round_trip(a4), a4);
}

TEST(Report, TableRoundTrips) {
  for (const char* name : {"orbits-classical", "orbits-exceptional", "marks", "cascade-lists"}) {
    const TableKind k = *parse_table_kind(name);
    const Table t = make_table(k, table_types(k, 5));
    EXPECT_EQ(round_trip(t), t) << name;
  }
}

TEST(Report, MalformedJsonThrows) {
  EXPECT_ANY_THROW(Json::parse(R"({"name": "x"})").get<Table>());
  EXPECT_THROW(parse_status("maybe"), std::invalid_argument);
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
}

TEST(Verify, DeterministicGivenSeed) {
  VerifyOptions opt;
  opt.seed = 99;
  for (SimpleType t : {SimpleType{Family::E, 6}, SimpleType{Family::B, 5}, SimpleType{Family::A, 6}}) {
    const auto a = verify_type(t, opt);
    const auto b = verify_type(t, opt);
    EXPECT_EQ(a.checks, b.checks) << t.str();
  }
}

TEST(Verify, EveryDeskTypePasses) {
  for (SimpleType t : desk_types(9)) {
    const auto r = verify_type(t, {});
    const auto* f = r.first_failure();
    EXPECT_EQ(f, nullptr) << t.str() << ": " << (f ? f->name + " " + f->detail : "");
  }
}

TEST(Verify, EvenAReportsNotApplicable) {
  const auto r = verify_type({Family::A, 4}, {});
  ASSERT_NE(r.find("inversion_set"), nullptr);
  EXPECT_EQ(r.find("inversion_set")->status, CheckStatus::NotApplicable);
  EXPECT_EQ(r.find("z2_dimensions")->status, CheckStatus::NotApplicable);
  EXPECT_EQ(r.find("random_admissible_z")->status, CheckStatus::Pass);
  EXPECT_TRUE(r.passed());
}

TEST(Verify, NamedChecks) {
  const auto e8 = verify_type({Family::E, 8}, {});
  ASSERT_NE(e8.find("ord_wK == 5"), nullptr);
  EXPECT_EQ(e8.find("ord_wK == 5")->status, CheckStatus::Pass);
  const auto a1 = verify_type({Family::A, 1}, {});
  EXPECT_TRUE(a1.passed());
}

TEST(Tables, Examples) {
  const Table ex = make_table(TableKind::OrbitsExceptional, table_types(TableKind::OrbitsExceptional, 8));
  const auto e8 = std::find_if(ex.rows.begin(), ex.rows.end(), [](const auto& r) { return r[0] == "E8"; });
  ASSERT_NE(e8, ex.rows.end());
  EXPECT_EQ((*e8)[1], "2A2");
  EXPECT_EQ((*e8)[2], "156");
  EXPECT_EQ((*e8)[3], "64");
  EXPECT_EQ((*e8)[4], "14");

  const Table marks = make_table(TableKind::Marks, {{Family::D, 9}});
  EXPECT_EQ(marks.rows.at(0).at(1), "1 -1 1 -1 1 -1 1 0 0");

  const Table f4 = make_table(TableKind::CascadeLists, {{Family::F, 4}});
  EXPECT_EQ(f4.rows.at(0).at(1), "(2,4,3,2) (2,2,1,0) (0,2,1,0) (0,0,1,0)");
}

TEST(Tables, ComputedMatchesReference) {
  for (const char* name : {"orbits-classical", "orbits-exceptional", "marks", "cascade-lists"}) {
    const TableKind k = *parse_table_kind(name);
    const auto types = table_types(k, 12);
    EXPECT_TRUE(diff_tables(make_table(k, types), fixture_table(k, types)).empty()) << name;
  }
}

TEST(Tables, DiffReportsDiscrepancies) {
  const auto types = table_types(TableKind::Marks, 4);
  Table ref = fixture_table(TableKind::Marks, types);
  ref.rows[0][1] = "7";
  const auto d = diff_tables(make_table(TableKind::Marks, types), ref);
  ASSERT_EQ(d.size(), 1u);
  EXPECT_NE(d[0].find("reference 7"), std::string::npos);
  EXPECT_THROW(make_table(TableKind::OrbitsClassical, {{Family::E, 6}}), NotClassical);
}
