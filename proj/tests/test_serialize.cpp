#include <gtest/gtest.h>

#include <sstream>

#include "census/serialize.hpp"

using namespace census;

namespace {

const LaurentPoly q = LaurentPoly::q();

}  // namespace

TEST(PolyJson, SortedTermsAndRoundTrip) {
  const LaurentPoly p = q.pow(3) - LaurentPoly::monomial(-2, mpz_class("123456789012345678901234567890"));
  const Json j = poly_to_json(p);
  EXPECT_EQ(j.dump(), R"([{"exp":-2,"coef":"-123456789012345678901234567890"},{"exp":3,"coef":"1"}])");
  EXPECT_EQ(poly_from_json(j), p);
  EXPECT_EQ(poly_to_json(LaurentPoly()).dump(), "[]");
  EXPECT_THROW(poly_from_json(Json::parse(R"([{"exp":1,"coef":2}])")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(Json::parse(R"([{"exp":1,"coef":"x"}])")), std::invalid_argument);
  EXPECT_THROW(poly_from_json(Json::parse(R"({"exp":1})")), std::invalid_argument);
}

TEST(ReportJson, RoundTripsForEveryMethod) {
  for (const IdealCountReport& r : {formula_report(3), A_structural(4), brute_force_A(2, 3)}) {
    const Json j = report_to_json(r);
    const IdealCountReport back = report_from_json(j);
    EXPECT_EQ(back, r);
    EXPECT_EQ(report_to_json(back).dump(), j.dump());
  }
}

TEST(ReportJson, Schema) {
  const Json j = report_to_json(brute_force_A(2, 2));
  EXPECT_EQ(j.at("n"), 2);
  EXPECT_EQ(j.at("method"), "bruteforce");
  EXPECT_EQ(j.at("q"), 2);
  EXPECT_EQ(j.at("total"), "16");
  ASSERT_EQ(j.at("trees").size(), 2U);
  const Json& t = j.at("trees")[0];
  for (const char* key : {"signature", "k", "N", "M", "lambda", "contribution"}) EXPECT_TRUE(t.contains(key)) << key;
  EXPECT_TRUE(t.at("signature").contains("ranks"));
  EXPECT_TRUE(t.at("signature").contains("lengths"));
  EXPECT_FALSE(report_to_json(A_structural(2)).contains("q"));
  EXPECT_THROW(report_from_json(Json::parse(R"({"n":2})")), std::invalid_argument);
}

TEST(Csv, Quoting) {
  std::ostringstream os;
  write_csv(os, Table{{"a", "b"}, {{"x,y", "say \"hi\""}, {"plain", ""}}});
  EXPECT_EQ(os.str(), "a,b\n\"x,y\",\"say \"\"hi\"\"\"\nplain,\n");
}

TEST(Tables, Cells) {
  const Table t = cells_table(2);
  EXPECT_EQ(t.columns, (std::vector<std::string>{"theta", "torus_rank", "affine_dim"}));
  EXPECT_EQ(t.rows.size(), 3U);
  const Json j = cells_json(2);
  EXPECT_EQ(poly_from_json(j.at("polynomial")), A_formula(2));
}

TEST(Tables, SubgroupsAndCongruences) {
  EXPECT_EQ(subgroups_table(2).rows.size(), 3U);
  EXPECT_EQ(subgroups_json(2).size(), 3U);
  EXPECT_EQ(congruences_table(2).rows.size(), 9U);
  const Json j = congruences_json(5);
  EXPECT_EQ(j.size(), 461U);
}

TEST(Tables, IndecPolysAndReports) {
  const Table t = indec_polys_table(4);
  ASSERT_EQ(t.rows.size(), 4U);
  EXPECT_EQ(t.rows[3], (std::vector<std::string>{"4", "13", "q^6 + 3q^5 + 5q^4 + 4q^3", "q^12 + 3q^11 + 5q^10 + 4q^9"}));
  const Table r = report_table(A_structural(3));
  EXPECT_EQ(r.rows.size(), 6U);
  EXPECT_EQ(r.rows.back().front(), "total");
}

TEST(Output, Deterministic) {
  EXPECT_EQ(report_to_json(A_structural(4)).dump(2), report_to_json(A_structural(4)).dump(2));
  std::ostringstream a;
  std::ostringstream b;
  write_csv(a, congruences_table(4));
  write_csv(b, congruences_table(4));
  EXPECT_EQ(a.str(), b.str());
}
