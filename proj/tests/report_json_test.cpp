#include <umbral/report_json.hpp>

#include <gtest/gtest.h>

namespace umbral {
namespace {

TEST(ReportJsonTest, PassingReportSchema) {
  auto doc = to_json(verify_conjecture(3));
  EXPECT_EQ(doc.at("identity"), "CONJECTURE");
  EXPECT_EQ(doc.at("n"), 3);
  EXPECT_EQ(doc.at("passed"), true);
  EXPECT_TRUE(doc.at("witnesses").is_array());
  EXPECT_TRUE(doc.at("witnesses").empty());
}

TEST(ReportJsonTest, BigWitnessesRoundTripAsDecimalStrings) {
  VerifyReport r{IdentityId::EQ23, 30, true, {}};
  Int big = ipow(30L, 31);
  r.fail("lambda=0,mu=1", big, -big + 1);
  auto doc = to_json(r);
  const auto& w = doc.at("witnesses").at(0);
  EXPECT_EQ(w.at("lhs"), to_string(big));
  EXPECT_TRUE(w.at("rhs").is_string());
  VerifyReport back = report_from_json(nlohmann::json::parse(doc.dump()));
  EXPECT_EQ(back.identity, r.identity);
  EXPECT_EQ(back.n, r.n);
  EXPECT_FALSE(back.passed);
  ASSERT_EQ(back.witnesses.size(), 1u);
  EXPECT_EQ(back.witnesses[0].point, "lambda=0,mu=1");
  EXPECT_EQ(back.witnesses[0].lhs, big);
  EXPECT_EQ(back.witnesses[0].rhs, -big + 1);
}

TEST(ReportJsonTest, RejectsMalformedDocuments) {
  EXPECT_THROW(report_from_json(nlohmann::json::parse(R"({"identity":"EQ22"})")),
               std::invalid_argument);
  EXPECT_THROW(report_from_json(nlohmann::json::parse(
                   R"({"identity":"NOPE","n":1,"passed":true,"witnesses":[]})")),
               std::invalid_argument);
  // passed must agree with the witness list
  EXPECT_THROW(report_from_json(nlohmann::json::parse(
                   R"({"identity":"EQ22","n":1,"passed":false,"witnesses":[]})")),
               std::invalid_argument);
  EXPECT_THROW(report_from_json(nlohmann::json::parse(
                   R"({"identity":"EQ22","n":1,"passed":false,
                       "witnesses":[{"point":"x","lhs":"1.5","rhs":"2"}]})")),
               std::invalid_argument);
}

}  // namespace
}  // namespace umbral
