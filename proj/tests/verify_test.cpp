#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "scx/error.hpp"
#include "scx/verify.hpp"

namespace {

scx::CampaignOptions small(std::uint64_t seed, int trials) {
  scx::CampaignOptions o;
  o.seed = seed;
  o.trials = trials;
  return o;
}

}  // namespace

TEST(Verify, Deterministic) {
  for (const char* suite : {"fp", "gamma", "matroid"}) {
    const auto a = scx::run_suite(suite, small(5, 6));
    const auto b = scx::run_suite(suite, small(5, 6));
    EXPECT_EQ(a, b) << suite;
    EXPECT_EQ(a.to_json(), b.to_json());
  }
  EXPECT_NE(scx::run_suite("fp", small(5, 6)).to_json(), scx::run_suite("fp", small(6, 6)).to_json());
}

TEST(Verify, EverySuiteRunsClean) {
  for (const auto& name : scx::suite_names()) {
    const auto r = scx::run_suite(name, small(11, 3));
    EXPECT_TRUE(r.pass()) << name << "\n" << r.to_table();
    EXPECT_FALSE(r.records.empty()) << name;
    EXPECT_EQ(r.suite, name);
  }
}

TEST(Verify, JsonRoundTrip) {
  auto r = scx::run_suite("connectivity", small(3, 8));
  r.wall_seconds = 0.25;
  scx::ReportRecord odd;
  odd.check = "synthetic";
  odd.lhs = std::numeric_limits<double>::infinity();
  odd.rhs = -std::numeric_limits<double>::infinity();
  odd.vacuous = true;
  r.records.push_back(odd);
  const auto back = scx::VerificationReport::from_json(r.to_json(2));
  EXPECT_EQ(back, r);
  EXPECT_TRUE(std::isinf(back.records.back().lhs));
  EXPECT_NE(r.to_json().find("\"inf\""), std::string::npos);
}

TEST(Verify, FromJsonRejectsGarbage) {
  EXPECT_THROW(scx::VerificationReport::from_json("[]"), scx::ParseError);
  EXPECT_THROW(scx::VerificationReport::from_json("{\"suite\": 3}"), scx::ParseError);
}

TEST(Verify, FailuresCounted) {
  scx::VerificationReport r;
  scx::CheckResult ok;
  scx::CheckResult bad;
  bad.pass = false;
  r.add(0, "a", ok);
  r.add(1, "b", bad);
  EXPECT_EQ(r.failures(), 1u);
  EXPECT_FALSE(r.pass());
  EXPECT_NE(r.to_table().find("FAIL"), std::string::npos);
}

TEST(Verify, Examples) {
  for (const auto& name : scx::example_names()) {
    const auto r = scx::reproduce(name, {});
    EXPECT_TRUE(r.pass()) << name << "\n" << r.to_table();
  }
  EXPECT_THROW(scx::reproduce("nope", {}), scx::InputError);
  EXPECT_THROW(scx::run_suite("nope", {}), scx::InputError);
}

TEST(Verify, DigestIsFnv1a) {
  EXPECT_EQ(scx::digest(""), "cbf29ce484222325");
  EXPECT_EQ(scx::digest("a"), "af63dc4c8601ec8c");
}
