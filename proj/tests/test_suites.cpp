#include <gtest/gtest.h>

#include "hollab/suites.hpp"
#include "hollab/table.hpp"

using namespace hollab;

TEST(Table, RoundTrips) {
  Table t{{"q", "computed", "note"}, {{"0", "Z", "plain"}, {"1", "Z/2 + Z/3", "comma, \"quoted\""}}};
  EXPECT_EQ(parse_csv(render(t, OutputFormat::csv)), t);
  EXPECT_EQ(parse_json(render(t, OutputFormat::json)), t);
  const auto md = render(t, OutputFormat::markdown);
  EXPECT_EQ(md.substr(0, md.find('\n')), "| q | computed | note |");
  EXPECT_EQ(parse_format("csv"), OutputFormat::csv);
  EXPECT_THROW(parse_format("xml"), std::invalid_argument);
}

TEST(Suites, NamesAndSeeds) {
  const auto& names = suite_names();
  EXPECT_EQ(names.size(), 10u);
  EXPECT_EQ(default_seed(names.front()), 101u);
  EXPECT_THROW(default_seed("nope"), std::invalid_argument);
  EXPECT_THROW(run_suite("nope"), std::invalid_argument);
}

TEST(Suites, ReportJsonIsStable) {
  auto a = run_suite("number-theory-lemmas");
  auto b = run_suite("number-theory-lemmas");
  EXPECT_TRUE(a.ok());
  EXPECT_EQ(report_to_json(a, false).dump(), report_to_json(b, false).dump());
  auto j = report_to_json(a, true);
  EXPECT_EQ(j["version"], "1.0.0");
  auto back = report_from_json(j);
  EXPECT_EQ(back.suite, a.suite);
  EXPECT_EQ(back.seed, a.seed);
  ASSERT_EQ(back.checks.size(), a.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(back.checks[i].id, a.checks[i].id);
    EXPECT_EQ(back.checks[i].pass, a.checks[i].pass);
  }
  EXPECT_TRUE(std::is_sorted(a.checks.begin(), a.checks.end(),
                             [](const CheckResult& x, const CheckResult& y) { return x.id < y.id; }));
}

TEST(Suites, SeedOverrideIsRecorded) {
  auto r = run_suite("wreath-permutative", 77);
  EXPECT_EQ(r.seed, 77u);
  EXPECT_TRUE(r.ok());
  EXPECT_NE(report_to_csv(r).find("id"), std::string::npos);
}
