#include <gtest/gtest.h>

#include "classgraph/sweep.hpp"

using namespace classgraph;

namespace {

SweepConfig config(std::size_t max_order, std::size_t jobs) {
  SweepConfig c;
  c.filter.max_order = max_order;
  c.jobs = jobs;
  return c;
}

}  // namespace

TEST(Sweep, TrivialBound) {
  const auto r = run_sweep(config(1, 1));
  ASSERT_EQ(r.reports.size(), 1U);
  EXPECT_EQ(r.reports[0].group, "cyc:1");
  EXPECT_TRUE(sweep_passed(r, true));
  EXPECT_EQ(summary_json(r)["groups_checked"], 1);
}

TEST(Sweep, JobsDoNotChangeOutput) {
  const auto one = summary_json(run_sweep(config(120, 1))).dump(2);
  const auto many = summary_json(run_sweep(config(120, 4))).dump(2);
  EXPECT_EQ(one, many);
  EXPECT_EQ(one, summary_json(run_sweep(config(120, 4))).dump(2));
}

TEST(Sweep, SummaryContents) {
  const auto r = run_sweep(config(120, 2));
  const auto j = summary_json(r);
  EXPECT_EQ(j["seed"], kDefaultSeed);
  EXPECT_EQ(j["families"], "all");
  EXPECT_EQ(j["failure_count"], 0);
  EXPECT_EQ(failure_count(r), 0U);
  bool saw_a5 = false, saw_s5 = false;
  for (const auto& e : j["regular_gamma"]) {
    if (e["group"] == "alt:5") saw_a5 = e["k"] == 2;
    if (e["group"] == "sym:5") saw_s5 = e["k"] == 4;
  }
  EXPECT_TRUE(saw_a5);
  EXPECT_TRUE(saw_s5);
  EXPECT_NE(summary_human(r).find("groups checked"), std::string::npos);
}

TEST(Sweep, ResourceLimitsAreSkipped) {
  auto c = config(60, 2);
  c.group_options.order_cap = 50;
  const auto r = run_sweep(c);
  ASSERT_FALSE(r.skipped.empty());
  for (const auto& s : r.skipped) EXPECT_FALSE(s.reason.empty());
  for (const auto& rep : r.reports) EXPECT_LE(rep.order, 50U);
  EXPECT_TRUE(sweep_passed(r, false));
  EXPECT_FALSE(sweep_passed(r, true));
}
