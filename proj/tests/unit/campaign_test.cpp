#include "pxg/campaign.hpp"

#include <cstdlib>
#include <sstream>

#include <gtest/gtest.h>

#include "pxg/errors.hpp"
#include "pxg/report.hpp"

namespace pxg {
namespace {

TEST(ConfigTest, DefaultGrid) {
  Config c;
  auto g = grid(c);
  EXPECT_EQ(g.size(), 17u);
  EXPECT_EQ(g.front(), (PxParams{3, 1}));
  EXPECT_EQ(g.back(), (PxParams{7, 4}));
  for (PxParams p : g) EXPECT_LE(static_cast<std::size_t>(p.n) << p.k, c.vertex_cap);
}

TEST(ConfigTest, LoadsKeyValueLines) {
  Config c;
  std::istringstream in("# budget\nn_max = 5\n\nmax_subset_size=4\nworkers=2\ntime_limit_ms=250\n");
  load_config(c, in);
  EXPECT_EQ(c.n_max, 5);
  EXPECT_EQ(c.budget.max_subset_size, 4);
  EXPECT_EQ(c.workers, 2u);
  EXPECT_EQ(c.budget.time_limit.count(), 250);
  EXPECT_EQ(effective_workers(c), 2u);
}

TEST(ConfigTest, RejectsBadSettings) {
  Config c;
  EXPECT_THROW(apply_setting(c, "colour", "3"), UsageError);
  EXPECT_THROW(apply_setting(c, "n_max", "x"), UsageError);
  EXPECT_THROW(apply_setting(c, "vertex_cap", "0"), UsageError);
  std::istringstream in("n_max\n");
  EXPECT_THROW(load_config(c, in), UsageError);
  EXPECT_THROW(load_config_file(c, "/nonexistent/pxg.conf"), UsageError);
}

TEST(ConfigTest, EnvironmentBudget) {
  Config c;
  setenv("PX_BUDGET_MS", "1234", 1);
  apply_environment(c);
  unsetenv("PX_BUDGET_MS");
  EXPECT_EQ(c.budget.time_limit.count(), 1234);
}

TEST(CheckTest, Names) {
  for (Check c : all_checks()) EXPECT_EQ(parse_check(to_string(c)), c);
  EXPECT_EQ(all_checks().size(), 7u);
  EXPECT_THROW(parse_check("nonsense"), UsageError);
}

TEST(ReportTest, JsonShape) {
  VerificationReport r{"det(PX(3,2)) = 2", "bruteforce", 2, {"0:00", "0:01"}, 0, Status::pass};
  EXPECT_EQ(r.to_json().dump(),
            "{\"claim\":\"det(PX(3,2)) = 2\",\"method\":\"bruteforce\",\"value\":2,\"witness\":[\"0:00\",\"0:01\"],"
            "\"elapsed_ms\":0,\"status\":\"pass\"}");
  EXPECT_EQ(params_json({4, 1}).dump(), "{\"n\":4,\"k\":1,\"det\":6,\"dist\":5,\"cost\":null}");
  EXPECT_EQ(witness_json("det", {4, 3}, {}, std::nullopt).dump(),
            "{\"kind\":\"det\",\"n\":4,\"k\":3,\"vertices\":[],\"verified\":null}");
  VerificationReport f = r;
  f.status = Status::fail;
  VerificationReport b = r;
  b.status = Status::budget;
  EXPECT_EQ(summary_json({r, f, b}).dump(), "{\"summary\":{\"total\":3,\"pass\":1,\"fail\":1,\"budget\":1}}");
  EXPECT_FALSE(all_pass({r, b}));
  EXPECT_TRUE(all_pass({r}));
}

TEST(RunnerTest, ExceptionsBecomeStatuses) {
  Config c;
  c.workers = 2;
  std::vector<Claim> claims{
      {"ok", [](const Config&) { return VerificationReport{"ok", "formula", 1, {}, 0, Status::pass}; }},
      {"cap", [](const Config&) -> VerificationReport { throw CapacityError("too big"); }},
      {"bad", [](const Config&) -> VerificationReport { throw std::runtime_error("boom"); }},
  };
  auto out = run_claims(claims, c);
  ASSERT_EQ(out.size(), 3u);
  EXPECT_EQ(out[0].status, Status::pass);
  EXPECT_EQ(out[1].status, Status::budget);
  EXPECT_EQ(out[2].status, Status::fail);
  EXPECT_EQ(out[1].claim, "cap");
}

TEST(RunnerTest, ParallelMapKeepsOrder) {
  auto out = parallel_map<int>(100, 4, [](std::size_t i) { return static_cast<int>(i * i); });
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], static_cast<int>(i * i));
}

TEST(RunnerTest, OutputIndependentOfWorkerCount) {
  Config c;
  std::string reference;
  for (unsigned w : {1u, 3u}) {
    c.workers = w;
    auto reports = run_campaign(c, {Check::table}, PxParams{5, 2});
    std::ostringstream out;
    write_ndjson(out, reports);
    if (reference.empty()) {
      reference = out.str();
    } else {
      EXPECT_EQ(out.str(), reference);
    }
  }
  EXPECT_NE(reference.find("\"summary\""), std::string::npos);
}

}  // namespace
}  // namespace pxg
