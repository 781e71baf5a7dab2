#include <gtest/gtest.h>

#include "nabc/runner.hpp"

using namespace nabc;

namespace {

Report run(const char* text, RunOptions o = {}) { return run_scenario(Json::parse(text), o); }

}  // namespace

TEST(Scenario, ExitCodes) {
  EXPECT_EQ(run(R"({"name":"ok","tasks":[{"kind":"h1","action":{"actor":"C2","space":"C2","images":"trivial"},
                  "expect":{"classes":2}}]})").exit_code,
            kExitPass);
  EXPECT_EQ(run(R"({"name":"bad","tasks":[{"kind":"h1","action":{"actor":"C2","space":"C2","images":"trivial"},
                  "expect":{"classes":3}}]})").exit_code,
            kExitExpectation);
  const Report missing = run(R"({"name":"ref","tasks":[{"kind":"h1","action":"theta"}]})");
  EXPECT_EQ(missing.exit_code, kExitParse);
  EXPECT_NE(missing.machine["error"]["message"].get<std::string>().find("tasks[0].action"), std::string::npos);
  EXPECT_EQ(run(R"({"name":"kind","tasks":[{"kind":"frobnicate"}]})").exit_code, kExitParse);
  EXPECT_EQ(run(R"({"name":"key","tasks":[{"kind":"prop_ext","quotient":"C2","kernel":"C2","expect":{"nothing":1}}]})")
                .exit_code,
            kExitParse);
  EXPECT_EQ(run(R"({"name":"big","subgroups":{"H":{"group":"C2xC2xC2","elements":[0]}},
                  "tasks":[{"kind":"holt","subgroup":"H","kernel":"C3"}]})").exit_code,
            kExitBound);
}

TEST(Scenario, TasksRunInOrderAndReportValues) {
  const Report r = run(R"({"name":"two","tasks":[
      {"kind":"prop_ext","quotient":"C2","kernel":"C2","expect":{"classes":2,"free_h2_action":true}},
      {"kind":"sections","extension":{"total":"C4","quotient":"C2","inject":[0,2],"project":[0,1,0,1]}}]})");
  EXPECT_EQ(r.exit_code, kExitPass);
  ASSERT_EQ(r.machine["tasks"].size(), 2u);
  EXPECT_EQ(r.machine["tasks"][0]["status"], "pass");
  EXPECT_EQ(r.machine["tasks"][1]["status"], "computed");
  EXPECT_EQ(r.machine["tasks"][1]["values"]["classes"], 0);
  EXPECT_EQ(r.machine["schema"], kReportSchema);
}

TEST(Suites, TrivialGridIsVacuous) {
  RunOptions o;
  o.max_group_order = 1;
  const Report r = verify_suite("prop-ext", o);
  EXPECT_EQ(r.exit_code, kExitPass);
  EXPECT_EQ(r.machine["suites"][0]["summary"]["points"], 0);
  EXPECT_EQ(verify_suite("no-such-suite", o).exit_code, kExitParse);
}

TEST(Suites, MachineReportIgnoresJobs) {
  RunOptions a, b;
  a.max_group_order = b.max_group_order = 6;
  a.max_kernel_order = b.max_kernel_order = 4;
  b.jobs = 4;
  for (const char* s : {"shapiro1", "sections-transport", "prop-ext"}) {
    const Report x = verify_suite(s, a), y = verify_suite(s, b);
    EXPECT_EQ(x.exit_code, kExitPass) << s;
    EXPECT_EQ(x.machine_text(), y.machine_text()) << s;
  }
}
