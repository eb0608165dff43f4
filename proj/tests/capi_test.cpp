// Exercises the shared library through its C header only.
#include <gtest/gtest.h>

#include <memory>
#include <string>

#include "trihole.h"

namespace {

const char* kTheta =
    "vertices 2\n"
    "edge 1 0 1 1\nedge 2 0 1 1\nedge 3 0 1 %d\n"
    "rot 0 1 2 3\nrot 1 3 2 1\n"
    "outer 1 +\nhole 1 1 -\nhole 2 2 -\nhole 3 1 +\n"
    "demand 0 1 1 %d\n";

struct InstanceDeleter {
  void operator()(th_instance* p) const { th_instance_free(p); }
};
struct ResultDeleter {
  void operator()(th_result* p) const { th_result_free(p); }
};
using InstancePtr = std::unique_ptr<th_instance, InstanceDeleter>;
using ResultPtr = std::unique_ptr<th_result, ResultDeleter>;

std::string take(char* s) {
  std::string out = s ? s : "";
  th_string_free(s);
  return out;
}

InstancePtr theta(int c3, int d) {
  char buf[256];
  std::snprintf(buf, sizeof buf, kTheta, c3, d);
  th_instance* p = nullptr;
  EXPECT_EQ(th_instance_parse(buf, &p), TH_OK) << th_last_error();
  return InstancePtr(p);
}

TEST(CApi, ParseAndCounts) {
  const InstancePtr t = theta(2, 2);
  EXPECT_EQ(th_instance_vertex_count(t.get()), 2);
  EXPECT_EQ(th_instance_edge_count(t.get()), 3);
  EXPECT_STREQ(th_last_error(), "");
  char* text = nullptr;
  ASSERT_EQ(th_instance_format(t.get(), &text), TH_OK);
  th_instance* again = nullptr;
  ASSERT_EQ(th_instance_parse(text, &again), TH_OK);
  char* text2 = nullptr;
  ASSERT_EQ(th_instance_format(again, &text2), TH_OK);
  EXPECT_EQ(take(text), take(text2));
  th_instance_free(again);
}

TEST(CApi, ParseErrorSetsLastError) {
  th_instance* p = nullptr;
  EXPECT_EQ(th_instance_parse("vertices 2\nedge 1 0 1 x\n", &p), TH_INVALID_INPUT);
  EXPECT_EQ(p, nullptr);
  EXPECT_NE(std::string(th_last_error()).find("line 2"), std::string::npos);
  // A later success clears it.
  const InstancePtr t = theta(2, 2);
  EXPECT_STREQ(th_last_error(), "");
}

TEST(CApi, NullArguments) {
  th_instance* p = nullptr;
  EXPECT_EQ(th_instance_parse(nullptr, &p), TH_INVALID_INPUT);
  EXPECT_EQ(th_instance_parse("vertices 1\n", nullptr), TH_INVALID_INPUT);
  char* s = nullptr;
  EXPECT_EQ(th_check(nullptr, nullptr, &s), TH_INVALID_INPUT);
  EXPECT_EQ(th_solve(nullptr, nullptr, nullptr), TH_INVALID_INPUT);
  EXPECT_EQ(th_result_solved(nullptr), 0);
  th_instance_free(nullptr);
  th_result_free(nullptr);
  th_string_free(nullptr);
}

TEST(CApi, ReadMissingFile) {
  th_instance* p = nullptr;
  EXPECT_EQ(th_instance_read("/nonexistent/trihole.txt", &p), TH_INVALID_INPUT);
  EXPECT_STRNE(th_last_error(), "");
}

TEST(CApi, ValidateReportsParity) {
  const InstancePtr odd = theta(2, 1);
  char* report = nullptr;
  EXPECT_EQ(th_validate(odd.get(), &report), TH_INVALID_INPUT);
  EXPECT_NE(take(report).find("eulerian no"), std::string::npos);
  const InstancePtr ok = theta(2, 2);
  EXPECT_EQ(th_validate(ok.get(), &report), TH_OK);
  th_string_free(report);
}

TEST(CApi, SolveStatuses) {
  th_result* r = nullptr;
  const InstancePtr ok = theta(2, 2);
  ASSERT_EQ(th_solve(ok.get(), nullptr, &r), TH_OK);
  ResultPtr solved(r);
  EXPECT_EQ(th_result_solved(r), 1);
  EXPECT_GE(th_result_iterations(r), 1);
  char* sol = nullptr;
  ASSERT_EQ(th_result_solution(r, &sol), TH_OK);
  const std::string text = take(sol);
  EXPECT_EQ(text.rfind("verdict SOLVED\n", 0), 0u);
  char* report = nullptr;
  EXPECT_EQ(th_verify(ok.get(), text.c_str(), &report), TH_OK);
  th_string_free(report);
  char* trace = nullptr;
  EXPECT_EQ(th_result_trace(r, &trace), TH_OK);
  EXPECT_FALSE(take(trace).empty());

  const InstancePtr bad = theta(1, 5);
  ASSERT_EQ(th_solve(bad.get(), nullptr, &r), TH_INFEASIBLE);
  ResultPtr refused(r);
  EXPECT_EQ(th_result_solved(r), 0);
  ASSERT_EQ(th_result_solution(r, &sol), TH_OK);
  EXPECT_NE(take(sol).find("excess -2"), std::string::npos);

  const InstancePtr odd = theta(2, 1);
  r = nullptr;
  EXPECT_EQ(th_solve(odd.get(), nullptr, &r), TH_INVALID_INPUT);
  EXPECT_EQ(r, nullptr);
}

TEST(CApi, CheckAndOracle) {
  th_check_options opt;
  th_check_options_default(&opt);
  const InstancePtr bad = theta(1, 5);
  char* report = nullptr;
  EXPECT_EQ(th_check(bad.get(), &opt, &report), TH_INFEASIBLE);
  EXPECT_NE(take(report).find("nu3 -2"), std::string::npos);
  th_oracle_limits lim;
  th_oracle_limits_default(&lim);
  EXPECT_EQ(th_oracle(bad.get(), &lim, &report), TH_INFEASIBLE);
  th_string_free(report);
  const InstancePtr ok = theta(1, 3);
  EXPECT_EQ(th_oracle(ok.get(), &lim, &report), TH_OK);
  th_string_free(report);
}

TEST(CApi, VerifyRejectsMalformed) {
  const InstancePtr ok = theta(2, 2);
  char* report = nullptr;
  EXPECT_EQ(th_verify(ok.get(), "verdict MAYBE\n", &report), TH_INVALID_INPUT);
  th_string_free(report);
}

TEST(CApi, GenerateAndResourceCap) {
  th_gen_params p;
  th_gen_params_default(&p);
  p.seed = 3;
  p.n = 15;
  th_instance* raw = nullptr;
  ASSERT_EQ(th_generate(&p, &raw), TH_OK) << th_last_error();
  const InstancePtr big(raw);
  EXPECT_EQ(th_instance_vertex_count(raw), 15);
  th_oracle_limits lim;
  th_oracle_limits_default(&lim);
  char* report = nullptr;
  EXPECT_EQ(th_oracle(raw, &lim, &report), TH_RESOURCE_CAP);
  th_string_free(report);
  th_check_options opt;
  th_check_options_default(&opt);
  opt.max_quad = 1;
  EXPECT_EQ(th_check(raw, &opt, &report), TH_RESOURCE_CAP);
  th_string_free(report);

  p.target = "bogus";
  raw = nullptr;
  EXPECT_EQ(th_generate(&p, &raw), TH_INVALID_INPUT);
}

TEST(CApi, Version) { EXPECT_STRNE(th_version(), ""); }

}  // namespace
