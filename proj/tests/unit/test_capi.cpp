#include <gtest/gtest.h>

#include <string>

#include "tanlift/tanlift.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  tl_string_free(s);
  return out;
}

TEST(CApi, CanonicalEmitParseRoundTrip) {
  tl_definition* a = nullptr;
  ASSERT_EQ(tl_definition_canonical(2, 1, -1, TL_LORENTZIAN, TL_MODE_DEFAULT, &a), TL_OK);
  char* text = nullptr;
  ASSERT_EQ(tl_definition_emit(a, &text), TL_OK);
  const std::string s = take(text);
  tl_definition* b = nullptr;
  ASSERT_EQ(tl_definition_parse(s.data(), s.size(), &b), TL_OK);
  EXPECT_EQ(tl_definition_equal(a, b), 1);
  EXPECT_EQ(tl_definition_task_count(b), 1u);
  tl_definition_free(a);
  tl_definition_free(b);
}

TEST(CApi, ParseErrorLocation) {
  const std::string text = "chart M\ncoords a b\nconnection\nGamma[a,a,a] = a + q\n";
  tl_definition* d = nullptr;
  EXPECT_EQ(tl_definition_parse(text.data(), text.size(), &d), TL_ERR_PARSE);
  EXPECT_EQ(d, nullptr);
  EXPECT_EQ(tl_last_error_line(), 4u);
  EXPECT_EQ(tl_last_error_column(), 20u);
  EXPECT_NE(std::string(tl_last_error_message()).find("'q'"), std::string::npos);
}

TEST(CApi, RunTasksAndRender) {
  tl_definition* d = nullptr;
  ASSERT_EQ(tl_definition_canonical(1, 1, -1, TL_RIEMANNIAN, TL_MODE_DEFAULT, &d), TL_OK);
  tl_run_options opts;
  tl_run_options_init(&opts);
  EXPECT_EQ(opts.seed, tl_default_seed());
  tl_report* r = nullptr;
  ASSERT_EQ(tl_run(d, "theorem 4.1\n\nverify 4.1\n", &opts, &r), TL_OK);
  EXPECT_EQ(tl_report_passed(r), 1);
  EXPECT_EQ(tl_report_exit_status(r), 0);
  char* human = nullptr;
  ASSERT_EQ(tl_report_render(r, TL_FORMAT_HUMAN, &human), TL_OK);
  EXPECT_NE(take(human).find("(J~)^2 = eps*I : PASS"), std::string::npos);
  char* machine = nullptr;
  ASSERT_EQ(tl_report_render(r, TL_FORMAT_MACHINE, &machine), TL_OK);
  EXPECT_EQ(take(machine).rfind("{", 0), 0u);
  tl_report_free(r);

  EXPECT_EQ(tl_run(d, "theorem 4.1\nbogus\n", &opts, &r), TL_ERR_PARSE);
  EXPECT_EQ(tl_last_error_line(), 2u);
  tl_definition_free(d);
}

TEST(CApi, FailingRunExitStatus) {
  tl_definition* d = nullptr;
  ASSERT_EQ(tl_definition_canonical(1, 1, 1, TL_RIEMANNIAN, TL_MODE_CONSISTENT, &d), TL_OK);
  tl_report* r = nullptr;
  ASSERT_EQ(tl_run(d, "theorem 4.1", nullptr, &r), TL_OK);
  EXPECT_EQ(tl_report_exit_status(r), 1);
  tl_report_free(r);
  ASSERT_EQ(tl_run(d, "sweep complete", nullptr, &r), TL_OK);
  EXPECT_EQ(tl_report_exit_status(r), 0);
  tl_report_free(r);
  tl_definition_free(d);
}

TEST(CApi, Demo) {
  tl_report* r = nullptr;
  ASSERT_EQ(tl_run_demo(nullptr, &r), TL_OK);
  EXPECT_EQ(tl_report_exit_status(r), 0);
  tl_report_free(r);
}

TEST(CApi, InvalidArguments) {
  tl_definition* d = nullptr;
  EXPECT_EQ(tl_definition_parse(nullptr, 0, &d), TL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(tl_definition_canonical(1, 1, 3, TL_RIEMANNIAN, TL_MODE_DEFAULT, &d), TL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(tl_run(nullptr, nullptr, nullptr, nullptr), TL_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(tl_definition_equal(nullptr, nullptr), 0);
  EXPECT_STREQ(tl_status_string(TL_ERR_NOT_UNIMODULAR), "not unimodular");
  tl_definition_free(nullptr);
  tl_report_free(nullptr);
}

}  // namespace
