#include <string>

#include "doctest.h"
#include "domsetkit/errors.hpp"
#include "domsetkit/report.hpp"

namespace {

using namespace domsetkit;

SolveReport sample() {
  SolveReport r;
  r.algorithm = "tw-exact";
  r.parameters["width"] = 2;
  r.solution = {1, 4, 7};
  r.weight = 3;
  r.dominating = true;
  r.oracle_status = "ok";
  r.ratio = 1.0;
  r.modulator = {2, 5};
  r.wall_ms = 0.5;
  return r;
}

}  // namespace

TEST_CASE("reports round-trip through the schema check") {
  std::string text = report_to_json(sample());
  SolveReport back = report_from_json(text);
  CHECK(report_to_json(back) == text);
  CHECK(back.algorithm == "tw-exact");
  CHECK(back.parameters.at("width") == 2);
  CHECK(back.solution == std::vector<int>{1, 4, 7});
  CHECK(back.ratio == 1.0);
  CHECK(back.modulator == std::vector<int>{2, 5});

  SolveReport plain;
  plain.algorithm = "greedy";
  plain.oracle_status = "skipped: cap";
  std::string t2 = report_to_json(plain);
  CHECK(report_to_json(report_from_json(t2)) == t2);
}

TEST_CASE("malformed reports are rejected") {
  CHECK_THROWS_AS(report_from_json("not json"), ValidationError);
  CHECK_THROWS_AS(report_from_json("[1,2]"), ValidationError);
  CHECK_THROWS_AS(report_from_json("{\"algorithm\":\"x\"}"), ValidationError);

  std::string good = report_to_json(sample());
  std::string wrong_size = good;
  wrong_size.replace(wrong_size.find("\"size\":3"), 8, "\"size\":4");
  CHECK_THROWS_AS(report_from_json(wrong_size), ValidationError);

  std::string bad_oracle = good;
  bad_oracle.replace(bad_oracle.find("\"oracle\":\"ok\""), 13, "\"oracle\":\"hm\"");
  CHECK_THROWS_AS(report_from_json(bad_oracle), ValidationError);

  std::string bad_id = good;
  bad_id.replace(bad_id.find("[1,4,7]"), 7, "[0,4,7]");
  CHECK_THROWS_AS(report_from_json(bad_id), ValidationError);
}
