#include "useq/report.hpp"

#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"
#include "useq/congruence_checks.hpp"
#include "useq/identity_checks.hpp"
#include "useq/version.hpp"

using namespace useq;
using json = nlohmann::json;

TEST_CASE("report carries the fixed schema in the fixed key order") {
  SequenceCache cache;
  std::vector<CheckResult> results;
  results.push_back(check_theorem_3_1(cache, 7));
  std::string text = render_report(results, "2026-08-16T00:00:00Z", 12);

  auto pos = [&](const char* key) { return text.find(std::string("\"") + key + "\""); };
  REQUIRE(pos("version") != std::string::npos);
  CHECK(pos("version") < pos("generated_at"));
  CHECK(pos("generated_at") < pos("results"));
  CHECK(pos("results") < pos("summary"));
  CHECK(pos("summary") < pos("elapsed_ms"));

  json doc = json::parse(text);
  CHECK(doc["version"] == kVersion);
  CHECK(doc["generated_at"] == "2026-08-16T00:00:00Z");
  CHECK(doc["elapsed_ms"] == 12);
  REQUIRE(doc["results"].size() == 1);
  const json& rec = doc["results"][0];
  CHECK(rec["check"] == "check_theorem_3_1");
  CHECK(rec["params"]["n"] == 7);
  CHECK(rec["modulus"] == "16384");
  CHECK(rec["lhs"] == "11442");
  CHECK(rec["rhs"] == "11442");
  CHECK(rec["status"] == "pass");
  CHECK(!rec.contains("reason"));
  CHECK(doc["summary"]["total"] == 1);
  CHECK(doc["summary"]["passed"] == 1);
  CHECK(doc["summary"]["failed"] == 0);
  CHECK(doc["summary"]["skipped"] == 0);
}

TEST_CASE("multi-part results fold labelled values into single fields") {
  SequenceCache cache;
  std::string text =
      render_report({check_theorem_3_2(cache, 1, 3, 2)}, "2026-08-16T00:00:00Z", 0);
  json rec = json::parse(text)["results"][0];
  CHECK(rec["lhs"] == "i:6; ii:6");
  CHECK(rec["rhs"] == "i:6; ii:6");
  CHECK(rec["modulus"] == "i:32; ii:64");

  std::string exact =
      render_report({check_classical_sums(cache, 3, 5)}, "2026-08-16T00:00:00Z", 0);
  json rec2 = json::parse(exact)["results"][0];
  CHECK(rec2["lhs"] == "plain:100; alternating:44");
  CHECK(rec2["modulus"].is_null());
}

TEST_CASE("skips and reasons appear as a third outcome with null values") {
  std::vector<CheckResult> results;
  results.push_back(
      CheckResult::skip("check_1_2", {{"p", Rational(9)}}, "p must be prime"));
  SequenceCache cache;
  results.push_back(check_1_2(cache, 5));
  std::string text = render_report(std::move(results), "2026-08-16T00:00:00Z", 3);
  json doc = json::parse(text);
  REQUIRE(doc["results"].size() == 2);
  // Sorted by parameter: p=5 before p=9.
  CHECK(doc["results"][0]["params"]["p"] == 5);
  CHECK(doc["results"][0]["status"] == "pass");
  const json& skip = doc["results"][1];
  CHECK(skip["status"] == "skip");
  CHECK(skip["reason"] == "p must be prime");
  CHECK(skip["lhs"].is_null());
  CHECK(skip["rhs"].is_null());
  CHECK(skip["modulus"].is_null());
  CHECK(doc["summary"]["total"] == 2);
  CHECK(doc["summary"]["passed"] == 1);
  CHECK(doc["summary"]["skipped"] == 1);
}

TEST_CASE("records sort by check name then parameter tuple") {
  SequenceCache cache;
  std::vector<CheckResult> results;
  results.push_back(check_3_1(cache, 10));
  results.push_back(check_theorem_2_1(cache, 2, 4));
  results.push_back(check_3_1(cache, 3));
  results.push_back(check_theorem_2_1(cache, 1, 9));
  results.push_back(check_theorem_2_1(cache, 1, 2));
  sort_results(results);
  CHECK(results[0].check == "check_3_1");
  CHECK(results[0].params[0].value == Rational(3));
  CHECK(results[1].params[0].value == Rational(10));
  CHECK(results[2].check == "check_theorem_2_1");
  CHECK(results[2].params[0].value == Rational(1));
  CHECK(results[2].params[1].value == Rational(2));
  CHECK(results[3].params[1].value == Rational(9));
  CHECK(results[4].params[0].value == Rational(2));
}

TEST_CASE("rational parameters render as fraction strings, integers as numbers") {
  SequenceCache cache;
  std::string text = render_report({check_translation(cache, 3, make_rational(5, 3))},
                                   "2026-08-16T00:00:00Z", 0);
  json rec = json::parse(text)["results"][0];
  CHECK(rec["params"]["n"] == 3);
  CHECK(rec["params"]["x"] == "5/3");
}

TEST_CASE("rendering the same results twice is byte-identical") {
  SequenceCache cache;
  std::vector<CheckResult> results;
  for (long p : {5L, 7L, 11L}) results.push_back(check_1_4(cache, p));
  std::string a = render_report(results, "2026-08-16T00:00:00Z", 5);
  std::string b = render_report(results, "2026-08-16T00:00:00Z", 5);
  CHECK(a == b);
  CHECK(a.back() == '\n');
}

TEST_CASE("summary arithmetic is consistent with the records") {
  SequenceCache cache;
  std::vector<CheckResult> results;
  results.push_back(check_3_1(cache, 3));
  results.push_back(CheckResult::skip("check_3_1", {{"n", Rational(1)}}, "n must be at least 3"));
  // A manufactured failure: equal-modulus residues that differ.
  CheckResult bad;
  bad.check = "check_3_1";
  bad.params = {{"n", Rational(99)}};
  bad.comparisons.push_back(
      Comparison{"", Rational(1), Rational(2), Integer(128)});
  results.push_back(bad);
  Tally t = tally(results);
  CHECK(t.total == 3);
  CHECK(t.passed == 1);
  CHECK(t.failed == 1);
  CHECK(t.skipped == 1);
  json doc = json::parse(render_report(std::move(results), "2026-08-16T00:00:00Z", 1));
  CHECK(doc["summary"]["failed"] == 1);
  // The failing record still exposes both residues as evidence.
  bool found = false;
  for (const auto& rec : doc["results"])
    if (rec["status"] == "fail") {
      found = true;
      CHECK(rec["lhs"] == "1");
      CHECK(rec["rhs"] == "2");
    }
  CHECK(found);
}

TEST_CASE("timestamps render as ISO-8601 UTC") {
  std::string ts = current_timestamp_utc();
  REQUIRE(ts.size() == 20);
  CHECK(ts[4] == '-');
  CHECK(ts[7] == '-');
  CHECK(ts[10] == 'T');
  CHECK(ts[13] == ':');
  CHECK(ts[16] == ':');
  CHECK(ts.back() == 'Z');
}
