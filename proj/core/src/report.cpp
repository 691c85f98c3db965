#include "useq/report.hpp"

#include <algorithm>
#include <ctime>
#include <functional>

#include "json.hpp"
#include "useq/version.hpp"

namespace useq {
namespace {

using json = nlohmann::ordered_json;

bool result_less(const CheckResult& a, const CheckResult& b) {
  if (a.check != b.check) return a.check < b.check;
  const std::size_t n = std::min(a.params.size(), b.params.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a.params[i].value < b.params[i].value) return true;
    if (b.params[i].value < a.params[i].value) return false;
  }
  return a.params.size() < b.params.size();
}

json param_value(const Rational& v) {
  if (is_integral(v) && fits_long(v.get_num()))
    return static_cast<std::int64_t>(to_long(v.get_num()));
  return to_string(v);
}

// Residues and identity values print as exact decimal (or num/den) strings.
std::string value_text(const Rational& v) { return to_string(v); }

// A multi-part result folds its labelled parts into one field:
// "i:6; ii:6".  Single unlabelled comparisons print the bare value.
json fold(const std::vector<Comparison>& comparisons,
          const std::function<std::string(const Comparison&)>& piece,
          const std::function<bool(const Comparison&)>& present) {
  if (comparisons.empty()) return nullptr;
  bool any = false;
  for (const Comparison& c : comparisons) any = any || present(c);
  if (!any) return nullptr;
  if (comparisons.size() == 1) return piece(comparisons.front());
  std::string out;
  for (const Comparison& c : comparisons) {
    if (!out.empty()) out += "; ";
    out += c.label + ":" + (present(c) ? piece(c) : std::string("-"));
  }
  return out;
}

json result_json(const CheckResult& r) {
  json rec;
  rec["check"] = r.check;
  json params = json::object();
  for (const Param& p : r.params) params[p.name] = param_value(p.value);
  rec["params"] = std::move(params);
  auto always = [](const Comparison&) { return true; };
  rec["modulus"] = fold(
      r.comparisons, [](const Comparison& c) { return to_string(*c.modulus); },
      [](const Comparison& c) { return c.modulus.has_value(); });
  rec["lhs"] = fold(r.comparisons, [](const Comparison& c) { return value_text(c.lhs); }, always);
  rec["rhs"] = fold(r.comparisons, [](const Comparison& c) { return value_text(c.rhs); }, always);
  rec["status"] = to_string(r.status());
  if (r.reason) rec["reason"] = *r.reason;
  return rec;
}

}  // namespace

void sort_results(std::vector<CheckResult>& results) {
  std::stable_sort(results.begin(), results.end(), result_less);
}

Tally tally(const std::vector<CheckResult>& results) {
  Tally t;
  t.total = results.size();
  for (const CheckResult& r : results) {
    switch (r.status()) {
      case Status::pass: ++t.passed; break;
      case Status::fail: ++t.failed; break;
      case Status::skip: ++t.skipped; break;
    }
  }
  return t;
}

std::string render_report(std::vector<CheckResult> results, const std::string& generated_at,
                          long long elapsed_ms) {
  sort_results(results);
  const Tally t = tally(results);

  json report;
  report["version"] = kVersion;
  report["generated_at"] = generated_at;
  json records = json::array();
  for (const CheckResult& r : results) records.push_back(result_json(r));
  report["results"] = std::move(records);
  report["summary"] = {
      {"total", t.total}, {"passed", t.passed}, {"failed", t.failed}, {"skipped", t.skipped}};
  report["elapsed_ms"] = elapsed_ms;
  return report.dump(2) + "\n";
}

std::string current_timestamp_utc() {
  std::time_t now = std::time(nullptr);
  std::tm parts{};
  gmtime_r(&now, &parts);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &parts);
  return buf;
}

}  // namespace useq
