#include "useq/sweep.hpp"

#include <atomic>
#include <thread>
#include <utility>

#include "json.hpp"

namespace useq {
namespace {

using json = nlohmann::ordered_json;

constexpr std::size_t kMaxRangePoints = 100000;
constexpr std::size_t kMaxGridPoints = 1000000;

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw SweepConfigError(where + ": " + what);
}

long long require_integer(const json& v, const std::string& where, const char* what) {
  if (!v.is_number_integer()) fail(where, std::string(what) + " must be an integer");
  return v.get<long long>();
}

int parse_parallelism(const json& v, const std::string& where) {
  long long n = require_integer(v, where, "\"parallelism\"");
  if (n < 1) fail(where, "\"parallelism\" must be at least 1");
  if (n > 1024) fail(where, "\"parallelism\" must be at most 1024");
  return static_cast<int>(n);
}

std::vector<Rational> parse_value_set(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "expected {\"from\", \"to\"} or {\"values\": [...]}");
  for (const auto& [key, unused] : v.items()) {
    (void)unused;
    if (key != "from" && key != "to" && key != "values")
      fail(where, "unknown key \"" + key + "\"");
  }

  if (v.contains("values")) {
    if (v.contains("from") || v.contains("to"))
      fail(where, "\"values\" cannot be combined with \"from\"/\"to\"");
    const json& list = v["values"];
    if (!list.is_array() || list.empty()) fail(where, "\"values\" must be a non-empty array");
    std::vector<Rational> out;
    out.reserve(list.size());
    for (const json& item : list) {
      if (item.is_number_integer()) {
        out.push_back(Rational(Integer(static_cast<long>(item.get<long long>()))));
      } else if (item.is_string()) {
        try {
          out.push_back(parse_rational(item.get<std::string>()));
        } catch (const std::invalid_argument& e) {
          fail(where, "bad value \"" + item.get<std::string>() + "\": " + e.what());
        }
      } else {
        fail(where, "values must be integers or rational strings");
      }
    }
    return out;
  }

  if (!v.contains("from") || !v.contains("to"))
    fail(where, "expected both \"from\" and \"to\"");
  long long from = require_integer(v["from"], where, "\"from\"");
  long long to = require_integer(v["to"], where, "\"to\"");
  if (from > to) fail(where, "\"from\" exceeds \"to\"");
  // Exact span arithmetic so extreme endpoints cannot overflow.
  Integer span = Integer(static_cast<long>(to)) - Integer(static_cast<long>(from)) + 1;
  if (span > static_cast<long>(kMaxRangePoints))
    fail(where, "range has more than " + std::to_string(kMaxRangePoints) + " points");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(to_long(span)));
  for (long long i = from; i <= to; ++i)
    out.push_back(Rational(Integer(static_cast<long>(i))));
  return out;
}

SweepSpec parse_spec(const json& v, const std::string& where) {
  if (!v.is_object()) fail(where, "spec must be an object");
  for (const auto& [key, unused] : v.items()) {
    (void)unused;
    if (key != "check" && key != "params" && key != "parallelism")
      fail(where, "unknown key \"" + key + "\"");
  }
  if (!v.contains("check") || !v["check"].is_string())
    fail(where, "missing \"check\" name");
  const std::string name = v["check"].get<std::string>();
  const CheckDef* def = find_check(name);
  if (def == nullptr) fail(where, "unknown check \"" + name + "\"");

  SweepSpec spec;
  spec.check = def;
  if (v.contains("parallelism"))
    spec.parallelism = parse_parallelism(v["parallelism"], where);

  if (!v.contains("params") || !v["params"].is_object())
    fail(where, "missing \"params\" object");
  const json& params = v["params"];
  for (const auto& [key, unused] : params.items()) {
    (void)unused;
    bool known = false;
    for (const ParamSpec& ps : def->params) known = known || ps.name == key;
    if (!known) fail(where + ".params", def->name + " has no parameter \"" + key + "\"");
  }
  for (const ParamSpec& ps : def->params) {
    if (!params.contains(ps.name))
      fail(where + ".params", "missing parameter \"" + ps.name + "\"");
    spec.values.push_back(parse_value_set(params[ps.name], where + ".params." + ps.name));
  }
  if (spec.grid_size() > kMaxGridPoints)
    fail(where, "grid has more than " + std::to_string(kMaxGridPoints) + " points");
  return spec;
}

// Grid expansion in declared parameter order: the last parameter varies
// fastest, like nested loops written left to right.
std::vector<std::vector<Rational>> expand_grid(const SweepSpec& spec) {
  std::vector<std::vector<Rational>> points;
  points.reserve(spec.grid_size());
  std::vector<std::size_t> odo(spec.values.size(), 0);
  for (;;) {
    std::vector<Rational> point;
    point.reserve(odo.size());
    for (std::size_t i = 0; i < odo.size(); ++i) point.push_back(spec.values[i][odo[i]]);
    points.push_back(std::move(point));
    std::size_t i = odo.size();
    for (;;) {
      if (i == 0) return points;
      --i;
      if (++odo[i] < spec.values[i].size()) break;
      odo[i] = 0;
    }
  }
}

std::vector<Param> named_params(const CheckDef& def, const std::vector<Rational>& point) {
  std::vector<Param> out;
  out.reserve(point.size());
  for (std::size_t i = 0; i < point.size(); ++i)
    out.push_back({def.params[i].name, point[i]});
  return out;
}

CheckResult run_point(SequenceCache& cache, const CheckDef& def,
                      const std::vector<Rational>& point) {
  try {
    return def.run(cache, point);
  } catch (const std::exception& e) {
    // Admissible points should never throw; surface the anomaly as a failure
    // rather than tearing down the sweep.
    CheckResult r;
    r.check = def.name;
    r.params = named_params(def, point);
    r.reason = std::string("check aborted: ") + e.what();
    return r;
  }
}

}  // namespace

SweepConfig parse_sweep_config(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw SweepConfigError(std::string("config: ") + e.what());
  }
  if (!doc.is_object()) throw SweepConfigError("config: top level must be an object");
  for (const auto& [key, unused] : doc.items()) {
    (void)unused;
    if (key != "parallelism" && key != "specs")
      throw SweepConfigError("config: unknown key \"" + key + "\"");
  }
  SweepConfig config;
  if (doc.contains("parallelism"))
    config.parallelism = parse_parallelism(doc["parallelism"], "config");
  if (!doc.contains("specs") || !doc["specs"].is_array())
    throw SweepConfigError("config: missing \"specs\" array");
  std::size_t i = 0;
  for (const json& spec : doc["specs"]) {
    config.specs.push_back(parse_spec(spec, "specs[" + std::to_string(i) + "]"));
    ++i;
  }
  return config;
}

std::vector<CheckResult> run_sweep(SequenceCache& cache, const SweepConfig& config,
                                   int default_parallelism) {
  std::vector<CheckResult> results;
  for (const SweepSpec& spec : config.specs) {
    const CheckDef& def = *spec.check;
    const std::vector<std::vector<Rational>> points = expand_grid(spec);

    // Screen the grid: inadmissible points become skips immediately; the
    // rest are tasks.  Slots are fixed now, so workers cannot reorder
    // anything.
    const std::size_t base = results.size();
    results.resize(base + points.size());
    std::vector<std::size_t> task_slots;
    Demands warmup;
    for (std::size_t p = 0; p < points.size(); ++p) {
      if (auto why = def.admissible(points[p])) {
        results[base + p] = CheckResult::skip(def.name, named_params(def, points[p]), *why);
      } else {
        warmup.absorb(def.demands(points[p]));
        task_slots.push_back(p);
      }
    }

    // Fill the tables to the spec's high-water marks once, serially; the
    // parallel phase then only reads.
    if (warmup.u >= 0) cache.u_number(warmup.u - (warmup.u % 2));
    if (warmup.euler >= 0) cache.euler_number(warmup.euler - (warmup.euler % 2));
    if (warmup.bernoulli >= 0) cache.bernoulli_number(warmup.bernoulli);

    int threads = spec.parallelism.value_or(config.parallelism.value_or(default_parallelism));
    if (threads < 1) threads = 1;
    const std::size_t task_count = task_slots.size();
    if (threads == 1 || task_count <= 1) {
      for (std::size_t slot : task_slots)
        results[base + slot] = run_point(cache, def, points[slot]);
    } else {
      std::atomic<std::size_t> next{0};
      auto worker = [&]() {
        for (;;) {
          std::size_t t = next.fetch_add(1);
          if (t >= task_count) return;
          std::size_t slot = task_slots[t];
          results[base + slot] = run_point(cache, def, points[slot]);
        }
      };
      std::vector<std::thread> pool;
      std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(threads), task_count);
      pool.reserve(n);
      for (std::size_t w = 0; w < n; ++w) pool.emplace_back(worker);
      for (std::thread& t : pool) t.join();
    }
  }
  return results;
}

}  // namespace useq
