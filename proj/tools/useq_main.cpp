// Command-line front end: compute sequence values, run single checks, sweep
// parameter grids into JSON reports, and persist the sequence tables.
//
// Exit codes: 0 = success / all checks passed, 1 = a check failed or a
// runtime operation (report write, cache verification) did, 2 = usage or
// configuration error.

#include <chrono>
#include <cstddef>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "useq/cache_io.hpp"
#include "useq/check_result.hpp"
#include "useq/registry.hpp"
#include "useq/report.hpp"
#include "useq/sequences.hpp"
#include "useq/sweep.hpp"
#include "useq/version.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int compute_command(useq::SequenceCache& cache, const std::string& sequence,
                    long n) {
  using namespace useq;
  if (sequence == "U")
    std::cout << to_string(cache.u_number(n)) << '\n';
  else if (sequence == "E")
    std::cout << to_string(cache.euler_number(n)) << '\n';
  else if (sequence == "B")
    std::cout << to_string(cache.bernoulli_number(n)) << '\n';
  else if (sequence == "Upoly")
    std::cout << u_polynomial(cache, n).str() << '\n';
  else if (sequence == "Epoly")
    std::cout << euler_polynomial(cache, n).str() << '\n';
  else
    std::cout << bernoulli_polynomial(cache, n).str() << '\n';
  return kExitPass;
}

int check_command(useq::SequenceCache& cache, const std::string& name,
                  const std::vector<std::string>& raw_params) {
  using namespace useq;
  const CheckDef* def = find_check(name);
  if (def == nullptr) {
    std::cerr << "error: unknown check \"" << name << "\"\n";
    return kExitUsage;
  }

  std::vector<std::optional<Rational>> values(def->params.size());
  for (const std::string& raw : raw_params) {
    const auto eq = raw.find('=');
    if (eq == std::string::npos) {
      std::cerr << "error: --param expects name=value, got \"" << raw << "\"\n";
      return kExitUsage;
    }
    const std::string pname = raw.substr(0, eq);
    std::size_t slot = def->params.size();
    for (std::size_t i = 0; i < def->params.size(); ++i)
      if (def->params[i].name == pname) {
        slot = i;
        break;
      }
    if (slot == def->params.size()) {
      std::cerr << "error: " << def->name << " has no parameter \"" << pname
                << "\"\n";
      return kExitUsage;
    }
    if (values[slot].has_value()) {
      std::cerr << "error: duplicate parameter \"" << pname << "\"\n";
      return kExitUsage;
    }
    try {
      values[slot] = parse_rational(raw.substr(eq + 1));
    } catch (const std::invalid_argument& e) {
      std::cerr << "error: bad value for \"" << pname << "\": " << e.what()
                << '\n';
      return kExitUsage;
    }
  }

  std::vector<Rational> point;
  point.reserve(def->params.size());
  for (std::size_t i = 0; i < def->params.size(); ++i) {
    if (!values[i].has_value()) {
      std::cerr << "error: missing parameter \"" << def->params[i].name
                << "\" for " << def->name << '\n';
      return kExitUsage;
    }
    point.push_back(*values[i]);
  }
  if (const auto why = def->admissible(point)) {
    std::cerr << "error: " << *why << '\n';
    return kExitUsage;
  }

  const CheckResult result = def->run(cache, point);
  std::cout << result.check;
  for (const Param& p : result.params)
    std::cout << ' ' << p.name << '=' << to_string(p.value);
  std::cout << ": " << to_string(result.status()) << '\n';
  for (const Comparison& c : result.comparisons) {
    std::cout << "  ";
    if (!c.label.empty()) std::cout << '[' << c.label << "] ";
    std::cout << "lhs = " << to_string(c.lhs) << "  rhs = " << to_string(c.rhs);
    if (c.modulus.has_value()) std::cout << "  (mod " << to_string(*c.modulus) << ')';
    if (!c.holds()) std::cout << "  <- differs";
    std::cout << '\n';
  }
  if (result.reason.has_value()) std::cout << "  reason: " << *result.reason << '\n';
  return result.passed() ? kExitPass : kExitFail;
}

int sweep_command(useq::SequenceCache& cache, const std::string& config_path,
                  const std::string& out_path, bool serial) {
  using namespace useq;
  std::ifstream in(config_path);
  if (!in) {
    std::cerr << "error: cannot open config \"" << config_path << "\"\n";
    return kExitUsage;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  SweepConfig config;
  try {
    config = parse_sweep_config(buffer.str());
  } catch (const SweepConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  int default_parallelism = 1;
  if (!serial) {
    const unsigned hc = std::thread::hardware_concurrency();
    default_parallelism = hc == 0 ? 1 : static_cast<int>(hc);
  }

  const auto start = std::chrono::steady_clock::now();
  const std::vector<CheckResult> results =
      run_sweep(cache, config, default_parallelism);
  const auto elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - start)
                              .count();

  const std::string report =
      render_report(results, current_timestamp_utc(), elapsed_ms);
  std::ofstream out(out_path, std::ios::trunc);
  if (!out) {
    std::cerr << "error: cannot open \"" << out_path << "\" for writing\n";
    return kExitFail;
  }
  out << report;
  out.flush();
  if (!out) {
    std::cerr << "error: write to \"" << out_path << "\" failed\n";
    return kExitFail;
  }

  const Tally t = tally(results);
  std::cout << "checks: " << t.total << "  passed: " << t.passed
            << "  failed: " << t.failed << "  skipped: " << t.skipped << '\n'
            << "report: " << out_path << '\n';
  return t.failed == 0 ? kExitPass : kExitFail;
}

int cache_save_command(useq::SequenceCache& cache, const std::string& path,
                       long max_u, long max_euler, long max_bernoulli) {
  using namespace useq;
  try {
    // A bound both warms the table to that index and trims the file to it;
    // without bounds the file holds whatever is already materialised.
    if (max_u >= 0) cache.u_number(max_u - (max_u % 2));
    if (max_euler >= 0) cache.euler_number(max_euler - (max_euler % 2));
    if (max_bernoulli >= 0) cache.bernoulli_number(max_bernoulli);
    save_cache(cache, path, max_u, max_euler, max_bernoulli);
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  std::cout << "saved " << path << '\n';
  return kExitPass;
}

int cache_load_command(useq::SequenceCache& cache, const std::string& path,
                       bool trust) {
  using namespace useq;
  try {
    load_cache(cache, path, trust ? 0.0 : 0.01);
  } catch (const CacheError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  std::cout << "loaded " << path << "  (U up to " << cache.u_high_water()
            << ", E up to " << cache.euler_high_water() << ", B up to "
            << cache.bernoulli_high_water() << ")\n";
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact computation and mechanical verification of the {U_n} sequence, "
      "its polynomials, and the Euler/Bernoulli families"};
  app.set_version_flag("--version", std::string("useq ") + useq::kVersion);
  app.require_subcommand(1);

  std::string preload_path;
  bool trust_cache = false;
  app.add_option("--cache", preload_path,
                 "Load sequence tables from this file before running");
  app.add_flag("--trust-cache", trust_cache,
               "Skip sample re-verification of loaded cache files");

  const auto index_range = CLI::Range(0l, useq::kMaxSequenceIndex);

  auto* compute = app.add_subcommand(
      "compute", "Print one value of U, E, B, Upoly, Epoly, or Bpoly");
  std::string sequence;
  long compute_n = 0;
  compute->add_option("sequence", sequence, "U, E, B, Upoly, Epoly, or Bpoly")
      ->required()
      ->check(CLI::IsMember({"U", "E", "B", "Upoly", "Epoly", "Bpoly"}));
  compute->add_option("n", compute_n, "index")->required()->check(index_range);

  auto* check =
      app.add_subcommand("check", "Run a single check at one parameter point");
  std::string check_name;
  std::vector<std::string> raw_params;
  check->add_option("name", check_name, "check name (check_ prefix optional)")
      ->required();
  check->add_option("--param,-p", raw_params,
                    "parameter as name=value; repeat per parameter");

  auto* sweep = app.add_subcommand(
      "sweep", "Run a grid of checks from a JSON config and write a report");
  std::string config_path, out_path;
  bool serial = false;
  sweep->add_option("--config", config_path, "sweep configuration JSON")
      ->required();
  sweep->add_option("--out", out_path, "report output path")->required();
  sweep->add_flag("--serial", serial, "run everything on one thread");

  auto* cache_cmd =
      app.add_subcommand("cache", "Persist or restore the sequence tables");
  cache_cmd->require_subcommand(1);
  auto* cache_save = cache_cmd->add_subcommand(
      "save", "Write the tables to a file, optionally warming them first");
  std::string save_path;
  long save_u = -1, save_euler = -1, save_bernoulli = -1;
  cache_save->add_option("path", save_path)->required();
  cache_save->add_option("--u", save_u, "warm and save U up to this index")
      ->check(index_range);
  cache_save->add_option("--e", save_euler, "warm and save E up to this index")
      ->check(index_range);
  cache_save
      ->add_option("--b", save_bernoulli, "warm and save B up to this index")
      ->check(index_range);
  auto* cache_load =
      cache_cmd->add_subcommand("load", "Read tables from a file");
  std::string load_path;
  cache_load->add_option("path", load_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  useq::SequenceCache cache;
  if (!preload_path.empty()) {
    try {
      useq::load_cache(cache, preload_path, trust_cache ? 0.0 : 0.01);
    } catch (const useq::CacheError& e) {
      std::cerr << "error: " << e.what() << '\n';
      return kExitFail;
    }
  }

  try {
    if (compute->parsed()) return compute_command(cache, sequence, compute_n);
    if (check->parsed()) return check_command(cache, check_name, raw_params);
    if (sweep->parsed())
      return sweep_command(cache, config_path, out_path, serial);
    if (cache_save->parsed())
      return cache_save_command(cache, save_path, save_u, save_euler,
                                save_bernoulli);
    if (cache_load->parsed())
      return cache_load_command(cache, load_path, trust_cache);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
