#pragma once
// Grid sweeps: a JSON configuration names registered checks and a value grid
// per parameter; the runner expands each grid in the check's declared
// parameter order and evaluates every point against a shared SequenceCache,
// optionally across several worker threads.  Results are positionally
// assigned, so the outcome is independent of the parallelism degree.
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "useq/check_result.hpp"
#include "useq/registry.hpp"

namespace useq {

// Carries a config-relative location in the message, e.g.
// 'specs[1].params.p: "from" exceeds "to"'.
class SweepConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SweepSpec {
  const CheckDef* check = nullptr;
  // One value list per parameter, in the check's declared order.
  std::vector<std::vector<Rational>> values;
  std::optional<int> parallelism;

  std::size_t grid_size() const {
    std::size_t n = 1;
    for (const auto& v : values) n *= v.size();
    return n;
  }
};

struct SweepConfig {
  std::optional<int> parallelism;
  std::vector<SweepSpec> specs;
};

// Accepted shape:
//   { "parallelism": 2,                  // optional, >= 1
//     "specs": [ { "check": "check_1_2",
//                  "params": { "p": {"from": 5, "to": 200} },   // or
//                             // "x": {"values": [1, "5/3", -2]}
//                  "parallelism": 1 } ] }                        // optional
// Unknown keys, unknown checks, missing or extra parameters, empty ranges
// and malformed values are all rejected with a located SweepConfigError.
SweepConfig parse_sweep_config(const std::string& text);

// Runs every grid point of every spec, in spec order.  Points that violate a
// check's precondition become skip records with the reason; a check that
// throws despite an admissible point becomes a failure record carrying the
// exception text.  default_parallelism applies when neither the spec nor the
// config sets one; 1 is fully serial.  Tables each spec needs are warmed
// serially before its points fan out.
std::vector<CheckResult> run_sweep(SequenceCache& cache, const SweepConfig& config,
                                   int default_parallelism);

}  // namespace useq
