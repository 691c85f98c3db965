#pragma once
// Name-indexed catalogue of every verification this library can run.  The
// CLI and the sweep runner drive checks exclusively through this table: it
// owns each check's parameter signature, its admissibility rule (producing a
// human-readable reason when a grid point falls outside the statement), the
// table indices the check will touch (for serial cache warm-up), and the
// runner itself.
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "useq/check_result.hpp"
#include "useq/sequences.hpp"

namespace useq {

enum class ParamKind { integral, rational };

struct ParamSpec {
  std::string name;
  ParamKind kind;
};

// Highest table index a check run will request per sequence, -1 for none.
// Warming the caches to these indices up front keeps the parallel phase of a
// sweep free of redundant recurrence work.
struct Demands {
  long u = -1;
  long euler = -1;
  long bernoulli = -1;

  void absorb(const Demands& other) {
    u = std::max(u, other.u);
    euler = std::max(euler, other.euler);
    bernoulli = std::max(bernoulli, other.bernoulli);
  }
};

struct CheckDef {
  std::string name;  // canonical name, always with the "check_" prefix
  std::vector<ParamSpec> params;
  // Empty result when the assignment is admissible; otherwise the reason it
  // violates the check's precondition (or the usage guard).
  std::function<std::optional<std::string>(const std::vector<Rational>&)> admissible;
  // Only meaningful for admissible assignments.
  std::function<Demands(const std::vector<Rational>&)> demands;
  std::function<CheckResult(SequenceCache&, const std::vector<Rational>&)> run;
};

// All registered checks, in a fixed order.
const std::vector<CheckDef>& check_registry();

// Lookup by canonical name or by the alias without the "check_" prefix
// ("theorem_3_1" resolves to "check_theorem_3_1").  nullptr when unknown.
const CheckDef* find_check(const std::string& name);

// Guard against runaway table growth from a typo'd parameter: integer
// parameters and every computed sequence index must stay within this bound.
inline constexpr long kMaxSequenceIndex = 50000;

}  // namespace useq
