#pragma once
// Outcome record for a single verification: the values that were compared
// (with the modulus when the comparison is a congruence), the parameter
// assignment that produced them, and an optional reason explaining a skip or
// a failure that never reached comparable residues.
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "useq/modular.hpp"
#include "useq/numbers.hpp"

namespace useq {

struct Param {
  std::string name;
  Rational value;
};

// One compared pair.  Congruence checks store both sides as canonical
// residues and set `modulus`, so equality of lhs and rhs is exactly the
// congruence; identity checks compare exact rationals and leave `modulus`
// empty.  `label` stays "" for single-comparison checks and names the part
// ("i", "plain", "S2", ...) when one check verifies several statements.
struct Comparison {
  std::string label;
  Rational lhs;
  Rational rhs;
  std::optional<Integer> modulus;

  bool holds() const { return lhs == rhs; }
};

inline Comparison exact_comparison(std::string label, Rational lhs, Rational rhs) {
  return Comparison{std::move(label), std::move(lhs), std::move(rhs), std::nullopt};
}

inline Comparison residue_comparison(std::string label, const Residue& lhs, const Residue& rhs) {
  if (lhs.modulus != rhs.modulus)
    throw std::logic_error("residue comparison across different moduli");
  return Comparison{std::move(label), Rational(lhs.value), Rational(rhs.value), lhs.modulus};
}

enum class Status { pass, fail, skip };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    default: return "skip";
  }
}

struct CheckResult {
  std::string check;
  std::vector<Param> params;
  std::vector<Comparison> comparisons;
  // Skip explanation (unsatisfied precondition on a grid point) or, on a
  // failure with no comparable residues, a diagnostic.
  std::optional<std::string> reason;
  bool skipped = false;

  Status status() const {
    if (skipped) return Status::skip;
    if (reason || comparisons.empty()) return Status::fail;
    for (const Comparison& c : comparisons)
      if (!c.holds()) return Status::fail;
    return Status::pass;
  }
  bool passed() const { return status() == Status::pass; }

  static CheckResult skip(std::string check, std::vector<Param> params, std::string why) {
    CheckResult r;
    r.check = std::move(check);
    r.params = std::move(params);
    r.reason = std::move(why);
    r.skipped = true;
    return r;
  }
};

}  // namespace useq
