#pragma once
// Deterministic JSON evidence reports.  The schema is fixed: top-level keys
// version, generated_at, results, summary, elapsed_ms in that order; each
// result carries check, params, modulus, lhs, rhs, status and, for skips and
// diagnosed failures, reason.  Values that can exceed native integer width
// (residues, moduli, sequence values) are serialized as decimal strings.
//
// Two renders of the same result set differ only in generated_at/elapsed_ms,
// so report bodies can be compared byte-for-byte across runs.
#include <cstddef>
#include <string>
#include <vector>

#include "useq/check_result.hpp"

namespace useq {

// Canonical record order: check name, then the parameter tuple compared
// value by value.  Stable, so duplicate grid points keep their input order.
void sort_results(std::vector<CheckResult>& results);

struct Tally {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
};

Tally tally(const std::vector<CheckResult>& results);

// Full report text (two-space indented JSON, trailing newline).  Sorts its
// copy of the results; pass timestamp and elapsed time in explicitly so the
// caller controls the only volatile fields.
std::string render_report(std::vector<CheckResult> results, const std::string& generated_at,
                          long long elapsed_ms);

// Current time as ISO-8601 UTC at second resolution, e.g. "2026-08-16T09:12:45Z".
std::string current_timestamp_utc();

}  // namespace useq
