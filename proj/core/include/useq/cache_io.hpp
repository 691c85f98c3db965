#ifndef USEQ_CACHE_IO_HPP
#define USEQ_CACHE_IO_HPP

#include <stdexcept>
#include <string>

#include "useq/sequences.hpp"

namespace useq {

// Plain-text persistence for the sequence tables.
//
// File format: one record per line, `<tag> <index> <value>`, where tag is
// U, E, or B.  U and E values are integers; B values are rationals written
// as `num/den` (an integer without the slash is also accepted on load, and
// either way the fraction must be in lowest terms with a positive
// denominator).  Saving writes even U/E indices only -- the odd entries are
// identically zero -- but a loader accepts explicit odd records whose value
// is 0.  Each sequence must form a dense prefix: every index from 0 up to
// the largest one recorded must be present exactly once (stepping by 2 for
// U and E).
//
// Loading never trusts the file blindly by default: after the structural
// checks, a random sample of the records is recomputed from the recurrences
// on a scratch table and compared.  The sampler is seeded from a hash of
// the file's bytes, so a given file always replays the same sample and a
// corrupt record is reported identically on every attempt.

class CacheError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes the table prefixes held by `cache` to `path`, overwriting it.  A
// non-negative bound trims the corresponding sequence to indices <= bound;
// -1 writes everything materialised.  Saving never computes new values --
// warm the cache first to persist more.  Throws CacheError on I/O failure.
void save_cache(SequenceCache& cache, const std::string& path, long max_u = -1,
                long max_euler = -1, long max_bernoulli = -1);

// Replaces the contents of `cache` with the records in `path`.  A fraction
// `sample_fraction` of the records (rounded up, at least one when any
// exist) is recomputed from scratch and compared; pass 0 to skip the
// recomputation and 1 to verify every record.  Throws CacheError -- citing
// the offending line -- on I/O failure, malformed or non-canonical records,
// gaps, duplicates, or a value that disagrees with its recomputation; on
// throw, `cache` is left untouched.
void load_cache(SequenceCache& cache, const std::string& path,
                double sample_fraction = 0.01);

}  // namespace useq

#endif  // USEQ_CACHE_IO_HPP
