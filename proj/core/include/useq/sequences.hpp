#ifndef USEQ_SEQUENCES_HPP
#define USEQ_SEQUENCES_HPP

#include <mutex>
#include <vector>

#include "useq/numbers.hpp"
#include "useq/polynomial.hpp"

namespace useq {

// C(n, k) by the multiplicative formula with running exact division.
// Returns 0 for k < 0 or k > n; rejects n < 0.
Integer binomial(const Integer& n, const Integer& k);

// The even-column slice of a binomial row: { C(n, 0), C(n, 2), ..., C(n, 2*floor(n/2)) },
// built incrementally.  The inner loops of the sequence recurrences and of
// several checks walk exactly this slice.
std::vector<Integer> binomial_even_row(long n);

// Exponent of the prime p in n! via the classical digit-sum formula
// sum_{i>=1} floor(n / p^i); always strictly below n/(p-1).  Rejects p < 2.
Integer factorial_valuation(const Integer& n, const Integer& p);

// Memoized tables of the three integer/rational sequences everything else is
// built from.  All three are defined by self-referential recurrences, so the
// cache stores a dense prefix and extends it on demand:
//
//   u_number:        U_0 = 1,  U_n = -2 * sum_{k=1}^{floor(n/2)} C(n,2k) U_{n-2k}
//   euler_number:    E_0 = 1,  E_n =     -sum_{k=1}^{floor(n/2)} C(n,2k) E_{n-2k}
//   bernoulli_number: B_0 = 1, B_n = -1/(n+1) * sum_{k=0}^{n-1} C(n+1,k) B_k
//
// U_n and E_n vanish at odd n, so only even indices are stored for those two.
// Lookups are safe from multiple threads; extension happens under a per-table
// mutex.  Values are immutable once stored, and a warmed cache returns
// bit-identical values to a cold one.
class SequenceCache {
 public:
  SequenceCache() = default;
  SequenceCache(const SequenceCache&) = delete;
  SequenceCache& operator=(const SequenceCache&) = delete;

  Integer u_number(long n);
  Integer euler_number(long n);
  Rational bernoulli_number(long n);

  // Largest index whose value is materialised (-1 when nothing is); odd
  // indices of u/euler are implied zeros and never stored, so these report
  // even numbers only.
  long u_high_water() const;
  long euler_high_water() const;
  long bernoulli_high_water() const;

  void clear();

  // Snapshots of the stored prefixes, for persistence.  u/euler entry j holds
  // the value at index 2j; bernoulli entry j holds the value at index j.
  std::vector<Integer> u_snapshot() const;
  std::vector<Integer> euler_snapshot() const;
  std::vector<Rational> bernoulli_snapshot() const;

  // Replaces a table with an externally validated dense prefix (see
  // cache_io.hpp, which revalidates before calling these).
  void restore_u(std::vector<Integer> even_values);
  void restore_euler(std::vector<Integer> even_values);
  void restore_bernoulli(std::vector<Rational> values);

 private:
  mutable std::mutex u_mutex_, euler_mutex_, bernoulli_mutex_;
  std::vector<Integer> u_even_;        // u_even_[j] = U_{2j}
  std::vector<Integer> euler_even_;    // euler_even_[j] = E_{2j}
  std::vector<Rational> bernoulli_;    // bernoulli_[j] = B_j
};

// U_n(x) = sum_{k=0}^{floor(n/2)} C(n,2k) U_{2k} x^{n-2k}.  Monic, degree n,
// integer coefficients, and U_n(0) = U_n.
Polynomial u_polynomial(SequenceCache& cache, long n);

// E_n(x) = 2^{-n} * sum_{k=0}^{floor(n/2)} C(n,2k) (2x-1)^{n-2k} E_{2k},
// expanded into the power basis.
Polynomial euler_polynomial(SequenceCache& cache, long n);

// B_n(x) = sum_{k=0}^{n} C(n,k) B_k x^{n-k}.
Polynomial bernoulli_polynomial(SequenceCache& cache, long n);

}  // namespace useq

#endif  // USEQ_SEQUENCES_HPP
