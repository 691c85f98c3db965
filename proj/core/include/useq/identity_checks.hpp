#pragma once
// Exact identities tying the polynomial family U_n(x) to power sums, to the
// number sequences, and to the Euler/Bernoulli families.  Every check
// evaluates both sides independently in exact rational arithmetic and records
// the compared values; nothing is reduced modulo anything here.
#include "useq/check_result.hpp"
#include "useq/sequences.hpp"

namespace useq {

// Direct summation S_n(m): the alternating sum of n-th powers taken in pairs
// (m-3j-1)^n + (m-3j-2)^n with sign (-1)^j, j = 0, 1, ..., stopping once the
// larger base m-3j-1 is <= 0; any base <= 0 contributes nothing.  Requires
// n, m >= 1.  This is the reference the closed forms are checked against.
Integer brute_S(long n, long m);

// U_n(x-1) - U_n(x) + U_n(x+1) = x^n at the given rational x.  n >= 0.
CheckResult check_translation(SequenceCache& cache, long n, const Rational& x);

// U_n(x) + U_n(x+3) = (x+1)^n + (x+2)^n.  n >= 0.
CheckResult check_shift3_sum(SequenceCache& cache, long n, const Rational& x);

// U_n(x+3) - U_n(x-3) = (x+2)^n + (x+1)^n - (x-1)^n - (x-2)^n.  n >= 0.
CheckResult check_shift3_diff(SequenceCache& cache, long n, const Rational& x);

// U_n(x) = x^n - 2 * sum_{k=1}^{[n/2]} C(n,2k) U_{n-2k}(x).  n >= 1.
CheckResult check_poly_recurrence(SequenceCache& cache, long n, const Rational& x);

// Integral of U_n over [a-3, a+3] equals
// ((a+2)^{n+1} + (a+1)^{n+1} - (a-1)^{n+1} - (a-2)^{n+1}) / (n+1).  n >= 0.
CheckResult check_integral_shift(SequenceCache& cache, long n, const Rational& a);

// U_n(x) = U_n + n * integral_0^x U_{n-1}(t) dt.  n >= 1.
CheckResult check_antiderivative(SequenceCache& cache, long n, const Rational& x);

// Two classical power-sum formulas, each against direct summation:
//   plain:       sum_{k=0}^{m-1} k^n        = (B_{n+1}(m) - B_{n+1}) / (n+1)
//   alternating: sum_{k=0}^{m-1} (-1)^k k^n = (E_n(0) - (-1)^m E_n(m)) / 2
// n, m >= 1.
CheckResult check_classical_sums(SequenceCache& cache, long n, long m);

// brute_S(n, m) against the closed form
//   U_n(m) - (-1)^{m/3} U_n                   when 3 | m
//   U_n(m) - (-1)^{[(m+1)/3]} U_n / 2         when 3 does not divide m, n even
//   U_n(m) - (-1)^{[m/3]} U_n(1)              when 3 does not divide m, n odd
// n, m >= 1.
CheckResult check_theorem_2_1(SequenceCache& cache, long n, long m);

// brute_S(n, m) for n = 2, 3, 4 against the explicit polynomials in m:
//   S2 = m^2 - 2 + 2(-1)^{m/3}               | m^2 - 2 + (-1)^{[(m+1)/3]}
//   S3 = m^3 - 6m                            | m^3 - 6m + 5(-1)^{[m/3]}
//   S4 = m^4 - 12m^2 + 22(1 - (-1)^{m/3})    | m^4 - 12m^2 + 11(2 - (-1)^{[(m+1)/3]})
// (left column when 3 | m, right otherwise).  m >= 1.
CheckResult check_corollary_2_1(SequenceCache& cache, long m);

// Two rearrangements of the recurrence for U_{2n}, n >= 1:
//   pow4: U_{2n} = (2/3)(2^{2n} + 3^{2n} - sum_{k=1}^n C(2n,2k) 4^{2k} U_{2n-2k})
//   pow8: U_{2n} = (2/3)(7^{2n} + 6^{2n} - 4^{2n} - 3^{2n} + 1
//                        - sum_{k=1}^n C(2n,2k) 8^{2k} U_{2n-2k})
CheckResult check_corollary_2_2(SequenceCache& cache, long n);

// U_n(1) = U_n / 2 and U_n(2) = 1 - U_n / 2 for even n >= 2.
CheckResult check_special_values(SequenceCache& cache, long n);

// 2^{2n} U_{2n} = sum_{k=0}^n C(2n,2k) 3^{2k} E_{2k}.  n >= 1.
CheckResult check_lemma_4_1(SequenceCache& cache, long n);

// (3^{2n} + 1) E_{2n} = sum_{r=0}^n C(2n,2r) 2^{2n-2r+1} 3^{2r} E_{2r}.  n >= 1.
CheckResult check_lemma_5_1(SequenceCache& cache, long n);

}  // namespace useq
