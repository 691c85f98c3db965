#pragma once
// Congruences satisfied by U_n and E_n: prime-power behaviour of the
// sequences and three families of supercongruences at primes p > 3.  Each
// check reduces both sides to canonical residues and records them, so a
// CheckResult carries the full evidence for the asserted congruence.
//
// Rational right-hand sides (2/3, -10/9, ...) are reduced with the modular
// inverse of the denominator, which is always coprime to the modulus in
// every statement here.
#include "useq/check_result.hpp"
#include "useq/sequences.hpp"

namespace useq {

// sum_{k=1}^{[2p/3]} (-1)^{k-1}/k  ==  3p (p|3) U_{p-3}   (mod p^2),
// where (p|3) is the Legendre symbol.  p prime, p > 3.
CheckResult check_1_2(SequenceCache& cache, long p);

// B_{p-2}(1/3)  ==  6 U_{p-3}   (mod p).  p prime, p > 3.
CheckResult check_1_3(SequenceCache& cache, long p);

// sum_{k=0}^{p-1} C(2k,k)  ==  (p|3) - 2 p^2 U_{p-3}   (mod p^3).
// p prime, p > 3.
CheckResult check_1_4(SequenceCache& cache, long p);

// For p == 1 (mod 3) with 4p = L^2 + 27 M^2 and L == 1 (mod 3):
//   C(2(p-1)/3, (p-1)/3)  ==  -L + p/L + p^2 (1/L^3 - L U_{p-3})   (mod p^3),
// 1/L taken as the modular inverse.  p prime, p >= 7.
CheckResult check_1_5(SequenceCache& cache, long p);

// U_{2n}  ==  -16n - 42   (mod 2^7).  n >= 3.
CheckResult check_3_1(SequenceCache& cache, long n);

// U_{2n}  ==  48n + 2/3   (mod 2^{a+7}) with a = ord_2(n).  n even, n >= 4.
CheckResult check_3_2(SequenceCache& cache, long n);

// 3 U_{2n} + 2^7 n (2n-1) U_{2n-2}  ==
//   2(7^{2n} + 6^{2n} - 4^{2n} - 3^{2n} + 1) + 2^{16+2a}(n-1)
//   - 23 * 2^13 n(n-1) + 7 * 2^15 n(n-1)^3        (mod 2^{a+19}),
// a = ord_2(n).  n >= 5.
CheckResult check_lemma_3_1(SequenceCache& cache, long n);

// 3 U_{2n}  ==  -3072 n^4 + 4608 n^3 + 2240 n^2 + 1680 n + 2
// (mod 2^{a+14}) with a = ord_2(n).  n >= 7.
CheckResult check_theorem_3_1(SequenceCache& cache, long n);

// U_{2^m k + b} - U_b  ==
//   2^{b+1}/9 - (2/3) sum_{r=1}^{b/2-1} C(b,2r) 2^{2r} (U_{2^m k + b - 2r} - U_{b-2r})
// (mod 2^{m+3}).  k, m >= 1, b even >= 2.
CheckResult check_lemma_3_2(SequenceCache& cache, long k, long m, long b);

// The applicable parts of the 2-power shift congruence, k, m >= 1, b even >= 2:
//   i:   U_{2^m k + b}  ==  U_b + 2^{b+1}          (mod 2^{min(b,m)+3})
//   ii:  U_{2^m k + 2}  ==  -10/9  and  U_{2^m k + 4}  ==  34/3   (mod 2^{m+3})
//   iii: U_{2^m k + b}  ==  U_b + 2^{b+1}(4b + 5)  (mod 2^{b+5})  when 4 <= b <= m-2
// Passes iff every applicable part holds; each part is its own comparison.
CheckResult check_theorem_3_2(SequenceCache& cache, long k, long m, long b);

// U_{2^m k + b}  ==  U_b   (mod 2^{min(b,m)+1}).  k, m >= 1, b even >= 2.
CheckResult check_corollary_3_1(SequenceCache& cache, long k, long m, long b);

// With N = k phi(3^m) + b, modulus 3^{m+4}, k >= 1, m >= 3, b even >= 0:
//   U_N - U_b  ==  3^m k (9b - 40)    when b == 0 (mod 3)
//              ==  -22 * 3^m k        when b == 1 (mod 3)
//              ==  -3^m k (9b - 32)   when b == 2 (mod 3)
CheckResult check_theorem_4_1(SequenceCache& cache, long k, long m, long b);

// E_{2^m k + b} - E_b  ==  5 * 2^m k   (mod 2^{m+4}) when b == 0, 6 (mod 8),
//                      ==  -3 * 2^m k  when b == 2, 4 (mod 8).
// k >= 1, m >= 4, b even >= 0.
CheckResult check_euler_mod_pow2(SequenceCache& cache, long k, long m, long b);

// E_{k phi(3^m) + b}  ==  (3^b + 1) E_b   (mod 3^m).  k, m >= 1, b even >= 0.
CheckResult check_euler_mod_pow3(SequenceCache& cache, long k, long m, long b);

// With N = k phi(3^m) + b, modulus 3^{m+4}, k >= 1, m >= 3, b even >= 0:
//   E_N - (3^b + 1) E_b  ==  (9b + 20) 3^m k    when b == 0 (mod 3)
//                        ==  -16 * 3^m k        when b == 1 (mod 3)
//                        ==  (-9b + 11) 3^m k   when b == 2 (mod 3)
CheckResult check_theorem_5_1(SequenceCache& cache, long k, long m, long b);

}  // namespace useq
