#include "useq/congruence_checks.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace useq {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

CheckResult single(std::string check, std::vector<Param> params, const Residue& lhs,
                   const Residue& rhs) {
  CheckResult r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.comparisons.push_back(residue_comparison("", lhs, rhs));
  return r;
}

std::vector<Param> kmb_params(long k, long m, long b) {
  return {{"k", Rational(k)}, {"m", Rational(m)}, {"b", Rational(b)}};
}

long ord2(long n) { return ord_p(Integer(n), Integer(2)); }

Integer pow3(long e) { return pow_ui(Integer(3), static_cast<unsigned long>(e)); }

// 2^m * k + b as a table index; the tables are addressed by long.
long shifted_index_pow2(long k, long m, long b) {
  Integer idx = pow2(static_cast<unsigned long>(m)) * k + b;
  if (!fits_long(idx)) throw std::invalid_argument("shifted index exceeds the long range");
  return to_long(idx);
}

// k * phi(3^m) + b, likewise.
long shifted_index_pow3(long k, long m, long b) {
  Integer idx = totient_pow3(m) * k + b;
  if (!fits_long(idx)) throw std::invalid_argument("shifted index exceeds the long range");
  return to_long(idx);
}

}  // namespace

CheckResult check_1_2(SequenceCache& cache, long p) {
  require(p > 3 && is_prime(Integer(p)), "check_1_2 requires a prime p > 3");
  Modulus p2(Integer(p) * p);
  Integer acc = 0;
  for (long k = 1; k <= (2 * p) / 3; ++k) {
    const Integer inv = mod_inverse(Integer(k), p2).value;
    acc += (k % 2 != 0) ? inv : -inv;
  }
  Integer rhs = Integer(3) * p * legendre_symbol(Integer(p), Integer(3)) * cache.u_number(p - 3);
  return single("check_1_2", {{"p", Rational(p)}}, reduce_int(acc, p2), reduce_int(rhs, p2));
}

CheckResult check_1_3(SequenceCache& cache, long p) {
  require(p > 3 && is_prime(Integer(p)), "check_1_3 requires a prime p > 3");
  Modulus mp((Integer(p)));
  Rational at_third = bernoulli_polynomial(cache, p - 2).eval(make_rational(1, 3));
  CheckResult shell;
  shell.check = "check_1_3";
  shell.params = {{"p", Rational(p)}};
  try {
    Residue lhs = reduce_rational(at_third, mp);
    Residue rhs = reduce_int(6 * cache.u_number(p - 3), mp);
    shell.comparisons.push_back(residue_comparison("", lhs, rhs));
  } catch (const NotInvertible&) {
    shell.reason = "denominator of B_{p-2}(1/3) is not invertible modulo p";
  }
  return shell;
}

CheckResult check_1_4(SequenceCache& cache, long p) {
  require(p > 3 && is_prime(Integer(p)), "check_1_4 requires a prime p > 3");
  Modulus p3(Integer(p) * p * p);
  // Running central binomial: C(2k,k) = C(2k-2,k-1) * (2k)(2k-1) / k^2.
  Integer central = 1;
  Integer acc = 1;
  for (long k = 1; k <= p - 1; ++k) {
    central *= Integer(2 * k) * (2 * k - 1);
    Integer k2 = Integer(k) * k;
    mpz_divexact(central.get_mpz_t(), central.get_mpz_t(), k2.get_mpz_t());
    acc += central;
  }
  Integer rhs =
      Integer(legendre_symbol(Integer(p), Integer(3))) - 2 * Integer(p) * p * cache.u_number(p - 3);
  return single("check_1_4", {{"p", Rational(p)}}, reduce_int(acc, p3), reduce_int(rhs, p3));
}

CheckResult check_1_5(SequenceCache& cache, long p) {
  require(p >= 7 && p % 3 == 1 && is_prime(Integer(p)),
          "check_1_5 requires a prime p == 1 (mod 3), p >= 7");
  Modulus p3(Integer(p) * p * p);
  QuadFormRep rep = cornacchia_4p(Integer(p));
  Integer l_inv = mod_inverse(rep.L, p3).value;
  Integer rhs = -rep.L + Integer(p) * l_inv +
                Integer(p) * p * (l_inv * l_inv * l_inv - rep.L * cache.u_number(p - 3));
  Integer lhs = binomial(Integer(2 * (p - 1) / 3), Integer((p - 1) / 3));
  return single("check_1_5", {{"p", Rational(p)}}, reduce_int(lhs, p3), reduce_int(rhs, p3));
}

CheckResult check_3_1(SequenceCache& cache, long n) {
  require(n >= 3, "check_3_1 requires n >= 3");
  Modulus m(pow2(7));
  return single("check_3_1", {{"n", Rational(n)}}, reduce_int(cache.u_number(2 * n), m),
                reduce_int(Integer(-16 * n - 42), m));
}

CheckResult check_3_2(SequenceCache& cache, long n) {
  require(n >= 4 && n % 2 == 0, "check_3_2 requires even n >= 4");
  long a = ord2(n);
  Modulus m(pow2(static_cast<unsigned long>(a + 7)));
  return single("check_3_2", {{"n", Rational(n)}}, reduce_int(cache.u_number(2 * n), m),
                reduce_rational(make_rational(144 * n + 2, 3), m));
}

CheckResult check_lemma_3_1(SequenceCache& cache, long n) {
  require(n >= 5, "check_lemma_3_1 requires n >= 5");
  long a = ord2(n);
  Modulus m(pow2(static_cast<unsigned long>(a + 19)));
  Integer lhs = 3 * cache.u_number(2 * n) +
                pow2(7) * n * (2 * n - 1) * cache.u_number(2 * n - 2);
  unsigned long e = static_cast<unsigned long>(2 * n);
  Integer nm1(n - 1);
  Integer rhs = 2 * (pow_ui(Integer(7), e) + pow_ui(Integer(6), e) - pow_ui(Integer(4), e) -
                     pow_ui(Integer(3), e) + 1) +
                pow2(static_cast<unsigned long>(16 + 2 * a)) * nm1 -
                23 * pow2(13) * n * nm1 + 7 * pow2(15) * n * nm1 * nm1 * nm1;
  return single("check_lemma_3_1", {{"n", Rational(n)}}, reduce_int(lhs, m), reduce_int(rhs, m));
}

CheckResult check_theorem_3_1(SequenceCache& cache, long n) {
  require(n >= 7, "check_theorem_3_1 requires n >= 7");
  long a = ord2(n);
  Modulus m(pow2(static_cast<unsigned long>(a + 14)));
  Integer nn(n);
  Integer rhs = -3072 * nn * nn * nn * nn + 4608 * nn * nn * nn + 2240 * nn * nn + 1680 * nn + 2;
  return single("check_theorem_3_1", {{"n", Rational(n)}},
                reduce_int(3 * cache.u_number(2 * n), m), reduce_int(rhs, m));
}

CheckResult check_lemma_3_2(SequenceCache& cache, long k, long m, long b) {
  require(k >= 1 && m >= 1 && b >= 2 && b % 2 == 0,
          "check_lemma_3_2 requires k, m >= 1 and even b >= 2");
  long n = shifted_index_pow2(k, m, b);
  Modulus mod(pow2(static_cast<unsigned long>(m + 3)));
  Residue lhs = reduce_int(cache.u_number(n) - cache.u_number(b), mod);
  Rational rhs = make_rational(pow2(static_cast<unsigned long>(b + 1)), 9);
  const Rational two_thirds = make_rational(2, 3);
  std::vector<Integer> row = binomial_even_row(b);
  for (long r = 1; r <= b / 2 - 1; ++r)
    rhs -= two_thirds *
           Rational(row[static_cast<std::size_t>(r)] * pow2(static_cast<unsigned long>(2 * r)) *
                    (cache.u_number(n - 2 * r) - cache.u_number(b - 2 * r)));
  return single("check_lemma_3_2", kmb_params(k, m, b), lhs, reduce_rational(rhs, mod));
}

CheckResult check_theorem_3_2(SequenceCache& cache, long k, long m, long b) {
  require(k >= 1 && m >= 1 && b >= 2 && b % 2 == 0,
          "check_theorem_3_2 requires k, m >= 1 and even b >= 2");
  long n = shifted_index_pow2(k, m, b);
  const Integer& shifted = cache.u_number(n);
  const Integer& base = cache.u_number(b);

  CheckResult r;
  r.check = "check_theorem_3_2";
  r.params = kmb_params(k, m, b);

  Modulus m1(pow2(static_cast<unsigned long>(std::min(b, m) + 3)));
  r.comparisons.push_back(residue_comparison(
      "i", reduce_int(shifted, m1),
      reduce_int(base + pow2(static_cast<unsigned long>(b + 1)), m1)));

  if (b == 2 || b == 4) {
    Modulus m2(pow2(static_cast<unsigned long>(m + 3)));
    Rational target = (b == 2) ? make_rational(-10, 9) : make_rational(34, 3);
    r.comparisons.push_back(
        residue_comparison("ii", reduce_int(shifted, m2), reduce_rational(target, m2)));
  }

  if (4 <= b && b <= m - 2) {
    Modulus m3(pow2(static_cast<unsigned long>(b + 5)));
    Integer target = base + pow2(static_cast<unsigned long>(b + 1)) * (4 * b + 5);
    r.comparisons.push_back(
        residue_comparison("iii", reduce_int(shifted, m3), reduce_int(target, m3)));
  }
  return r;
}

CheckResult check_corollary_3_1(SequenceCache& cache, long k, long m, long b) {
  require(k >= 1 && m >= 1 && b >= 2 && b % 2 == 0,
          "check_corollary_3_1 requires k, m >= 1 and even b >= 2");
  long n = shifted_index_pow2(k, m, b);
  Modulus mod(pow2(static_cast<unsigned long>(std::min(b, m) + 1)));
  return single("check_corollary_3_1", kmb_params(k, m, b),
                reduce_int(cache.u_number(n), mod), reduce_int(cache.u_number(b), mod));
}

CheckResult check_theorem_4_1(SequenceCache& cache, long k, long m, long b) {
  require(k >= 1 && m >= 3 && b >= 0 && b % 2 == 0,
          "check_theorem_4_1 requires k >= 1, m >= 3 and even b >= 0");
  long n = shifted_index_pow3(k, m, b);
  Modulus mod(pow3(m + 4));
  Integer diff = cache.u_number(n) - cache.u_number(b);
  Integer scale = pow3(m) * k;
  Integer rhs;
  switch (b % 3) {
    case 0: rhs = scale * (9 * b - 40); break;
    case 1: rhs = -22 * scale; break;
    default: rhs = -scale * (9 * b - 32); break;
  }
  return single("check_theorem_4_1", kmb_params(k, m, b), reduce_int(diff, mod),
                reduce_int(rhs, mod));
}

CheckResult check_euler_mod_pow2(SequenceCache& cache, long k, long m, long b) {
  require(k >= 1 && m >= 4 && b >= 0 && b % 2 == 0,
          "check_euler_mod_pow2 requires k >= 1, m >= 4 and even b >= 0");
  long n = shifted_index_pow2(k, m, b);
  Modulus mod(pow2(static_cast<unsigned long>(m + 4)));
  Integer diff = cache.euler_number(n) - cache.euler_number(b);
  Integer step = pow2(static_cast<unsigned long>(m)) * k;
  Integer rhs = (b % 8 == 0 || b % 8 == 6) ? 5 * step : -3 * step;
  return single("check_euler_mod_pow2", kmb_params(k, m, b), reduce_int(diff, mod),
                reduce_int(rhs, mod));
}

CheckResult check_euler_mod_pow3(SequenceCache& cache, long k, long m, long b) {
  require(k >= 1 && m >= 1 && b >= 0 && b % 2 == 0,
          "check_euler_mod_pow3 requires k, m >= 1 and even b >= 0");
  long n = shifted_index_pow3(k, m, b);
  Modulus mod(pow3(m));
  Integer rhs = (pow3(b) + 1) * cache.euler_number(b);
  return single("check_euler_mod_pow3", kmb_params(k, m, b),
                reduce_int(cache.euler_number(n), mod), reduce_int(rhs, mod));
}

CheckResult check_theorem_5_1(SequenceCache& cache, long k, long m, long b) {
  require(k >= 1 && m >= 3 && b >= 0 && b % 2 == 0,
          "check_theorem_5_1 requires k >= 1, m >= 3 and even b >= 0");
  long n = shifted_index_pow3(k, m, b);
  Modulus mod(pow3(m + 4));
  Integer diff = cache.euler_number(n) - (pow3(b) + 1) * cache.euler_number(b);
  Integer scale = pow3(m) * k;
  Integer rhs;
  switch (b % 3) {
    case 0: rhs = scale * (9 * b + 20); break;
    case 1: rhs = -16 * scale; break;
    default: rhs = scale * (-9 * b + 11); break;
  }
  return single("check_theorem_5_1", kmb_params(k, m, b), reduce_int(diff, mod),
                reduce_int(rhs, mod));
}

}  // namespace useq
