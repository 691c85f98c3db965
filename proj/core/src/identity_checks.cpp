#include "useq/identity_checks.hpp"

#include <stdexcept>
#include <utility>

#include "useq/polynomial.hpp"

namespace useq {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(what);
}

// x^e with the empty-product convention x^0 = 1 (also at x = 0).
Rational rpow(const Rational& x, long e) {
  if (e == 0) return Rational(1);
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), x.get_num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(r.get_den_mpz_t(), x.get_den().get_mpz_t(), static_cast<unsigned long>(e));
  return r;  // num/den stay coprime under powering, form remains canonical
}

int neg1_pow(long e) { return (e % 2 != 0) ? -1 : 1; }

CheckResult one(std::string check, std::vector<Param> params, Rational lhs, Rational rhs) {
  CheckResult r;
  r.check = std::move(check);
  r.params = std::move(params);
  r.comparisons.push_back(exact_comparison("", std::move(lhs), std::move(rhs)));
  return r;
}

std::vector<Param> nx_params(const char* second, long n, const Rational& x) {
  return {{"n", Rational(n)}, {second, x}};
}

}  // namespace

Integer brute_S(long n, long m) {
  require(n >= 1 && m >= 1, "brute_S requires n >= 1 and m >= 1");
  Integer total = 0;
  for (long j = 0;; ++j) {
    long hi = m - 3 * j - 1;
    if (hi <= 0) break;
    Integer pair = pow_ui(Integer(hi), static_cast<unsigned long>(n));
    if (hi - 1 > 0) pair += pow_ui(Integer(hi - 1), static_cast<unsigned long>(n));
    total += (j % 2 != 0) ? -pair : pair;
  }
  return total;
}

CheckResult check_translation(SequenceCache& cache, long n, const Rational& x) {
  require(n >= 0, "check_translation requires n >= 0");
  Polynomial p = u_polynomial(cache, n);
  Rational lhs = p.eval(x - 1) - p.eval(x) + p.eval(x + 1);
  return one("check_translation", nx_params("x", n, x), std::move(lhs), rpow(x, n));
}

CheckResult check_shift3_sum(SequenceCache& cache, long n, const Rational& x) {
  require(n >= 0, "check_shift3_sum requires n >= 0");
  Polynomial p = u_polynomial(cache, n);
  Rational lhs = p.eval(x) + p.eval(x + 3);
  Rational rhs = rpow(x + 1, n) + rpow(x + 2, n);
  return one("check_shift3_sum", nx_params("x", n, x), std::move(lhs), std::move(rhs));
}

CheckResult check_shift3_diff(SequenceCache& cache, long n, const Rational& x) {
  require(n >= 0, "check_shift3_diff requires n >= 0");
  Polynomial p = u_polynomial(cache, n);
  Rational lhs = p.eval(x + 3) - p.eval(x - 3);
  Rational rhs = rpow(x + 2, n) + rpow(x + 1, n) - rpow(x - 1, n) - rpow(x - 2, n);
  return one("check_shift3_diff", nx_params("x", n, x), std::move(lhs), std::move(rhs));
}

CheckResult check_poly_recurrence(SequenceCache& cache, long n, const Rational& x) {
  require(n >= 1, "check_poly_recurrence requires n >= 1");
  Rational lhs = u_polynomial(cache, n).eval(x);
  std::vector<Integer> row = binomial_even_row(n);
  Rational acc(0);
  for (long k = 1; 2 * k <= n; ++k)
    acc += Rational(row[static_cast<std::size_t>(k)]) * u_polynomial(cache, n - 2 * k).eval(x);
  Rational rhs = rpow(x, n) - Rational(2) * acc;
  return one("check_poly_recurrence", nx_params("x", n, x), std::move(lhs), std::move(rhs));
}

CheckResult check_integral_shift(SequenceCache& cache, long n, const Rational& a) {
  require(n >= 0, "check_integral_shift requires n >= 0");
  Rational lhs = poly_integral(u_polynomial(cache, n), a - 3, a + 3);
  Rational rhs = (rpow(a + 2, n + 1) + rpow(a + 1, n + 1) - rpow(a - 1, n + 1) -
                  rpow(a - 2, n + 1)) /
                 Rational(n + 1);
  return one("check_integral_shift", nx_params("a", n, a), std::move(lhs), std::move(rhs));
}

CheckResult check_antiderivative(SequenceCache& cache, long n, const Rational& x) {
  require(n >= 1, "check_antiderivative requires n >= 1");
  Rational lhs = u_polynomial(cache, n).eval(x);
  Rational rhs = Rational(cache.u_number(n)) +
                 Rational(n) * poly_integral(u_polynomial(cache, n - 1), Rational(0), x);
  return one("check_antiderivative", nx_params("x", n, x), std::move(lhs), std::move(rhs));
}

CheckResult check_classical_sums(SequenceCache& cache, long n, long m) {
  require(n >= 1 && m >= 1, "check_classical_sums requires n >= 1 and m >= 1");
  Integer plain = 0;
  Integer alternating = 0;
  for (long k = 0; k <= m - 1; ++k) {
    Integer t = pow_ui(Integer(k), static_cast<unsigned long>(n));
    plain += t;
    alternating += (k % 2 != 0) ? -t : t;
  }
  Polynomial bp = bernoulli_polynomial(cache, n + 1);
  Rational plain_rhs =
      (bp.eval(Rational(m)) - Rational(cache.bernoulli_number(n + 1))) / Rational(n + 1);
  Polynomial ep = euler_polynomial(cache, n);
  Rational alt_rhs =
      (ep.eval(Rational(0)) - Rational(neg1_pow(m)) * ep.eval(Rational(m))) / Rational(2);

  CheckResult r;
  r.check = "check_classical_sums";
  r.params = {{"n", Rational(n)}, {"m", Rational(m)}};
  r.comparisons.push_back(exact_comparison("plain", Rational(plain), std::move(plain_rhs)));
  r.comparisons.push_back(
      exact_comparison("alternating", Rational(alternating), std::move(alt_rhs)));
  return r;
}

CheckResult check_theorem_2_1(SequenceCache& cache, long n, long m) {
  require(n >= 1 && m >= 1, "check_theorem_2_1 requires n >= 1 and m >= 1");
  Rational closed = u_polynomial(cache, n).eval(Rational(m));
  if (m % 3 == 0) {
    closed -= Rational(neg1_pow(m / 3)) * Rational(cache.u_number(n));
  } else if (n % 2 == 0) {
    closed -= Rational(neg1_pow((m + 1) / 3)) * Rational(cache.u_number(n)) / Rational(2);
  } else {
    closed -= Rational(neg1_pow(m / 3)) * u_polynomial(cache, n).eval(Rational(1));
  }
  return one("check_theorem_2_1", {{"n", Rational(n)}, {"m", Rational(m)}},
             Rational(brute_S(n, m)), std::move(closed));
}

CheckResult check_corollary_2_1(SequenceCache& cache, long m) {
  require(m >= 1, "check_corollary_2_1 requires m >= 1");
  (void)cache;  // same signature family as the other checks; no table needed
  Integer mm(m);
  Integer m2 = mm * mm;
  Integer m3 = m2 * mm;
  Integer m4 = m2 * m2;
  Integer s2, s3, s4;
  if (m % 3 == 0) {
    s2 = m2 - 2 + 2 * neg1_pow(m / 3);
    s3 = m3 - 6 * mm;
    s4 = m4 - 12 * m2 + 22 * (1 - neg1_pow(m / 3));
  } else {
    s2 = m2 - 2 + neg1_pow((m + 1) / 3);
    s3 = m3 - 6 * mm + 5 * neg1_pow(m / 3);
    s4 = m4 - 12 * m2 + 11 * (2 - neg1_pow((m + 1) / 3));
  }
  CheckResult r;
  r.check = "check_corollary_2_1";
  r.params = {{"m", Rational(m)}};
  r.comparisons.push_back(exact_comparison("S2", Rational(brute_S(2, m)), Rational(s2)));
  r.comparisons.push_back(exact_comparison("S3", Rational(brute_S(3, m)), Rational(s3)));
  r.comparisons.push_back(exact_comparison("S4", Rational(brute_S(4, m)), Rational(s4)));
  return r;
}

CheckResult check_corollary_2_2(SequenceCache& cache, long n) {
  require(n >= 1, "check_corollary_2_2 requires n >= 1");
  Rational lhs(cache.u_number(2 * n));
  std::vector<Integer> row = binomial_even_row(2 * n);
  unsigned long e = static_cast<unsigned long>(2 * n);
  Integer sum4 = 0;
  Integer sum8 = 0;
  for (long k = 1; k <= n; ++k) {
    const Integer& c = row[static_cast<std::size_t>(k)];
    const Integer& u = cache.u_number(2 * n - 2 * k);
    unsigned long ke = static_cast<unsigned long>(2 * k);
    sum4 += c * pow_ui(Integer(4), ke) * u;
    sum8 += c * pow_ui(Integer(8), ke) * u;
  }
  Rational two_thirds = make_rational(2, 3);
  Rational rhs4 = two_thirds * Rational(pow_ui(Integer(2), e) + pow_ui(Integer(3), e) - sum4);
  Rational rhs8 = two_thirds * Rational(pow_ui(Integer(7), e) + pow_ui(Integer(6), e) -
                                        pow_ui(Integer(4), e) - pow_ui(Integer(3), e) + 1 - sum8);
  CheckResult r;
  r.check = "check_corollary_2_2";
  r.params = {{"n", Rational(n)}};
  r.comparisons.push_back(exact_comparison("pow4", lhs, std::move(rhs4)));
  r.comparisons.push_back(exact_comparison("pow8", lhs, std::move(rhs8)));
  return r;
}

CheckResult check_special_values(SequenceCache& cache, long n) {
  require(n >= 2 && n % 2 == 0, "check_special_values requires even n >= 2");
  Polynomial p = u_polynomial(cache, n);
  Rational half_u = Rational(cache.u_number(n)) / Rational(2);
  CheckResult r;
  r.check = "check_special_values";
  r.params = {{"n", Rational(n)}};
  r.comparisons.push_back(exact_comparison("at1", p.eval(Rational(1)), half_u));
  r.comparisons.push_back(exact_comparison("at2", p.eval(Rational(2)), Rational(1) - half_u));
  return r;
}

CheckResult check_lemma_4_1(SequenceCache& cache, long n) {
  require(n >= 1, "check_lemma_4_1 requires n >= 1");
  Rational lhs(pow2(2 * n) * cache.u_number(2 * n));
  std::vector<Integer> row = binomial_even_row(2 * n);
  Integer rhs = 0;
  for (long k = 0; k <= n; ++k)
    rhs += row[static_cast<std::size_t>(k)] *
           pow_ui(Integer(3), static_cast<unsigned long>(2 * k)) * cache.euler_number(2 * k);
  return one("check_lemma_4_1", {{"n", Rational(n)}}, std::move(lhs), Rational(rhs));
}

CheckResult check_lemma_5_1(SequenceCache& cache, long n) {
  require(n >= 1, "check_lemma_5_1 requires n >= 1");
  Rational lhs((pow_ui(Integer(3), static_cast<unsigned long>(2 * n)) + 1) *
               cache.euler_number(2 * n));
  std::vector<Integer> row = binomial_even_row(2 * n);
  Integer rhs = 0;
  for (long r = 0; r <= n; ++r)
    rhs += row[static_cast<std::size_t>(r)] * pow2(2 * n - 2 * r + 1) *
           pow_ui(Integer(3), static_cast<unsigned long>(2 * r)) * cache.euler_number(2 * r);
  return one("check_lemma_5_1", {{"n", Rational(n)}}, std::move(lhs), Rational(rhs));
}

}  // namespace useq
