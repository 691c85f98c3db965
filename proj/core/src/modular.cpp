#include "useq/modular.hpp"

namespace useq {

Residue reduce_int(const Integer& a, const Modulus& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.value().get_mpz_t());
  return Residue{std::move(r), m.value()};
}

Residue mod_inverse(const Integer& a, const Modulus& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.value().get_mpz_t()) == 0)
    throw NotInvertible("no inverse of " + a.get_str() + " modulo " + m.value().get_str());
  return Residue{std::move(r), m.value()};
}

Residue reduce_rational(const Rational& q, const Modulus& m) {
  const Residue inv = mod_inverse(q.get_den(), m);
  return reduce_int(q.get_num() * inv.value, m);
}

int legendre_symbol(const Integer& a, const Integer& p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("legendre_symbol: p must be an odd prime, got " + p.get_str());
  const Integer e = (p - 1) / 2;
  Integer r;
  mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
  if (r == 0) return 0;
  if (r == 1) return 1;
  return -1;  // r == p - 1 whenever p is prime
}

Integer totient_pow3(long m) {
  if (m < 1) throw std::invalid_argument("totient_pow3: m must be at least 1");
  return 2 * pow_ui(3, static_cast<unsigned long>(m - 1));
}

QuadFormRep cornacchia_4p(const Integer& p) {
  if (p < 1) throw std::invalid_argument("cornacchia_4p: p must be positive");
  const Integer target = 4 * p;
  for (Integer m = 1; 27 * m * m <= target; ++m) {
    const Integer rest = target - 27 * m * m;
    if (mpz_perfect_square_p(rest.get_mpz_t()) == 0) continue;
    Integer l;
    mpz_sqrt(l.get_mpz_t(), rest.get_mpz_t());
    // exactly one of +-l is 1 mod 3 unless 3 | l, which would force 3 | p
    switch (mpz_fdiv_ui(l.get_mpz_t(), 3)) {
      case 1:
        return QuadFormRep{p, std::move(l), std::move(m)};
      case 2:
        return QuadFormRep{p, -l, std::move(m)};
      default:
        break;
    }
  }
  throw NoRepresentation("4*" + p.get_str() + " has no form L^2 + 27*M^2 with L == 1 (mod 3)");
}

long ord_p(const Integer& a, const Integer& p) {
  if (a == 0) throw std::invalid_argument("ord_p: a must be nonzero");
  if (p < 2) throw std::invalid_argument("ord_p: p must be at least 2");
  Integer reduced;
  return static_cast<long>(mpz_remove(reduced.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t()));
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (mpz_even_p(n.get_mpz_t())) return false;
  if (n % 3 == 0) return n == 3;
  for (Integer d = 5; d * d <= n; d += 6) {
    if (n % d == 0) return false;
    if (n % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace useq
