#ifndef USEQ_MODULAR_HPP
#define USEQ_MODULAR_HPP

#include <stdexcept>

#include "useq/numbers.hpp"

namespace useq {

// Requested an inverse of a residue that is not coprime to the modulus.
struct NotInvertible : std::domain_error {
  explicit NotInvertible(const std::string& what) : std::domain_error(what) {}
};

// No pair (L, M) with 4p = L^2 + 27 M^2 exists for the given input.
struct NoRepresentation : std::domain_error {
  explicit NoRepresentation(const std::string& what) : std::domain_error(what) {}
};

// A validated modulus, always >= 2.
class Modulus {
 public:
  explicit Modulus(Integer value) : value_(std::move(value)) {
    if (value_ < 2) throw std::invalid_argument("Modulus: value must be at least 2, got " + value_.get_str());
  }
  const Integer& value() const { return value_; }

 private:
  Integer value_;
};

// A canonical residue: 0 <= value < modulus.
struct Residue {
  Integer value;
  Integer modulus;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.value == b.value && a.modulus == b.modulus;
  }
};

// Canonical representative of a modulo m (floor-division remainder, so the
// result lands in [0, m) for any sign of a).
Residue reduce_int(const Integer& a, const Modulus& m);

// r with a*r == 1 (mod m); throws NotInvertible when gcd(a, m) != 1.
Residue mod_inverse(const Integer& a, const Modulus& m);

// num/den taken to num * den^{-1} mod m; the congruence a == num/den (mod m)
// always means a*den == num (mod m).  Throws NotInvertible when the
// denominator shares a factor with m.
Residue reduce_rational(const Rational& q, const Modulus& m);

// Euler-criterion value of (a|p) in {-1, 0, +1}; p must be an odd prime.
int legendre_symbol(const Integer& a, const Integer& p);

// phi(3^m) = 2 * 3^{m-1} for m >= 1.
Integer totient_pow3(long m);

// 4p = L^2 + 27 M^2 with L == 1 (mod 3) and M > 0; unique for primes
// p == 1 (mod 3).
struct QuadFormRep {
  Integer p, L, M;
};

// Bounded exhaustive search over M <= sqrt(4p/27); first hit is returned,
// and for valid input (prime p == 1 mod 3) it is the only one.
QuadFormRep cornacchia_4p(const Integer& p);

// Exponent of p in a (a nonzero, p >= 2).
long ord_p(const Integer& a, const Integer& p);

// Deterministic trial division; meant for the desk-scale operands this
// library works at, not cryptographic sizes.
bool is_prime(const Integer& n);

}  // namespace useq

#endif  // USEQ_MODULAR_HPP
