#ifndef USEQ_NUMBERS_HPP
#define USEQ_NUMBERS_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace useq {

// Exact arbitrary-precision arithmetic, backed by GMP.  Everything in this
// library is computed exactly; floating point never appears.
//
// Rational invariant: lowest terms, denominator > 0.  mpq_class arithmetic
// preserves canonical form, so the only place that needs care is raw
// construction from a num/den pair -- always go through make_rational.
using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
  Rational q(std::move(num), std::move(den));
  q.canonicalize();
  return q;
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Canonical text form: "num/den", or just "num" when the value is integral.
inline std::string to_string(const Rational& q) { return q.get_str(); }

// Parses a base-10 integer; rejects anything with trailing garbage.
inline Integer parse_integer(const std::string& text) {
  Integer z;
  if (text.empty() || mpz_set_str(z.get_mpz_t(), text.c_str(), 10) != 0)
    throw std::invalid_argument("not a base-10 integer: \"" + text + "\"");
  return z;
}

// Parses "num" or "num/den" into a canonical Rational.
inline Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Integer num = parse_integer(text.substr(0, slash));
  const Integer den = parse_integer(text.substr(slash + 1));
  return make_rational(num, den);
}

inline Integer pow_ui(const Integer& base, unsigned long e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline Integer pow2(unsigned long e) {
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), e);
  return r;
}

inline bool fits_long(const Integer& z) { return z.fits_slong_p(); }

inline long to_long(const Integer& z) {
  if (!z.fits_slong_p())
    throw std::overflow_error("integer does not fit a machine long: " + z.get_str());
  return z.get_si();
}

}  // namespace useq

#endif  // USEQ_NUMBERS_HPP
