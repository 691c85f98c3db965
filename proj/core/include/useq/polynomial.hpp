#ifndef USEQ_POLYNOMIAL_HPP
#define USEQ_POLYNOMIAL_HPP

#include <string>
#include <vector>

#include "useq/numbers.hpp"

namespace useq {

// Dense univariate polynomial over the rationals.  coeffs_[k] is the
// coefficient of x^k; trailing zeros are trimmed, and the zero polynomial is
// the empty list (degree() == -1).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(Rational c);

  bool is_zero() const { return coeffs_.empty(); }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  // Coefficient of x^k; zero outside the stored range.
  const Rational& coeff(long k) const;

  // Horner evaluation.
  Rational eval(const Rational& x) const;

  // Termwise antiderivative with constant term 0.
  Polynomial antiderivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs) {
    return lhs.coeffs_ == rhs.coeffs_;
  }

  // Human-readable form in descending powers, e.g. "x^4 - 12x^2 + 22".
  // Non-integral coefficients attached to a power are parenthesised:
  // "x^3 - (3/2)x^2 + 1/4".  The zero polynomial prints as "0".
  std::string str() const;

 private:
  std::vector<Rational> coeffs_;
};

Rational poly_eval(const Polynomial& p, const Rational& x);

// Exact definite integral of p over [a, b].
Rational poly_integral(const Polynomial& p, const Rational& a, const Rational& b);

}  // namespace useq

#endif  // USEQ_POLYNOMIAL_HPP
