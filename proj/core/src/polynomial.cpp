#include "useq/polynomial.hpp"

namespace useq {

namespace {

const Rational kZero(0);

void trim(std::vector<Rational>& coeffs) {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

// |c| as text, parenthesised when attached to a power and not integral.
std::string magnitude_str(const Rational& mag, bool attached) {
  if (attached && mag.get_den() != 1) return "(" + mag.get_str() + ")";
  return mag.get_str();
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(coeffs_); }

Polynomial Polynomial::constant(Rational c) {
  std::vector<Rational> v;
  if (c != 0) v.push_back(std::move(c));
  return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(long k) const {
  if (k < 0 || k >= static_cast<long>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<size_t>(k)];
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::antiderivative() const {
  if (coeffs_.empty()) return {};
  std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
  for (size_t k = 0; k < coeffs_.size(); ++k)
    out[k + 1] = coeffs_[k] / Rational(static_cast<long>(k + 1));
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> out(coeffs_.size());
  for (size_t k = 0; k < coeffs_.size(); ++k) out[k] = -coeffs_[k];
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  trim(coeffs_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rational(0));
  for (size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  trim(coeffs_);
  return *this;
}

Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < lhs.coeffs_.size(); ++i)
    for (size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  return Polynomial(std::move(out));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  if (c == 0) return {};
  std::vector<Rational> out(p.coeffs_.size());
  for (size_t k = 0; k < p.coeffs_.size(); ++k) out[k] = c * p.coeffs_[k];
  return Polynomial(std::move(out));
}

std::string Polynomial::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (long k = degree(); k >= 0; --k) {
    const Rational& c = coeffs_[static_cast<size_t>(k)];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = negative ? Rational(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += magnitude_str(mag, false);
    } else {
      if (mag != 1) out += magnitude_str(mag, true);
      out += (k == 1) ? "x" : "x^" + std::to_string(k);
    }
  }
  return out;
}

Rational poly_eval(const Polynomial& p, const Rational& x) { return p.eval(x); }

Rational poly_integral(const Polynomial& p, const Rational& a, const Rational& b) {
  const Polynomial anti = p.antiderivative();
  return anti.eval(b) - anti.eval(a);
}

}  // namespace useq
