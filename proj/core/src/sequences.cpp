#include "useq/sequences.hpp"

#include <stdexcept>

namespace useq {

namespace {

void check_index(long n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + ": negative index");
}

// In-place c := c * (n-2k+2)(n-2k+1) / ((2k-1)(2k)), stepping an even-column
// binomial from C(n, 2k-2) to C(n, 2k).  Both divisions are exact.
void step_even_binomial(Integer& c, long n, long k) {
  c *= n - 2 * k + 2;
  c *= n - 2 * k + 1;
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(2 * k - 1));
  mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(2 * k));
}

}  // namespace

Integer binomial(const Integer& n, const Integer& k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative, got " + n.get_str());
  if (k < 0 || k > n) return 0;
  Integer smaller = k;
  if (n - k < smaller) smaller = n - k;
  if (!smaller.fits_ulong_p())
    throw std::overflow_error("binomial: index beyond practical range");
  const unsigned long m = smaller.get_ui();
  Integer r = 1;
  for (unsigned long i = 1; i <= m; ++i) {
    r *= n - Integer(m - i);
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);  // exact: r is C(n-m+i, i)
  }
  return r;
}

std::vector<Integer> binomial_even_row(long n) {
  check_index(n, "binomial_even_row");
  std::vector<Integer> row;
  row.reserve(static_cast<size_t>(n / 2) + 1);
  Integer c = 1;
  row.push_back(c);
  for (long k = 1; 2 * k <= n; ++k) {
    step_even_binomial(c, n, k);
    row.push_back(c);
  }
  return row;
}

Integer factorial_valuation(const Integer& n, const Integer& p) {
  if (p < 2) throw std::invalid_argument("factorial_valuation: p must be at least 2");
  if (n < 1) throw std::invalid_argument("factorial_valuation: n must be positive");
  Integer acc = 0;
  for (Integer q = p; q <= n; q *= p) acc += n / q;
  return acc;
}

Integer SequenceCache::u_number(long n) {
  check_index(n, "u_number");
  if (n % 2 == 1) return 0;
  const size_t j = static_cast<size_t>(n / 2);
  std::lock_guard<std::mutex> lock(u_mutex_);
  if (u_even_.empty()) u_even_.emplace_back(1);
  while (u_even_.size() <= j) {
    const long m = 2 * static_cast<long>(u_even_.size());
    Integer acc = 0;
    Integer c = 1;
    for (long k = 1; 2 * k <= m; ++k) {
      step_even_binomial(c, m, k);
      acc += c * u_even_[u_even_.size() - static_cast<size_t>(k)];
    }
    acc *= -2;
    u_even_.push_back(std::move(acc));
  }
  return u_even_[j];
}

Integer SequenceCache::euler_number(long n) {
  check_index(n, "euler_number");
  if (n % 2 == 1) return 0;
  const size_t j = static_cast<size_t>(n / 2);
  std::lock_guard<std::mutex> lock(euler_mutex_);
  if (euler_even_.empty()) euler_even_.emplace_back(1);
  while (euler_even_.size() <= j) {
    const long m = 2 * static_cast<long>(euler_even_.size());
    Integer acc = 0;
    Integer c = 1;
    for (long k = 1; 2 * k <= m; ++k) {
      step_even_binomial(c, m, k);
      acc += c * euler_even_[euler_even_.size() - static_cast<size_t>(k)];
    }
    acc = -acc;
    euler_even_.push_back(std::move(acc));
  }
  return euler_even_[j];
}

Rational SequenceCache::bernoulli_number(long n) {
  check_index(n, "bernoulli_number");
  const size_t target = static_cast<size_t>(n);
  std::lock_guard<std::mutex> lock(bernoulli_mutex_);
  if (bernoulli_.empty()) bernoulli_.emplace_back(1);
  while (bernoulli_.size() <= target) {
    const long j = static_cast<long>(bernoulli_.size());
    Rational acc(0);
    Integer c = 1;  // C(j+1, k), stepped after use
    for (long k = 0; k < j; ++k) {
      acc += Rational(c) * bernoulli_[static_cast<size_t>(k)];
      c *= j + 1 - k;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
    Rational b = -acc / Rational(j + 1);
    bernoulli_.push_back(std::move(b));
  }
  return bernoulli_[target];
}

long SequenceCache::u_high_water() const {
  std::lock_guard<std::mutex> lock(u_mutex_);
  return u_even_.empty() ? -1 : 2 * (static_cast<long>(u_even_.size()) - 1);
}

long SequenceCache::euler_high_water() const {
  std::lock_guard<std::mutex> lock(euler_mutex_);
  return euler_even_.empty() ? -1 : 2 * (static_cast<long>(euler_even_.size()) - 1);
}

long SequenceCache::bernoulli_high_water() const {
  std::lock_guard<std::mutex> lock(bernoulli_mutex_);
  return bernoulli_.empty() ? -1 : static_cast<long>(bernoulli_.size()) - 1;
}

void SequenceCache::clear() {
  std::scoped_lock lock(u_mutex_, euler_mutex_, bernoulli_mutex_);
  u_even_.clear();
  euler_even_.clear();
  bernoulli_.clear();
}

std::vector<Integer> SequenceCache::u_snapshot() const {
  std::lock_guard<std::mutex> lock(u_mutex_);
  return u_even_;
}

std::vector<Integer> SequenceCache::euler_snapshot() const {
  std::lock_guard<std::mutex> lock(euler_mutex_);
  return euler_even_;
}

std::vector<Rational> SequenceCache::bernoulli_snapshot() const {
  std::lock_guard<std::mutex> lock(bernoulli_mutex_);
  return bernoulli_;
}

void SequenceCache::restore_u(std::vector<Integer> even_values) {
  std::lock_guard<std::mutex> lock(u_mutex_);
  u_even_ = std::move(even_values);
}

void SequenceCache::restore_euler(std::vector<Integer> even_values) {
  std::lock_guard<std::mutex> lock(euler_mutex_);
  euler_even_ = std::move(even_values);
}

void SequenceCache::restore_bernoulli(std::vector<Rational> values) {
  std::lock_guard<std::mutex> lock(bernoulli_mutex_);
  bernoulli_ = std::move(values);
}

Polynomial u_polynomial(SequenceCache& cache, long n) {
  check_index(n, "u_polynomial");
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
  const auto row = binomial_even_row(n);
  for (long k = 0; 2 * k <= n; ++k)
    coeffs[static_cast<size_t>(n - 2 * k)] =
        Rational(row[static_cast<size_t>(k)] * cache.u_number(2 * k));
  return Polynomial(std::move(coeffs));
}

Polynomial euler_polynomial(SequenceCache& cache, long n) {
  check_index(n, "euler_polynomial");
  const auto row = binomial_even_row(n);
  // Powers of (2x - 1), low to high, then one scaling by 2^{-n} at the end.
  const Polynomial linear(std::vector<Rational>{Rational(-1), Rational(2)});
  std::vector<Polynomial> power(static_cast<size_t>(n) + 1);
  power[0] = Polynomial::constant(Rational(1));
  for (long j = 1; j <= n; ++j) power[static_cast<size_t>(j)] = power[static_cast<size_t>(j - 1)] * linear;
  Polynomial acc;
  for (long k = 0; 2 * k <= n; ++k)
    acc += Rational(row[static_cast<size_t>(k)] * cache.euler_number(2 * k)) *
           power[static_cast<size_t>(n - 2 * k)];
  return make_rational(1, pow2(static_cast<unsigned long>(n))) * acc;
}

Polynomial bernoulli_polynomial(SequenceCache& cache, long n) {
  check_index(n, "bernoulli_polynomial");
  std::vector<Rational> coeffs(static_cast<size_t>(n) + 1, Rational(0));
  Integer c = 1;  // C(n, k), stepped after use
  for (long k = 0; k <= n; ++k) {
    coeffs[static_cast<size_t>(n - k)] = Rational(c) * cache.bernoulli_number(k);
    if (k < n) {
      c *= n - k;
      mpz_divexact_ui(c.get_mpz_t(), c.get_mpz_t(), static_cast<unsigned long>(k + 1));
    }
  }
  return Polynomial(std::move(coeffs));
}

}  // namespace useq
