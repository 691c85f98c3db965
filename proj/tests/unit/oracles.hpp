#ifndef USEQ_TESTS_ORACLES_HPP
#define USEQ_TESTS_ORACLES_HPP

// Test-side reference implementations.  Each one deliberately avoids the
// computation path used by the library so that agreement between the two is
// evidence, not tautology.

#include <vector>

#include "useq/numbers.hpp"

namespace useq::oracle {

// Euler numbers at even indices via the boustrophedon (Entringer) triangle:
//   T(0,0) = 1, T(n,0) = 0, T(n,k) = T(n,k-1) + T(n-1,n-k),
// zigzag number Z_n = T(n,n), and E_{2m} = (-1)^m Z_{2m}.  No binomial
// coefficients and no convolution recurrence are involved, unlike the
// library's table.
inline std::vector<Integer> zigzag_euler_even(long max_index) {
  std::vector<Integer> result;  // result[m] = E_{2m}
  std::vector<Integer> row{Integer(1)};
  result.push_back(1);
  for (long n = 1; n <= max_index; ++n) {
    std::vector<Integer> next(static_cast<size_t>(n) + 1);
    next[0] = 0;
    for (long k = 1; k <= n; ++k) next[k] = next[k - 1] + row[static_cast<size_t>(n - k)];
    row = std::move(next);
    if (n % 2 == 0) {
      Integer e = row.back();
      if ((n / 2) % 2 == 1) e = -e;
      result.push_back(e);
    }
  }
  return result;
}

// Row n of Pascal's triangle, by additions only.
inline std::vector<Integer> pascal_row(long n) {
  std::vector<Integer> row{Integer(1)};
  for (long i = 1; i <= n; ++i) {
    std::vector<Integer> next(static_cast<size_t>(i) + 1);
    next[0] = 1;
    next[i] = 1;
    for (long k = 1; k < i; ++k) next[k] = row[static_cast<size_t>(k - 1)] + row[static_cast<size_t>(k)];
    row = std::move(next);
  }
  return row;
}

// sum_{k=0}^{m-1} k^n by direct summation.
inline Integer power_sum(long n, long m) {
  Integer acc = 0;
  for (long k = 0; k < m; ++k) acc += pow_ui(Integer(k), static_cast<unsigned long>(n));
  return acc;
}

// sum_{k=0}^{m-1} (-1)^k k^n by direct summation.
inline Integer alternating_power_sum(long n, long m) {
  Integer acc = 0;
  for (long k = 0; k < m; ++k) {
    const Integer t = pow_ui(Integer(k), static_cast<unsigned long>(n));
    if (k % 2 == 0)
      acc += t;
    else
      acc -= t;
  }
  return acc;
}

}  // namespace useq::oracle

#endif  // USEQ_TESTS_ORACLES_HPP
