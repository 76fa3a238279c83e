#pragma once

// Brute-force reference computations used only by tests. None of these call
// into emlab; they share the GMP integer type and nothing else.

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace emlab::oracle {

inline mpz_class ipow(const mpz_class& base, int exponent) {
  mpz_class out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

inline mpq_class qpow(const mpq_class& base, int exponent) {
  mpq_class out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

// 1^k + ... + n^k by repeated multiplication.
inline mpz_class power_sum(long n, int k) {
  mpz_class total = 0;
  for (long i = 1; i <= n; ++i) total += ipow(mpz_class(i), k);
  return total;
}

// Rows 0..n of Pascal's triangle.
inline std::vector<std::vector<mpz_class>> pascal(int n) {
  std::vector<std::vector<mpz_class>> rows(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) {
    rows[r].assign(static_cast<std::size_t>(r) + 1, 1);
    for (int c = 1; c < r; ++c) rows[r][c] = rows[r - 1][c - 1] + rows[r - 1][c];
  }
  return rows;
}

// Akiyama-Tanigawa; produces B_1 = +1/2, which is irrelevant for even n.
inline std::vector<mpq_class> bernoulli_akiyama_tanigawa(int n_max) {
  std::vector<mpq_class> out;
  std::vector<mpq_class> a(static_cast<std::size_t>(n_max) + 1);
  for (int m = 0; m <= n_max; ++m) {
    a[m] = mpq_class(1, m + 1);
    a[m].canonicalize();
    for (int j = m; j >= 1; --j) a[j - 1] = j * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

inline std::vector<std::int64_t> divisors_by_scan(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d) {
    if (n % d == 0) out.push_back(d);
  }
  return out;
}

// Sign of S(m-1, k) - m^k from scratch.
inline int erdos_moser_sign(long m, int k) {
  return sgn(mpz_class(power_sum(m - 1, k) - ipow(mpz_class(m), k)));
}

}  // namespace emlab::oracle
