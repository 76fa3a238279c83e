#include "emlab/powersum.hpp"

namespace emlab {

PowerSumQuery::PowerSumQuery(Int n_, int k_) : n(std::move(n_)), k(k_) {
  if (n < 0) throw DomainError("power sum: n must be non-negative");
  if (k < 1) throw DomainError("power sum: k must be at least 1");
}

Int sum_direct(const PowerSumQuery& q) {
  Int total = 0;
  for (Int i = 1; i <= q.n; ++i) total += pow(i, static_cast<unsigned long>(q.k));
  return total;
}

Rat eml_correction_term(const Rat& x_hi, int k, int r) {
  const long order = 2L * r - 1;
  if (order > k) return 0;
  Rat weight = bernoulli(2L * r) / Rat(factorial(2UL * static_cast<unsigned long>(r)));
  Rat derivative_gap = pow(x_hi, static_cast<unsigned long>(k - order)) - 1;
  return weight * Rat(falling_factorial(Int(k), order)) * derivative_gap;
}

Int sum_eml_exact(const PowerSumQuery& q) {
  if (q.n < 1) throw DomainError("sum_eml_exact: n must be at least 1");
  const auto k = static_cast<unsigned long>(q.k);
  const Rat n(q.n);

  Rat total = (pow(n, k + 1) - 1) / Rat(q.k + 1);
  total += (1 + pow(n, k)) / Rat(2);
  for (int r = 1; r <= q.k / 2; ++r) total += eml_correction_term(n, q.k, r);

  if (!is_integer(total)) {
    throw ConsistencyError("Euler-Maclaurin sum is not an integer: " +
                           to_string(total));
  }
  return total.get_num();
}

}  // namespace emlab
