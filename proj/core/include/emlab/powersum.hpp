#pragma once

// Ground-truth power sums S(n, k) = 1^k + 2^k + ... + n^k.

#include "emlab/arith.hpp"

namespace emlab {

// n is the upper summation limit (m - 1 in the Erdos-Moser setting).
struct PowerSumQuery {
  Int n;
  int k;

  PowerSumQuery(Int n_, int k_);
};

Int sum_direct(const PowerSumQuery& q);

/// Full Euler-Maclaurin expansion of S(n, k) with every non-vanishing
/// correction term, evaluated in exact rationals:
///
///   (n^{k+1} - 1)/(k+1) + (1 + n^k)/2
///     + sum_{r=1}^{floor(k/2)} B_{2r}/(2r)! * k^(2r-1) * (n^{k-2r+1} - 1)
///
/// Requires n >= 1. The result is always an integer; anything else throws
/// ConsistencyError.
Int sum_eml_exact(const PowerSumQuery& q);

/// One Euler-Maclaurin correction term for x^k on [1, x_hi]:
/// B_{2r}/(2r)! * k^(2r-1) * (x_hi^{k-2r+1} - 1). Zero when 2r - 1 > k.
Rat eml_correction_term(const Rat& x_hi, int k, int r);

}  // namespace emlab
