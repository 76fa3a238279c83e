#pragma once

// Exact arithmetic substrate: big integers, normalized rationals, Bernoulli
// numbers, combinatorial helpers and budgeted divisor enumeration.

#include <gmpxx.h>

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace emlab {

using Int = mpz_class;
// gmpxx keeps mpq_class canonical after every arithmetic operation; values
// built from a raw numerator/denominator pair must go through make_rat().
using Rat = mpq_class;

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(Int cofactor);
  const Int& cofactor() const noexcept { return cofactor_; }

 private:
  Int cofactor_;
};

// Raised when an identity that must hold by construction fails.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Rat make_rat(const Int& num, const Int& den);
Int pow(const Int& base, unsigned long exponent);
Rat pow(const Rat& base, unsigned long exponent);
bool is_integer(const Rat& value);
int sign(const Int& value);
int sign(const Rat& value);

// "n" for integers, "n/d" otherwise.
std::string to_string(const Int& value);
std::string to_string(const Rat& value);
// Accepts "n", "-n", "n/d"; throws DomainError on malformed input.
Rat parse_rat(std::string_view text);
Int parse_int(std::string_view text);

// log10(|value|); -infinity for zero.
double log10_abs(const Int& value);
double log10_abs(const Rat& value);

/// Bernoulli number B_n with B_1 = -1/2, so that
/// sum_{j=0}^{n} C(n+1, j) B_j = 0 for n >= 1.
///
/// Only n = 0, 1 and even n are accepted; odd n >= 3 raises DomainError.
/// Values are memoised in a process-wide table that grows monotonically and
/// is safe for concurrent readers.
Rat bernoulli(long n);

/// k (k-1) ... (k-n+1). Returns 1 for n == 0 and 0 when n > k >= 0.
Int falling_factorial(const Int& k, long n);

/// n! / (i! (n-i)!), or 0 when i < 0 or i > n.
Int binomial(const Int& n, long i);

Int factorial(unsigned long n);

class DivisorBudget {
 public:
  DivisorBudget();
  explicit DivisorBudget(Int max_trial);
  const Int& max_trial() const noexcept { return max_trial_; }

 private:
  Int max_trial_;
};

struct PrimePower {
  Int prime;
  unsigned long exponent;
};

/// Trial-division factorization of n >= 1, in increasing prime order.
/// Throws BudgetExceeded when the unfactored cofactor exceeds max_trial^2.
std::vector<PrimePower> factorize(const Int& n, const DivisorBudget& budget);

/// All positive divisors of n >= 1 in increasing order.
std::vector<Int> divisors(const Int& n, const DivisorBudget& budget);

/// d(n) = prod (e_i + 1).
Int divisor_count(const Int& n, const DivisorBudget& budget);

/// Least common multiple of a non-empty list of positive integers.
Int lcm_all(std::span<const Int> values);

}  // namespace emlab
