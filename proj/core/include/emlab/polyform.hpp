#pragma once

// Integer polynomials in m derived from S(m-1, k) - m^k.

#include <cstddef>
#include <utility>
#include <vector>

#include "emlab/arith.hpp"

namespace emlab {

/// Dense polynomial with integer coefficients stored by ascending power.
/// The highest stored coefficient is non-zero; the zero polynomial stores
/// nothing and has degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> ascending);

  /// (m + shift)^n expanded with binomial coefficients.
  static IntPoly shifted_power(const Int& shift, unsigned long n);
  static IntPoly monomial(const Int& coefficient, std::size_t power);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
  Int coeff(std::size_t power) const;
  Int leading() const { return is_zero() ? Int(0) : coeffs_.back(); }
  Int constant() const { return coeff(0); }

  Int eval(const Int& m) const;
  Rat eval(const Rat& m) const;

  /// Exact quotient by m; requires a zero constant term.
  IntPoly divide_by_m() const;
  IntPoly multiply_by_m() const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const Int& scalar);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const Int& s) { return a *= s; }
  friend IntPoly operator*(const Int& s, IntPoly a) { return a *= s; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void trim();

  std::vector<Int> coeffs_;
};

// A polynomial obtained by scaling P_R(m) by `multiplier` to clear
// denominators.
struct ClearedPoly {
  IntPoly poly;
  int k = 0;
  Int multiplier;
};

/// 2(m-1)^{k+1} + (k+1)(m-1)^k - 2(k+1) m^k + (k-1), i.e. 2(k+1) times the
/// first-order approximant of S(m-1, k) - m^k.
ClearedPoly cleared_poly(int k);

/// The truncated P_R(m) = s_r(m, k) - m^k at any rational m.
Rat approx_p_r(const Rat& m, int k);

struct LowTerms {
  Int a0;
  Int a1;
};

/// Constant and linear coefficients of cleared_poly(k). a0 = 2(k-1) for even
/// k and 0 for odd k; a1 = (k+1)(k-2) for odd k. Requires k >= 2; throws
/// ConsistencyError if the expansion disagrees with either closed form.
LowTerms constant_and_linear_terms(int k);

/// cleared_poly(k) / m for odd k >= 3.
IntPoly q_poly(int k);

/// lcm(k+1, 2, (2r)! for 1 <= r <= floor(k/2)).
Int eml_multiplier(int k);

/// D * (S(m-1, k) - m^k) as an integer polynomial, where D = eml_multiplier(k)
/// and S is the full Euler-Maclaurin expansion. The constant term comes from
/// the expansion itself.
ClearedPoly full_eml_poly(int k);

Rat eval_poly(const IntPoly& p, const Rat& m);

}  // namespace emlab
