#include "emlab/polyform.hpp"

#include <algorithm>

#include "emlab/powersum.hpp"

namespace emlab {

IntPoly::IntPoly(std::vector<Int> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::shifted_power(const Int& shift, unsigned long n) {
  std::vector<Int> c(n + 1);
  for (unsigned long i = 0; i <= n; ++i) {
    c[i] = binomial(Int(n), static_cast<long>(i)) * pow(shift, n - i);
  }
  return IntPoly(std::move(c));
}

IntPoly IntPoly::monomial(const Int& coefficient, std::size_t power) {
  std::vector<Int> c(power + 1);
  c[power] = coefficient;
  return IntPoly(std::move(c));
}

Int IntPoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Int(0);
}

Int IntPoly::eval(const Int& m) const {
  Int acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= m;
    acc += *it;
  }
  return acc;
}

Rat IntPoly::eval(const Rat& m) const {
  // Horner over the common denominator: sum c_i num^i den^(d-i) / den^d.
  if (is_zero()) return 0;
  const Int& num = m.get_num();
  const Int& den = m.get_den();
  Int acc = 0;
  Int den_power = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= num;
    acc += *it * den_power;
    den_power *= den;
  }
  return make_rat(acc, den_power / den);
}

IntPoly IntPoly::divide_by_m() const {
  if (constant() != 0) throw DomainError("polynomial is not divisible by m");
  if (is_zero()) return {};
  return IntPoly(std::vector<Int>(coeffs_.begin() + 1, coeffs_.end()));
}

IntPoly IntPoly::multiply_by_m() const {
  if (is_zero()) return {};
  std::vector<Int> c;
  c.reserve(coeffs_.size() + 1);
  c.emplace_back(0);
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(c));
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const Int& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

ClearedPoly cleared_poly(int k) {
  if (k < 1) throw DomainError("cleared_poly: k must be at least 1");
  const auto uk = static_cast<unsigned long>(k);
  IntPoly p = Int(2) * IntPoly::shifted_power(-1, uk + 1);
  p += Int(k + 1) * IntPoly::shifted_power(-1, uk);
  p -= IntPoly::monomial(Int(2) * (k + 1), uk);
  p += IntPoly::monomial(Int(k - 1), 0);
  return {std::move(p), k, Int(2) * (k + 1)};
}

Rat approx_p_r(const Rat& m, int k) {
  if (k < 1) throw DomainError("approx_p_r: k must be at least 1");
  const auto uk = static_cast<unsigned long>(k);
  const Rat x = m - 1;
  return (pow(x, uk + 1) - 1) / Rat(k + 1) + (pow(x, uk) + 1) / Rat(2) - pow(m, uk);
}

LowTerms constant_and_linear_terms(int k) {
  if (k < 2) throw DomainError("constant_and_linear_terms: k must be at least 2");
  const IntPoly p = cleared_poly(k).poly;
  LowTerms out{p.coeff(0), p.coeff(1)};
  const Int a0_law = k % 2 == 0 ? Int(2) * (k - 1) : Int(0);
  if (out.a0 != a0_law) {
    throw ConsistencyError("a0 of cleared polynomial disagrees with parity law at k=" +
                           std::to_string(k));
  }
  if (k % 2 == 1 && out.a1 != Int(k + 1) * (k - 2)) {
    throw ConsistencyError("a1 of cleared polynomial disagrees with (k+1)(k-2) at k=" +
                           std::to_string(k));
  }
  return out;
}

IntPoly q_poly(int k) {
  if (k < 3 || k % 2 == 0) {
    throw DomainError("Q undefined for even k (requires odd k >= 3)");
  }
  return cleared_poly(k).poly.divide_by_m();
}

Int eml_multiplier(int k) {
  if (k < 1) throw DomainError("eml_multiplier: k must be at least 1");
  std::vector<Int> parts{Int(k + 1), Int(2)};
  for (int r = 1; r <= k / 2; ++r) parts.push_back(factorial(2UL * static_cast<unsigned long>(r)));
  return lcm_all(parts);
}

namespace {

// Rational-coefficient accumulator, ascending powers.
class RatPolyBuilder {
 public:
  explicit RatPolyBuilder(std::size_t size) : coeffs_(size) {}

  void add_scaled(const IntPoly& p, const Rat& scale) {
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
      coeffs_[i] += scale * Rat(p.coeffs()[i]);
    }
  }

  IntPoly scale_to_int(const Int& multiplier, int k) const {
    std::vector<Int> out;
    out.reserve(coeffs_.size());
    for (const Rat& c : coeffs_) {
      Rat scaled = c * Rat(multiplier);
      if (!is_integer(scaled)) {
        throw ConsistencyError("full Euler-Maclaurin polynomial is not integral at k=" +
                               std::to_string(k));
      }
      out.push_back(scaled.get_num());
    }
    return IntPoly(std::move(out));
  }

 private:
  std::vector<Rat> coeffs_;
};

}  // namespace

ClearedPoly full_eml_poly(int k) {
  if (k < 1) throw DomainError("full_eml_poly: k must be at least 1");
  const auto uk = static_cast<unsigned long>(k);
  const IntPoly one = IntPoly::monomial(1, 0);
  RatPolyBuilder acc(uk + 2);

  // integral of x^k over [1, m-1]
  acc.add_scaled(IntPoly::shifted_power(-1, uk + 1) - one, Rat(1, k + 1));
  // boundary average (1 + (m-1)^k) / 2
  acc.add_scaled(IntPoly::shifted_power(-1, uk) + one, Rat(1, 2));
  acc.add_scaled(IntPoly::monomial(1, uk), Rat(-1));
  for (int r = 1; r <= k / 2; ++r) {
    const long order = 2L * r - 1;
    Rat weight = bernoulli(2L * r) / Rat(factorial(2UL * static_cast<unsigned long>(r)));
    weight *= Rat(falling_factorial(Int(k), order));
    acc.add_scaled(IntPoly::shifted_power(-1, uk - static_cast<unsigned long>(order)) - one,
                   weight);
  }

  Int multiplier = eml_multiplier(k);
  IntPoly poly = acc.scale_to_int(multiplier, k);
  return {std::move(poly), k, std::move(multiplier)};
}

Rat eval_poly(const IntPoly& p, const Rat& m) { return p.eval(m); }

}  // namespace emlab
