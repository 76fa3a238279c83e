#include "emlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <shared_mutex>

namespace emlab {

BudgetExceeded::BudgetExceeded(Int cofactor)
    : std::runtime_error("divisor budget exceeded: unfactored cofactor " +
                         cofactor.get_str()),
      cofactor_(std::move(cofactor)) {}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int pow(const Int& base, unsigned long exponent) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

Rat pow(const Rat& base, unsigned long exponent) {
  // (n/d)^e is already in lowest terms when n/d is.
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  return out;
}

bool is_integer(const Rat& value) { return value.get_den() == 1; }

int sign(const Int& value) { return sgn(value); }
int sign(const Rat& value) { return sgn(value); }

std::string to_string(const Int& value) { return value.get_str(); }

std::string to_string(const Rat& value) {
  if (is_integer(value)) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Int parse_int(std::string_view text) {
  if (text.empty()) throw DomainError("empty integer literal");
  std::string s(text);
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size() ||
      !std::all_of(s.begin() + static_cast<long>(start), s.end(),
                   [](unsigned char c) { return c >= '0' && c <= '9'; })) {
    throw DomainError("malformed integer literal '" + s + "'");
  }
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  return make_rat(num, den);
}

double log10_abs(const Int& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  long exp2 = 0;
  double mant = mpz_get_d_2exp(&exp2, value.get_mpz_t());
  return std::log10(std::fabs(mant)) +
         static_cast<double>(exp2) * std::log10(2.0);
}

double log10_abs(const Rat& value) {
  if (value == 0) return -std::numeric_limits<double>::infinity();
  return log10_abs(value.get_num()) - log10_abs(value.get_den());
}

namespace {

class BernoulliTable {
 public:
  Rat get(long n) {
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<long>(values_.size())) return values_[n];
    }
    std::unique_lock lock(mutex_);
    extend(n);
    return values_[n];
  }

 private:
  // sum_{j=0}^{n} C(n+1, j) B_j = 0  =>  B_n = -1/(n+1) sum_{j<n} C(n+1, j) B_j
  void extend(long n) {
    if (values_.empty()) values_.emplace_back(1);
    for (long i = static_cast<long>(values_.size()); i <= n; ++i) {
      if (i > 1 && i % 2 == 1) {
        values_.emplace_back(0);
        continue;
      }
      Rat acc = 0;
      for (long j = 0; j < i; ++j) {
        if (values_[j] == 0) continue;
        acc += Rat(binomial(Int(i + 1), j)) * values_[j];
      }
      values_.push_back(-acc / Rat(i + 1));
    }
  }

  std::shared_mutex mutex_;
  std::vector<Rat> values_;
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

}  // namespace

Rat bernoulli(long n) {
  if (n < 0) throw DomainError("bernoulli: negative index");
  if (n > 1 && n % 2 == 1) {
    throw DomainError("bernoulli: odd index " + std::to_string(n) +
                      " is not supported");
  }
  return bernoulli_table().get(n);
}

Int falling_factorial(const Int& k, long n) {
  if (n < 0) throw DomainError("falling_factorial: negative order");
  if (k >= 0 && Int(n) > k) return 0;
  Int out = 1;
  for (long i = 0; i < n; ++i) out *= k - i;
  return out;
}

Int binomial(const Int& n, long i) {
  if (i < 0 || Int(i) > n) return 0;
  Int out;
  mpz_bin_ui(out.get_mpz_t(), n.get_mpz_t(), static_cast<unsigned long>(i));
  return out;
}

Int factorial(unsigned long n) {
  Int out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

DivisorBudget::DivisorBudget() : max_trial_(1'000'000) {}

DivisorBudget::DivisorBudget(Int max_trial) : max_trial_(std::move(max_trial)) {
  if (max_trial_ < 2) throw DomainError("divisor budget must be at least 2");
}

std::vector<PrimePower> factorize(const Int& n, const DivisorBudget& budget) {
  if (n < 1) throw DomainError("factorize: n must be positive");
  std::vector<PrimePower> out;
  Int rest = n;
  const unsigned long limit =
      budget.max_trial().fits_ulong_p()
          ? budget.max_trial().get_ui()
          : std::numeric_limits<unsigned long>::max() - 2;

  auto strip = [&](unsigned long d) {
    unsigned long e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d) != 0) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    if (e > 0) out.push_back({Int(d), e});
  };

  strip(2);
  for (unsigned long d = 3; d <= limit; d += 2) {
    if (Int(d) * d > rest) break;
    strip(d);
  }
  if (rest > 1) {
    if (rest > budget.max_trial() * budget.max_trial()) throw BudgetExceeded(rest);
    out.push_back({rest, 1});
  }
  return out;
}

std::vector<Int> divisors(const Int& n, const DivisorBudget& budget) {
  std::vector<Int> out{Int(1)};
  for (const auto& [prime, exponent] : factorize(n, budget)) {
    const std::size_t base = out.size();
    Int power = 1;
    for (unsigned long e = 0; e < exponent; ++e) {
      power *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * power);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Int divisor_count(const Int& n, const DivisorBudget& budget) {
  Int count = 1;
  for (const auto& pp : factorize(n, budget)) count *= pp.exponent + 1;
  return count;
}

Int lcm_all(std::span<const Int> values) {
  if (values.empty()) throw DomainError("lcm_all: empty list");
  Int out = 1;
  for (const Int& v : values) {
    if (v < 1) throw DomainError("lcm_all: values must be positive");
    mpz_lcm(out.get_mpz_t(), out.get_mpz_t(), v.get_mpz_t());
  }
  return out;
}

}  // namespace emlab
