#include "emlab/signanalysis.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "emlab/polyform.hpp"

namespace emlab {

std::string_view sign_name(Sign s) {
  switch (s) {
    case Sign::kNeg: return "NEG";
    case Sign::kZero: return "ZERO";
    case Sign::kPos: return "POS";
  }
  return "?";
}

Sign sign_of(const Int& value) { return static_cast<Sign>(sgn(value)); }

namespace {

SignReport make_report(const IntPoly& poly, int k, const Int& m0,
                       std::optional<CaseKind> c) {
  SignReport r;
  r.k = k;
  r.m0 = m0;
  r.case_kind = c;
  r.value = poly.eval(m0);
  r.sign = sign_of(r.value);
  return r;
}

std::vector<SignReport> sign_rows_for_k(int k, const DivisorBudget& budget) {
  const IntPoly poly = cleared_poly(k).poly;
  std::vector<SignReport> rows;
  for (const auto& [c, m0] : highlighted_candidates(k)) {
    rows.push_back(make_report(poly, k, m0, c));
  }
  for (const Int& m0 : candidate_roots(k, budget).integer_candidates_ge3) {
    rows.push_back(make_report(poly, k, m0, std::nullopt));
  }
  return rows;
}

// R = (pre_num / pre_den) * ((base + 1) / base)^k
struct RatioParts {
  Int pre_num;
  Int pre_den;
  Int base;
};

RatioParts ratio_parts(int k, CaseKind c) {
  const Int kk(k);
  switch (c) {
    case CaseKind::kEvenKm1: return {2 * (kk + 1), 3 * (kk - 1), kk - 2};
    case CaseKind::kEven2Km1: return {2 * (kk + 1), 5 * (kk - 1), 2 * kk - 3};
    case CaseKind::kOddKm2: return {2 * (kk + 1), 3 * kk - 5, kk - 3};
    case CaseKind::kOddKp1: return {2 * (kk + 1), 3 * kk + 1, kk};
    case CaseKind::kOddProd:
      return {2 * (kk + 1), 2 * kk * kk - kk - 5, kk * kk - kk - 3};
  }
  return {};
}

long double to_ld(const Int& v) {
  // All ratio parts are small; values past 2^64 only matter through logs.
  return static_cast<long double>(v.get_d());
}

}  // namespace

SignReport sign_at(int k, const Int& m0) {
  if (k < 2) throw DomainError("sign_at: k must be at least 2");
  if (m0 < 3) throw DomainError("sign_at: m0 must be at least 3");
  return make_report(cleared_poly(k).poly, k, m0, std::nullopt);
}

std::vector<SignReport> sign_summary(int k_max, const DivisorBudget& budget,
                                     unsigned jobs) {
  if (k_max < 3) throw DomainError("sign_summary: k_max must be at least 3");
  const int count = k_max - 1;  // k = 2 .. k_max
  std::vector<std::vector<SignReport>> per_k(static_cast<std::size_t>(count));
  jobs = std::max(1U, std::min(jobs, static_cast<unsigned>(count)));
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (int i = static_cast<int>(w); i < count; i += static_cast<int>(jobs)) {
          per_k[static_cast<std::size_t>(i)] = sign_rows_for_k(i + 2, budget);
        }
      });
    }
  }
  std::vector<SignReport> out;
  for (auto& rows : per_k) {
    for (auto& r : rows) out.push_back(std::move(r));
  }
  return out;
}

RatioPoint ratio_R(int k, CaseKind c, int exact_cutoff) {
  if (!case_applies(c, k)) {
    throw DomainError(std::string(case_name(c)) + " is undefined at k=" +
                      std::to_string(k));
  }
  const RatioParts parts = ratio_parts(k, c);
  RatioPoint p;
  p.k = k;
  p.case_kind = c;
  p.limit = ratio_limit(c);
  if (k <= exact_cutoff) {
    p.r_exact = make_rat(parts.pre_num, parts.pre_den) *
                pow(make_rat(parts.base + 1, parts.base), static_cast<unsigned long>(k));
  }
  const long double log_r = std::log(to_ld(parts.pre_num) / to_ld(parts.pre_den)) +
                            static_cast<long double>(k) * std::log1p(1.0L / to_ld(parts.base));
  p.r_float = std::exp(log_r);
  return p;
}

Rat ratio_from_groups(int k, const Int& m0) {
  const auto uk = static_cast<unsigned long>(k);
  const Int x = m0 - 1;
  const Int positive = 2 * pow(x, uk + 1) + Int(k + 1) * pow(x, uk);
  const Int negative = 2 * Int(k + 1) * pow(m0, uk);
  return make_rat(negative, positive);
}

long double ratio_limit(CaseKind c) {
  constexpr long double e = std::numbers::e_v<long double>;
  switch (c) {
    case CaseKind::kEvenKm1:
    case CaseKind::kOddKm2:
    case CaseKind::kOddKp1: return 2.0L * e / 3.0L;
    case CaseKind::kEven2Km1: return 2.0L * std::sqrt(e) / 5.0L;
    case CaseKind::kOddProd: return 0.0L;
  }
  return 0.0L;
}

int monotone_start(CaseKind c) {
  switch (c) {
    case CaseKind::kEvenKm1: return 4;
    case CaseKind::kEven2Km1: return 8;
    case CaseKind::kOddKm2: return 5;
    case CaseKind::kOddKp1: return 3;
    case CaseKind::kOddProd: return 5;
  }
  return 0;
}

RatioSeries ratio_series(CaseKind c, int k_from, int k_to, int step, int exact_cutoff) {
  if (k_to < k_from) throw DomainError("ratio_series: empty k range");
  if (step <= 0 || step % 2 != 0) {
    throw DomainError("ratio_series: step must be a positive even number");
  }
  if (!case_applies(c, k_from)) {
    throw DomainError("ratio_series: k_from=" + std::to_string(k_from) +
                      " violates the parity or minimum of " + std::string(case_name(c)));
  }
  RatioSeries s;
  s.case_kind = c;
  for (long k = k_from; k <= k_to; k += step) {
    s.points.push_back(ratio_R(static_cast<int>(k), c, exact_cutoff));
  }

  s.decreasing = true;
  const RatioPoint* prev = nullptr;
  for (const RatioPoint& p : s.points) {
    if (p.k < monotone_start(c)) continue;
    if (prev != nullptr) {
      const bool down = (prev->r_exact && p.r_exact) ? *p.r_exact < *prev->r_exact
                                                     : p.r_float < prev->r_float;
      if (!down) s.decreasing = false;
    }
    prev = &p;
  }
  return s;
}

Rat asymptotic_value(const Int& m, int k) {
  if (m < 3) throw DomainError("asymptotic_value: m must be at least 3");
  if (k < 2) throw DomainError("asymptotic_value: k must be at least 2");
  const Rat mr(m);
  const Rat bracket = mr / Rat(k + 1) - Rat(3, 2) + 1 / (2 * mr);
  return Rat(pow(m, static_cast<unsigned long>(k))) * bracket;
}

ThresholdReport sign_threshold(int k) {
  if (k < 1) throw DomainError("sign_threshold: k must be at least 1");
  const IntPoly poly = full_eml_poly(k).poly;
  ThresholdReport r;
  r.k = k;
  r.predicted = Rat(3 * (k + 1), 2);
  r.predicted.canonicalize();
  r.scan_end = 4 * Int(k + 2);

  std::optional<Int> crossing;
  bool monotone = true;
  for (Int m = 3; m <= r.scan_end; ++m) {
    const bool positive = poly.eval(m) > 0;
    if (!crossing) {
      if (positive) crossing = m;
    } else if (!positive) {
      monotone = false;
    }
  }
  if (!crossing) {
    throw ConsistencyError("no sign crossing below m=" + r.scan_end.get_str() +
                           " at k=" + std::to_string(k));
  }
  r.crossing = *crossing;
  r.single_crossing = monotone;
  return r;
}

}  // namespace emlab
