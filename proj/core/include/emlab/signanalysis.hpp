#pragma once

// Sign of the cleared polynomial at candidate roots, the per-case ratios R(k)
// and their limits, and the large-m sign crossing of S(m-1, k) - m^k.

#include <optional>
#include <string_view>
#include <vector>

#include "emlab/arith.hpp"
#include "emlab/candidates.hpp"

namespace emlab {

enum class Sign { kNeg = -1, kZero = 0, kPos = 1 };

std::string_view sign_name(Sign s);
Sign sign_of(const Int& value);

struct SignReport {
  int k = 0;
  Int m0;
  // nullopt marks a row from the full divisor-derived candidate set.
  std::optional<CaseKind> case_kind;
  Int value;
  Sign sign = Sign::kZero;
};

/// Exact value of cleared_poly(k) at m0. Requires k >= 2 and m0 >= 3.
SignReport sign_at(int k, const Int& m0);

/// For every 2 <= k <= k_max: one row per highlighted candidate followed by
/// one FULL_SET row per integer candidate >= 3. Rows are ordered by k
/// regardless of `jobs`. ZERO rows are data, not errors.
std::vector<SignReport> sign_summary(int k_max, const DivisorBudget& budget,
                                     unsigned jobs = 1);

inline constexpr int kDefaultExactCutoff = 200;

struct RatioPoint {
  int k = 0;
  CaseKind case_kind = CaseKind::kEvenKm1;
  std::optional<Rat> r_exact;
  long double r_float = 0;
  long double limit = 0;
};

/// R = prefactor * (1 + 1/base)^k for the case at k. Exact for
/// k <= exact_cutoff; r_float is always computed in log space.
RatioPoint ratio_R(int k, CaseKind c, int exact_cutoff = kDefaultExactCutoff);

/// |negative group| / positive group, i.e. 2(k+1) m0^k divided by
/// 2(m0-1)^{k+1} + (k+1)(m0-1)^k, from direct evaluation at m0.
Rat ratio_from_groups(int k, const Int& m0);

/// 2e/3 for EVEN_KM1, ODD_KM2, ODD_KP1; 2 sqrt(e)/5 for EVEN_2KM1; 0 for
/// ODD_PROD.
long double ratio_limit(CaseKind c);

/// First k from which R(k) is claimed to decrease.
int monotone_start(CaseKind c);

struct RatioSeries {
  CaseKind case_kind = CaseKind::kEvenKm1;
  std::vector<RatioPoint> points;
  // Strict decrease across consecutive sampled points with k >= monotone_start.
  bool decreasing = false;
};

/// Samples R over k_from, k_from + step, ..., <= k_to. The step must be even
/// so every sample keeps the case's parity.
RatioSeries ratio_series(CaseKind c, int k_from, int k_to, int step = 2,
                         int exact_cutoff = kDefaultExactCutoff);

/// m^k (m/(k+1) - 3/2 + 1/(2m)). Requires m >= 3 and k >= 2.
Rat asymptotic_value(const Int& m, int k);

struct ThresholdReport {
  int k = 0;
  Rat predicted;  // 3(k+1)/2
  Int crossing;   // smallest m >= 3 with S(m-1, k) > m^k
  // Every scanned m below `crossing` is <= 0 and every scanned m from
  // `crossing` through the window end is > 0.
  bool single_crossing = false;
  Int scan_end;
};

/// Scans the full Euler-Maclaurin polynomial over 3 <= m <= 4(k+2). Throws
/// ConsistencyError if no positive value is found in that window.
ThresholdReport sign_threshold(int k);

}  // namespace emlab
