#pragma once

// Rational-root-theorem candidates for the cleared polynomial and its
// quotient by m.

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "emlab/arith.hpp"

namespace emlab {

// The five highlighted integer candidates m0, keyed by k parity.
enum class CaseKind {
  kEvenKm1,   // even k >= 4, m0 = k - 1
  kEven2Km1,  // even k >= 4, m0 = 2(k - 1)
  kOddKm2,    // odd k >= 5,  m0 = k - 2
  kOddKp1,    // odd k >= 3,  m0 = k + 1
  kOddProd,   // odd k >= 3,  m0 = (k + 1)(k - 2)
};

inline constexpr std::array<CaseKind, 5> kAllCases = {
    CaseKind::kEvenKm1, CaseKind::kEven2Km1, CaseKind::kOddKm2,
    CaseKind::kOddKp1, CaseKind::kOddProd};

std::string_view case_name(CaseKind c);
std::optional<CaseKind> parse_case(std::string_view name);
bool case_wants_even_k(CaseKind c);
int case_min_k(CaseKind c);
bool case_applies(CaseKind c, int k);
/// m0 for the case at k; throws DomainError if the case does not apply.
Int case_m0(CaseKind c, int k);

enum class CandidateSource { kP, kQ };

std::string_view source_name(CandidateSource s);

struct CandidateSet {
  int k = 0;
  CandidateSource source = CandidateSource::kP;
  // Positive p/q in lowest terms, ascending.
  std::vector<Rat> all_candidates;
  std::vector<Int> integer_candidates_ge3;
  // Odd k: m = 0 is the root factored out of P to form Q.
  bool has_factored_zero_root = false;
  Int constant_term;
  Int leading_coefficient;
};

/// Applies the rational root theorem to cleared_poly(k) for even k and to
/// q_poly(k) for odd k, keeping positive candidates only.
CandidateSet candidate_roots(int k, const DivisorBudget& budget);

/// The hand-picked integer candidates for k, in CaseKind order. Empty for
/// even k < 4 or odd k < 3.
std::vector<std::pair<CaseKind, Int>> highlighted_candidates(int k);

}  // namespace emlab
