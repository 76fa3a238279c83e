#include "emlab/candidates.hpp"

#include <algorithm>

#include "emlab/polyform.hpp"

namespace emlab {

std::string_view case_name(CaseKind c) {
  switch (c) {
    case CaseKind::kEvenKm1: return "EVEN_KM1";
    case CaseKind::kEven2Km1: return "EVEN_2KM1";
    case CaseKind::kOddKm2: return "ODD_KM2";
    case CaseKind::kOddKp1: return "ODD_KP1";
    case CaseKind::kOddProd: return "ODD_PROD";
  }
  return "?";
}

std::optional<CaseKind> parse_case(std::string_view name) {
  for (CaseKind c : kAllCases) {
    if (case_name(c) == name) return c;
  }
  return std::nullopt;
}

bool case_wants_even_k(CaseKind c) {
  return c == CaseKind::kEvenKm1 || c == CaseKind::kEven2Km1;
}

int case_min_k(CaseKind c) {
  switch (c) {
    case CaseKind::kEvenKm1:
    case CaseKind::kEven2Km1: return 4;
    case CaseKind::kOddKm2: return 5;
    case CaseKind::kOddKp1:
    case CaseKind::kOddProd: return 3;
  }
  return 0;
}

bool case_applies(CaseKind c, int k) {
  return k >= case_min_k(c) && (k % 2 == 0) == case_wants_even_k(c);
}

Int case_m0(CaseKind c, int k) {
  if (!case_applies(c, k)) {
    throw DomainError(std::string(case_name(c)) + " does not apply at k=" +
                      std::to_string(k));
  }
  const Int kk(k);
  switch (c) {
    case CaseKind::kEvenKm1: return kk - 1;
    case CaseKind::kEven2Km1: return 2 * (kk - 1);
    case CaseKind::kOddKm2: return kk - 2;
    case CaseKind::kOddKp1: return kk + 1;
    case CaseKind::kOddProd: return (kk + 1) * (kk - 2);
  }
  return 0;
}

std::string_view source_name(CandidateSource s) {
  return s == CandidateSource::kP ? "P" : "Q";
}

CandidateSet candidate_roots(int k, const DivisorBudget& budget) {
  if (k < 2) throw DomainError("candidate_roots: k must be at least 2");
  CandidateSet out;
  out.k = k;
  IntPoly poly;
  if (k % 2 == 0) {
    out.source = CandidateSource::kP;
    poly = cleared_poly(k).poly;
  } else {
    out.source = CandidateSource::kQ;
    out.has_factored_zero_root = true;
    poly = q_poly(k);
  }
  out.constant_term = poly.constant();
  out.leading_coefficient = poly.leading();

  const auto numerators = divisors(abs(out.constant_term), budget);
  const auto denominators = divisors(abs(out.leading_coefficient), budget);
  for (const Int& p : numerators) {
    for (const Int& q : denominators) out.all_candidates.push_back(make_rat(p, q));
  }
  std::sort(out.all_candidates.begin(), out.all_candidates.end());
  out.all_candidates.erase(
      std::unique(out.all_candidates.begin(), out.all_candidates.end()),
      out.all_candidates.end());

  for (const Rat& c : out.all_candidates) {
    if (is_integer(c) && c >= 3) out.integer_candidates_ge3.push_back(c.get_num());
  }
  return out;
}

std::vector<std::pair<CaseKind, Int>> highlighted_candidates(int k) {
  std::vector<std::pair<CaseKind, Int>> out;
  for (CaseKind c : kAllCases) {
    if (!case_applies(c, k)) continue;
    Int m0 = case_m0(c, k);
    if (m0 >= 3) out.emplace_back(c, std::move(m0));
  }
  return out;
}

}  // namespace emlab
