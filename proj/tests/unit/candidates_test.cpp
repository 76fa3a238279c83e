#include "emlab/candidates.hpp"

#include <gtest/gtest.h>

#include <algorithm>

#include "emlab/polyform.hpp"

namespace emlab {
namespace {

using Highlights = std::vector<std::pair<CaseKind, Int>>;

TEST(CaseKind, NamesRoundTrip) {
  for (CaseKind c : kAllCases) EXPECT_EQ(parse_case(case_name(c)), c);
  EXPECT_FALSE(parse_case("EVEN").has_value());
  EXPECT_TRUE(case_applies(CaseKind::kOddKm2, 5));
  EXPECT_FALSE(case_applies(CaseKind::kOddKm2, 3));
  EXPECT_FALSE(case_applies(CaseKind::kEvenKm1, 5));
  EXPECT_THROW(case_m0(CaseKind::kEvenKm1, 2), DomainError);
}

TEST(CandidateRoots, Examples) {
  const DivisorBudget budget;
  EXPECT_EQ(candidate_roots(4, budget).integer_candidates_ge3, (std::vector<Int>{3, 6}));
  EXPECT_EQ(candidate_roots(10, budget).integer_candidates_ge3,
            (std::vector<Int>{3, 6, 9, 18}));

  const CandidateSet k3 = candidate_roots(3, budget);
  EXPECT_EQ(k3.source, CandidateSource::kQ);
  EXPECT_TRUE(k3.has_factored_zero_root);
  EXPECT_EQ(k3.integer_candidates_ge3, (std::vector<Int>{4}));
  EXPECT_EQ(k3.all_candidates, (std::vector<Rat>{Rat(1, 2), Rat(1), Rat(2), Rat(4)}));
  EXPECT_EQ(k3.constant_term, 4);
  EXPECT_EQ(k3.leading_coefficient, 2);

  const CandidateSet k2 = candidate_roots(2, budget);
  EXPECT_EQ(k2.source, CandidateSource::kP);
  EXPECT_FALSE(k2.has_factored_zero_root);
  EXPECT_TRUE(k2.integer_candidates_ge3.empty());
  EXPECT_THROW(candidate_roots(1, budget), DomainError);
}

TEST(CandidateRoots, BudgetPropagates) {
  // (k+1)(k-2) for k = 101 is 102 * 99 = 2 * 3^3 * 11 * 17; a budget of 2
  // leaves 3^3 * 11 * 17 > 4 unfactored.
  EXPECT_THROW(candidate_roots(101, DivisorBudget(Int(2))), BudgetExceeded);
}

TEST(Highlighted, Examples) {
  EXPECT_EQ(highlighted_candidates(4),
            (Highlights{{CaseKind::kEvenKm1, 3}, {CaseKind::kEven2Km1, 6}}));
  EXPECT_EQ(highlighted_candidates(5), (Highlights{{CaseKind::kOddKm2, 3},
                                                   {CaseKind::kOddKp1, 6},
                                                   {CaseKind::kOddProd, 18}}));
  EXPECT_EQ(highlighted_candidates(3),
            (Highlights{{CaseKind::kOddKp1, 4}, {CaseKind::kOddProd, 4}}));
  EXPECT_TRUE(highlighted_candidates(2).empty());
  EXPECT_TRUE(highlighted_candidates(1).empty());
}

TEST(CandidateRoots, HighlightedAreLegalCandidates) {
  const DivisorBudget budget;
  for (int k = 3; k <= 200; ++k) {
    const auto full = candidate_roots(k, budget).integer_candidates_ge3;
    for (const auto& [c, m0] : highlighted_candidates(k)) {
      EXPECT_TRUE(std::binary_search(full.begin(), full.end(), m0))
          << case_name(c) << " k=" << k;
    }
  }
}

TEST(CandidateRoots, DivisibilityRecheckAndRoots) {
  const DivisorBudget budget;
  std::vector<std::pair<int, Rat>> roots;
  for (int k = 2; k <= 30; ++k) {
    const CandidateSet set = candidate_roots(k, budget);
    const IntPoly poly = k % 2 == 0 ? cleared_poly(k).poly : q_poly(k);
    EXPECT_EQ(set.constant_term, poly.constant());
    EXPECT_EQ(set.leading_coefficient, poly.leading());
    EXPECT_TRUE(std::is_sorted(set.all_candidates.begin(), set.all_candidates.end()));
    for (const Rat& c : set.all_candidates) {
      EXPECT_GT(c, 0);
      EXPECT_TRUE(mpz_divisible_p(set.constant_term.get_mpz_t(), c.get_num().get_mpz_t()));
      EXPECT_TRUE(
          mpz_divisible_p(set.leading_coefficient.get_mpz_t(), c.get_den().get_mpz_t()));
      if (poly.eval(c) == 0) roots.emplace_back(k, c);
    }
    for (const Int& m : set.integer_candidates_ge3) {
      EXPECT_TRUE(std::binary_search(set.all_candidates.begin(), set.all_candidates.end(),
                                     Rat(m)));
    }
  }
  // The only rational root in range is below 3: P(1/2) = 2 - 9/4 + 1/4 for k = 2.
  ASSERT_EQ(roots.size(), 1U);
  EXPECT_EQ(roots[0].first, 2);
  EXPECT_EQ(roots[0].second, Rat(1, 2));
}

}  // namespace
}  // namespace emlab
