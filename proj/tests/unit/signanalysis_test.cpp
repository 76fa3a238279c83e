#include "emlab/signanalysis.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "emlab/polyform.hpp"
#include "oracle/oracles.hpp"

namespace emlab {
namespace {

TEST(SignAt, Examples) {
  const SignReport a = sign_at(4, 3);
  EXPECT_EQ(a.value, -663);
  EXPECT_EQ(a.sign, Sign::kNeg);
  const SignReport b = sign_at(4, 6);
  EXPECT_EQ(b.value, -3582);
  EXPECT_EQ(b.sign, Sign::kNeg);
  EXPECT_EQ(sign_at(8, 14).sign, Sign::kPos);
  EXPECT_THROW(sign_at(1, 5), DomainError);
  EXPECT_THROW(sign_at(4, 2), DomainError);
}

TEST(SignSummary, SmallTable) {
  const DivisorBudget budget;
  const auto rows = sign_summary(10, budget);
  for (const auto& r : rows) EXPECT_NE(r.sign, Sign::kZero) << "k=" << r.k << " m0=" << r.m0;

  auto find = [&](int k, CaseKind c) -> const SignReport& {
    for (const auto& r : rows) {
      if (r.k == k && r.case_kind == c) return r;
    }
    throw std::runtime_error("row missing");
  };
  EXPECT_EQ(find(3, CaseKind::kOddKp1).m0, 4);
  EXPECT_EQ(find(3, CaseKind::kOddKp1).sign, Sign::kNeg);
  EXPECT_EQ(find(3, CaseKind::kOddProd).m0, 4);
  EXPECT_EQ(find(3, CaseKind::kOddProd).sign, Sign::kNeg);
  EXPECT_EQ(find(5, CaseKind::kOddProd).m0, 18);
  EXPECT_EQ(find(5, CaseKind::kOddProd).sign, Sign::kPos);
  EXPECT_EQ(find(4, CaseKind::kEvenKm1).value, -663);

  // k = 10 full set is {3, 6, 9, 18}
  int full_rows_k10 = 0;
  for (const auto& r : rows) full_rows_k10 += (r.k == 10 && !r.case_kind) ? 1 : 0;
  EXPECT_EQ(full_rows_k10, 4);
}

TEST(SignSummary, IndependentOfJobCount) {
  const DivisorBudget budget;
  const auto serial = sign_summary(40, budget, 1);
  for (unsigned jobs : {2U, 5U, 16U}) {
    const auto parallel = sign_summary(40, budget, jobs);
    ASSERT_EQ(parallel.size(), serial.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      EXPECT_EQ(parallel[i].k, serial[i].k);
      EXPECT_EQ(parallel[i].m0, serial[i].m0);
      EXPECT_EQ(parallel[i].case_kind, serial[i].case_kind);
      EXPECT_EQ(parallel[i].value, serial[i].value);
    }
  }
  EXPECT_THROW(sign_summary(2, budget), DomainError);
}

TEST(RatioR, TabulatedSpotValues) {
  EXPECT_NEAR(static_cast<double>(ratio_R(4, CaseKind::kEven2Km1).r_float), 1.382, 1e-3);
  EXPECT_NEAR(static_cast<double>(ratio_R(5, CaseKind::kOddKm2).r_float), 9.112, 1e-3);
  EXPECT_NEAR(static_cast<double>(ratio_R(9, CaseKind::kOddProd).r_float), 0.154, 1e-3);
  EXPECT_THROW(ratio_R(5, CaseKind::kEvenKm1), DomainError);
  EXPECT_THROW(ratio_R(3, CaseKind::kOddKm2), DomainError);
}

TEST(RatioR, ExactAndLogSpaceAgree) {
  for (CaseKind c : kAllCases) {
    for (int k = case_min_k(c); k <= 200; k += 2) {
      const RatioPoint p = ratio_R(k, c);
      ASSERT_TRUE(p.r_exact.has_value());
      const long double exact = p.r_exact->get_d();
      EXPECT_LE(std::fabs(static_cast<double>(exact - p.r_float)), 1e-9 * exact)
          << case_name(c) << " k=" << k;
    }
  }
  EXPECT_FALSE(ratio_R(202, CaseKind::kEvenKm1).r_exact.has_value());
  EXPECT_TRUE(ratio_R(202, CaseKind::kEvenKm1, 300).r_exact.has_value());
}

TEST(RatioR, MatchesGroupedEvaluation) {
  for (CaseKind c : kAllCases) {
    for (int k = case_min_k(c); k <= 41; k += 2) {
      EXPECT_EQ(*ratio_R(k, c).r_exact, ratio_from_groups(k, case_m0(c, k)))
          << case_name(c) << " k=" << k;
    }
  }
  EXPECT_EQ(*ratio_R(3, CaseKind::kOddKp1).r_exact, *ratio_R(3, CaseKind::kOddProd).r_exact);
}

TEST(RatioLimit, Values) {
  EXPECT_NEAR(static_cast<double>(ratio_limit(CaseKind::kEvenKm1)), 1.81218788563936349, 1e-13);
  EXPECT_NEAR(static_cast<double>(ratio_limit(CaseKind::kEven2Km1)), 0.65948850828005126, 1e-13);
  EXPECT_EQ(ratio_limit(CaseKind::kOddProd), 0.0L);
  EXPECT_EQ(ratio_limit(CaseKind::kOddKm2), ratio_limit(CaseKind::kEvenKm1));
  EXPECT_EQ(ratio_limit(CaseKind::kOddKp1), ratio_limit(CaseKind::kEvenKm1));
}

TEST(RatioSeries, Examples) {
  const RatioSeries e2 = ratio_series(CaseKind::kEven2Km1, 8, 14);
  EXPECT_TRUE(e2.decreasing);
  ASSERT_EQ(e2.points.size(), 4U);
  EXPECT_NEAR(static_cast<double>(e2.points.front().r_float), 0.930, 1e-3);

  const RatioSeries kp1 = ratio_series(CaseKind::kOddKp1, 3, 9);
  EXPECT_TRUE(kp1.decreasing);
  const double want[] = {1.896, 1.866, 1.852, 1.844};
  ASSERT_EQ(kp1.points.size(), 4U);
  for (std::size_t i = 0; i < 4; ++i) {
    EXPECT_NEAR(static_cast<double>(kp1.points[i].r_float), want[i], 1e-3);
  }

  const RatioPoint far = ratio_R(10'000, CaseKind::kEvenKm1);
  EXPECT_LE(std::fabs(static_cast<double>(far.r_float - far.limit)), 2e-3);
}

TEST(RatioSeries, VerdictStartsAtMonotoneThreshold) {
  // R(4) > R(6) > 1 > R(8) for EVEN_2KM1, and the lemma's monotone claim
  // starts at k = 8; the sample at 4..6 must not affect the verdict.
  EXPECT_TRUE(ratio_series(CaseKind::kEven2Km1, 4, 20).decreasing);
}

TEST(RatioSeries, RejectsBadRanges) {
  EXPECT_THROW(ratio_series(CaseKind::kOddKp1, 9, 3), DomainError);
  EXPECT_THROW(ratio_series(CaseKind::kOddKp1, 4, 10), DomainError);
  EXPECT_THROW(ratio_series(CaseKind::kOddKp1, 3, 9, 1), DomainError);
  EXPECT_THROW(ratio_series(CaseKind::kOddKm2, 3, 9), DomainError);
}

TEST(Asymptotic, Examples) {
  EXPECT_EQ(asymptotic_value(100, 4), 1850500000);
  // m = 3(k+1)/2 cancels the first two bracket terms: 6^3 / 12
  EXPECT_EQ(asymptotic_value(6, 3), 18);
  EXPECT_LT(asymptotic_value(7, 4), 0);
  EXPECT_GT(asymptotic_value(8, 4), 0);
  EXPECT_THROW(asymptotic_value(2, 4), DomainError);
}

TEST(Asymptotic, SignAgreesWithExactFarFromCrossing) {
  for (int k = 2; k <= 30; ++k) {
    const IntPoly exact = full_eml_poly(k).poly;
    for (long m = 2 * (k + 1); m <= 2 * (k + 1) + 60; ++m) {
      EXPECT_EQ(sign(asymptotic_value(m, k)), sgn(exact.eval(Int(m)))) << k << "," << m;
    }
  }
}

TEST(Threshold, Examples) {
  const ThresholdReport k4 = sign_threshold(4);
  EXPECT_EQ(k4.predicted, Rat(15, 2));
  EXPECT_EQ(k4.crossing, 8);
  EXPECT_TRUE(k4.single_crossing);

  const ThresholdReport k2 = sign_threshold(2);
  EXPECT_EQ(k2.predicted, Rat(9, 2));
  EXPECT_EQ(k2.crossing, 5);

  const ThresholdReport k1 = sign_threshold(1);
  EXPECT_EQ(k1.crossing, 4);
  EXPECT_EQ(full_eml_poly(1).poly.eval(Int(3)), 0);
}

TEST(Threshold, MatchesDirectSumScan) {
  for (int k = 2; k <= 24; ++k) {
    long first = 0;
    for (long m = 3; first == 0; ++m) {
      if (oracle::erdos_moser_sign(m, k) > 0) first = m;
    }
    EXPECT_EQ(sign_threshold(k).crossing, first) << k;
  }
}

}  // namespace
}  // namespace emlab
