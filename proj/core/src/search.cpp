#include "emlab/search.hpp"

#include <algorithm>
#include <thread>

#include "emlab/powersum.hpp"

namespace emlab {

namespace {

void validate(KRange k_range, const IntRange& m_range) {
  if (k_range.lo < 1) throw DomainError("search: k must be at least 1");
  if (k_range.hi < k_range.lo) throw DomainError("search: empty k range");
  if (m_range.lo < 3) throw DomainError("search: m must be at least 3");
  if (m_range.hi < m_range.lo) throw DomainError("search: empty m range");
}

struct KScan {
  std::vector<SearchHit> hits;
  bool multi_crossing = false;
};

KScan scan_k(int k, const IntRange& m_range) {
  const auto uk = static_cast<unsigned long>(k);
  KScan out;
  // running = S(m-1, k), advanced by (m-1)^k per step
  Int running = sum_direct(PowerSumQuery(m_range.lo - 1, k));
  int sign_changes = 0;
  int prev_sign = 0;
  for (Int m = m_range.lo; m <= m_range.hi; ++m) {
    if (m > m_range.lo) running += pow(Int(m - 1), uk);
    const int s = sgn(Int(running - pow(m, uk)));
    if (s == 0) out.hits.push_back({k, m});
    if (s != 0) {
      if (prev_sign != 0 && s != prev_sign) ++sign_changes;
      prev_sign = s;
    }
  }
  out.multi_crossing = sign_changes > 1;
  return out;
}

}  // namespace

bool check_pair(int k, const Int& m) {
  if (k < 1) throw DomainError("check_pair: k must be at least 1");
  if (m < 3) throw DomainError("check_pair: m must be at least 3");
  return sum_direct(PowerSumQuery(m - 1, k)) == pow(m, static_cast<unsigned long>(k));
}

SearchReport search_box(KRange k_range, IntRange m_range, unsigned shards) {
  validate(k_range, m_range);
  const int count = k_range.hi - k_range.lo + 1;
  std::vector<KScan> per_k(static_cast<std::size_t>(count));
  shards = std::max(1U, std::min(shards, static_cast<unsigned>(count)));
  {
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < shards; ++w) {
      workers.emplace_back([&, w] {
        for (int i = static_cast<int>(w); i < count; i += static_cast<int>(shards)) {
          per_k[static_cast<std::size_t>(i)] = scan_k(k_range.lo + i, m_range);
        }
      });
    }
  }
  SearchReport report;
  for (int i = 0; i < count; ++i) {
    auto& scan = per_k[static_cast<std::size_t>(i)];
    report.hits.insert(report.hits.end(), scan.hits.begin(), scan.hits.end());
    if (scan.multi_crossing) report.multi_crossing_k.push_back(k_range.lo + i);
  }
  return report;
}

std::vector<SearchHit> find_solutions(KRange k_range, IntRange m_range, unsigned shards) {
  return search_box(k_range, std::move(m_range), shards).hits;
}

}  // namespace emlab
