#pragma once

// Exhaustive exact search for S(m-1, k) = m^k over finite (k, m) boxes.

#include <compare>
#include <vector>

#include "emlab/arith.hpp"

namespace emlab {

struct SearchHit {
  int k = 0;
  Int m;

  friend bool operator==(const SearchHit& a, const SearchHit& b) {
    return a.k == b.k && a.m == b.m;
  }
};

struct IntRange {
  Int lo;
  Int hi;
};

struct KRange {
  int lo = 0;
  int hi = 0;
};

/// S(m-1, k) == m^k. Requires k >= 1 and m >= 3.
bool check_pair(int k, const Int& m);

struct SearchReport {
  std::vector<SearchHit> hits;
  // k values for which S(m-1, k) - m^k changed sign more than once over
  // the scanned m range.
  std::vector<int> multi_crossing_k;
};

/// Scans every (k, m) in the box with a running sum per k, sharded by k over
/// `shards` threads. Output is in (k, m) order independent of sharding.
SearchReport search_box(KRange k_range, IntRange m_range, unsigned shards = 1);

std::vector<SearchHit> find_solutions(KRange k_range, IntRange m_range,
                                      unsigned shards = 1);

}  // namespace emlab
