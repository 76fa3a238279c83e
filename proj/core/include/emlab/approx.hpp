#pragma once

// Truncated Euler-Maclaurin approximants of S(m-1, k) evaluated at rational m.

#include "emlab/arith.hpp"

namespace emlab {

// A rational stand-in for the real evaluation point m, constrained to m >= 2.
class RealArg {
 public:
  explicit RealArg(Rat m);
  const Rat& m() const noexcept { return m_; }

 private:
  Rat m_;
};

/// ((m-1)^{k+1} - 1)/(k+1) + (1 + (m-1)^k)/2
Rat s_r(const RealArg& m, int k);

/// First correction term C = (k/12) ((m-1)^{k-1} - 1).
Rat correction_first(const RealArg& m, int k);

/// |C| / L with L = (m-1)^{k+1}/(k+1). Requires m >= 3.
Rat correction_ratio(const RealArg& m, int k);

/// s_r plus the first p correction terms. Terms past floor(k/2) vanish, so
/// any p >= floor(k/2) reproduces the exact sum at integer m.
Rat s_eml_truncated(const RealArg& m, int k, int p);

}  // namespace emlab
